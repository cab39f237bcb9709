#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace xcomp {

using Vertex = int;
// Normalized edge: first < second.
using Edge = std::pair<Vertex, Vertex>;
// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

VertexSet normalized(VertexSet s);
bool set_contains(const VertexSet& s, Vertex v);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);

// Immutable simple undirected graph on vertices 1..n.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    // Normalizes edges to (min,max), sorts, drops duplicates.
    // Throws std::invalid_argument on self-loops or out-of-range endpoints.
    Graph(int n, const std::vector<Edge>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    bool has_edge(Vertex u, Vertex v) const;
    const std::vector<Vertex>& neighbors(Vertex v) const;
    int degree(Vertex v) const;
    VertexSet vertices() const;
    // Open neighborhood N(S): all vertices adjacent to S, minus S itself.
    VertexSet neighborhood(const VertexSet& s) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

    static Graph edgeless(int n) { return Graph(n); }
    static Graph complete(int n);
    static Graph path(int n);
    static Graph cycle(int n);

private:
    void check_vertex(Vertex v) const;

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;  // 1-based, slot 0 unused
};

struct InducedSubgraph {
    Graph graph;
    // to_old[i] = original id of new vertex i (1-based, slot 0 unused).
    std::vector<Vertex> to_old;
    // Inverse lookup; old_id must be a member of the inducing set.
    Vertex new_id(Vertex old_id) const;
};

struct IdentifyResult {
    Graph graph;
    // to_new[v] = image of old vertex v (1-based); all of s maps to the
    // merged vertex, which carries the highest new index.
    std::vector<Vertex> to_new;
    Vertex merged;
};

struct DisjointUnion {
    Graph graph;
    // offsets[i] + v = id of input i's vertex v in the union.
    std::vector<int> offsets;
};

Graph complement(const Graph& g);
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);
IdentifyResult identify(const Graph& g, const VertexSet& s);
DisjointUnion disjoint_union(const std::vector<Graph>& gs);

bool is_clique(const Graph& g, const VertexSet& s);
bool is_independent_set(const Graph& g, const VertexSet& s);
bool is_forest(const Graph& g);
bool is_bipartite(const Graph& g);

enum class CycleMode { AllCycles, OddCycles };

// Shortest cycle (or shortest odd cycle) as its canonical vertex sequence:
// starts at the cycle's minimum vertex, second element smaller than last.
// Ties between equal-length cycles break to the lexicographically smallest
// sequence. Returns nullopt when no such cycle exists.
std::optional<std::vector<Vertex>> find_violating_cycle(const Graph& g, CycleMode mode);
// Same, restricted to vertices with alive[v] != 0 (alive is 1-based).
std::optional<std::vector<Vertex>> find_violating_cycle(const Graph& g, CycleMode mode,
                                                        const std::vector<char>& alive);

// Exact isomorphism test via degree-refined backtracking; intended for
// graphs up to ~64 vertices.
bool are_isomorphic(const Graph& g, const Graph& h);

}  // namespace xcomp
