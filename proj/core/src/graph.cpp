#include "xcomp/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

namespace xcomp {

VertexSet normalized(VertexSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

bool set_contains(const VertexSet& s, Vertex v) {
    return std::binary_search(s.begin(), s.end(), v);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Graph::Graph(int n) : n_(n), adj_(static_cast<size_t>(n) + 1) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u == v) throw std::invalid_argument("self-loop");
        if (u > v) std::swap(u, v);
        if (u < 1 || v > n_) throw std::invalid_argument("edge endpoint out of range");
        edges_.emplace_back(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());
}

void Graph::check_vertex(Vertex v) const {
    if (v < 1 || v > n_) throw std::out_of_range("vertex out of range");
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    const auto& list = adj_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[v];
}

int Graph::degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

VertexSet Graph::vertices() const {
    VertexSet out(static_cast<size_t>(n_));
    for (int v = 1; v <= n_; ++v) out[static_cast<size_t>(v) - 1] = v;
    return out;
}

VertexSet Graph::neighborhood(const VertexSet& s) const {
    VertexSet out;
    for (Vertex v : s)
        for (Vertex w : neighbors(v))
            if (!set_contains(s, w)) out.push_back(w);
    return normalized(std::move(out));
}

Graph Graph::complete(int n) {
    std::vector<Edge> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph Graph::path(int n) {
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, edges);
}

Graph Graph::cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(1, n);
    return Graph(n, edges);
}

Graph complement(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<Edge> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (!g.has_edge(u, v)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Vertex InducedSubgraph::new_id(Vertex old_id) const {
    auto it = std::lower_bound(to_old.begin() + 1, to_old.end(), old_id);
    if (it == to_old.end() || *it != old_id)
        throw std::out_of_range("vertex not in induced set");
    return static_cast<Vertex>(it - to_old.begin());
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    for (Vertex v : s)
        if (v < 1 || v > g.vertex_count()) throw std::out_of_range("vertex out of range");
    InducedSubgraph out;
    out.to_old.assign(1, 0);
    out.to_old.insert(out.to_old.end(), s.begin(), s.end());
    std::vector<Edge> edges;
    for (size_t i = 1; i < out.to_old.size(); ++i)
        for (size_t j = i + 1; j < out.to_old.size(); ++j)
            if (g.has_edge(out.to_old[i], out.to_old[j]))
                edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    out.graph = Graph(static_cast<int>(s.size()), edges);
    return out;
}

IdentifyResult identify(const Graph& g, const VertexSet& s) {
    if (s.empty()) throw std::invalid_argument("identify: empty vertex set");
    const VertexSet hood = g.neighborhood(s);
    const VertexSet rest = set_difference(g.vertices(), s);

    IdentifyResult out;
    out.to_new.assign(static_cast<size_t>(g.vertex_count()) + 1, 0);
    Vertex next = 0;
    for (Vertex v : rest) out.to_new[v] = ++next;
    out.merged = ++next;
    for (Vertex v : s) out.to_new[v] = out.merged;

    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (!set_contains(s, u) && !set_contains(s, v))
            edges.emplace_back(out.to_new[u], out.to_new[v]);
    for (Vertex v : hood) edges.emplace_back(out.to_new[v], out.merged);
    out.graph = Graph(next, edges);
    return out;
}

DisjointUnion disjoint_union(const std::vector<Graph>& gs) {
    DisjointUnion out;
    int total = 0;
    for (const Graph& g : gs) {
        out.offsets.push_back(total);
        total += g.vertex_count();
    }
    std::vector<Edge> edges;
    for (size_t i = 0; i < gs.size(); ++i)
        for (auto [u, v] : gs[i].edges())
            edges.emplace_back(u + out.offsets[i], v + out.offsets[i]);
    out.graph = Graph(total, edges);
    return out;
}

bool is_clique(const Graph& g, const VertexSet& s) {
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (!g.has_edge(s[i], s[j])) return false;
    return true;
}

bool is_independent_set(const Graph& g, const VertexSet& s) {
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (g.has_edge(s[i], s[j])) return false;
    return true;
}

bool is_forest(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> parent(static_cast<size_t>(n) + 1, 0);
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int start = 1; start <= n; ++start) {
        if (seen[start]) continue;
        seen[start] = 1;
        std::queue<int> queue;
        queue.push(start);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop();
            for (int w : g.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    parent[w] = v;
                    queue.push(w);
                } else if (w != parent[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_bipartite(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> side(static_cast<size_t>(n) + 1, -1);
    for (int start = 1; start <= n; ++start) {
        if (side[start] >= 0) continue;
        side[start] = 0;
        std::queue<int> queue;
        queue.push(start);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop();
            for (int w : g.neighbors(v)) {
                if (side[w] < 0) {
                    side[w] = 1 - side[v];
                    queue.push(w);
                } else if (side[w] == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

namespace {

// Shortest cycle length through the masked graph, or 0 when acyclic
// (respectively bipartite in odd mode). BFS candidate closure lengths
// always bound some cycle from above, and are attained for a root on a
// shortest (odd) cycle, so the minimum over roots is exact.
int shortest_cycle_length(const Graph& g, CycleMode mode, const std::vector<char>& alive) {
    const int n = g.vertex_count();
    int best = 0;
    if (mode == CycleMode::AllCycles) {
        std::vector<int> dist(static_cast<size_t>(n) + 1);
        std::vector<int> parent(static_cast<size_t>(n) + 1);
        for (int start = 1; start <= n; ++start) {
            if (!alive[start]) continue;
            std::fill(dist.begin(), dist.end(), -1);
            dist[start] = 0;
            parent[start] = 0;
            std::queue<int> queue;
            queue.push(start);
            while (!queue.empty()) {
                int v = queue.front();
                queue.pop();
                if (best && 2 * dist[v] + 1 >= best) break;
                for (int w : g.neighbors(v)) {
                    if (!alive[w]) continue;
                    if (dist[w] < 0) {
                        dist[w] = dist[v] + 1;
                        parent[w] = v;
                        queue.push(w);
                    } else if (w != parent[v]) {
                        int len = dist[v] + dist[w] + 1;
                        if (!best || len < best) best = len;
                    }
                }
            }
        }
    } else {
        // Bipartite double cover: dist to the opposite-parity copy of the
        // root equals the shortest odd closed walk through it.
        std::vector<std::array<int, 2>> dist(static_cast<size_t>(n) + 1);
        for (int start = 1; start <= n; ++start) {
            if (!alive[start]) continue;
            for (auto& d : dist) d = {-1, -1};
            dist[start][0] = 0;
            std::queue<std::pair<int, int>> queue;
            queue.emplace(start, 0);
            while (!queue.empty()) {
                auto [v, p] = queue.front();
                queue.pop();
                if (dist[start][1] >= 0) break;
                for (int w : g.neighbors(v)) {
                    if (!alive[w]) continue;
                    if (dist[w][1 - p] < 0) {
                        dist[w][1 - p] = dist[v][p] + 1;
                        queue.emplace(w, 1 - p);
                    }
                }
            }
            if (dist[start][1] >= 0 && (!best || dist[start][1] < best)) best = dist[start][1];
        }
    }
    return best;
}

struct CycleSearch {
    const Graph& g;
    const std::vector<char>& alive;
    int target_len;
    Vertex anchor;
    std::vector<std::array<int, 2>> dist_to_anchor;  // parity-aware, within {v >= anchor}
    std::vector<char> used;
    std::vector<Vertex> path;

    bool parity_dist_ok(Vertex v, int remaining) const {
        int d = dist_to_anchor[v][remaining & 1];
        return d >= 0 && d <= remaining;
    }

    bool extend(Vertex v) {
        const int depth = static_cast<int>(path.size());
        if (depth == target_len) {
            if (!g.has_edge(v, anchor)) return false;
            return path[1] < path[static_cast<size_t>(target_len) - 1];
        }
        for (Vertex w : g.neighbors(v)) {
            if (w <= anchor || !alive[w] || used[w]) continue;
            if (!parity_dist_ok(w, target_len - depth)) continue;
            used[w] = 1;
            path.push_back(w);
            if (extend(w)) return true;
            path.pop_back();
            used[w] = 0;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<Vertex>> find_violating_cycle(const Graph& g, CycleMode mode,
                                                        const std::vector<char>& alive) {
    const int n = g.vertex_count();
    const int target = shortest_cycle_length(g, mode, alive);
    if (target == 0) return std::nullopt;

    for (Vertex anchor = 1; anchor <= n; ++anchor) {
        if (!alive[anchor]) continue;
        CycleSearch search{g, alive, target, anchor, {}, {}, {}};
        // Distances restricted to the anchor plus vertices above it, so the
        // pruning bound matches the search space.
        search.dist_to_anchor.assign(static_cast<size_t>(n) + 1, {-1, -1});
        search.dist_to_anchor[anchor][0] = 0;
        std::queue<std::pair<Vertex, int>> queue;
        queue.emplace(anchor, 0);
        while (!queue.empty()) {
            auto [v, p] = queue.front();
            queue.pop();
            for (Vertex w : g.neighbors(v)) {
                if (w < anchor || !alive[w]) continue;
                if (search.dist_to_anchor[w][1 - p] < 0) {
                    search.dist_to_anchor[w][1 - p] = search.dist_to_anchor[v][p] + 1;
                    queue.emplace(w, 1 - p);
                }
            }
        }
        search.used.assign(static_cast<size_t>(n) + 1, 0);
        search.used[anchor] = 1;
        search.path = {anchor};
        if (search.extend(anchor)) return search.path;
    }
    return std::nullopt;
}

std::optional<std::vector<Vertex>> find_violating_cycle(const Graph& g, CycleMode mode) {
    std::vector<char> alive(static_cast<size_t>(g.vertex_count()) + 1, 1);
    return find_violating_cycle(g, mode, alive);
}

namespace {

// Iterated neighborhood-color refinement; returns per-vertex color ids that
// are comparable across the two input graphs.
std::pair<std::vector<int>, std::vector<int>> refine_colors(const Graph& g, const Graph& h) {
    const int n = g.vertex_count();
    std::vector<int> cg(static_cast<size_t>(n) + 1), ch(static_cast<size_t>(n) + 1);
    for (int v = 1; v <= n; ++v) {
        cg[v] = g.degree(v);
        ch[v] = h.degree(v);
    }
    for (int round = 0; round < 3; ++round) {
        std::map<std::pair<int, std::vector<int>>, int> ids;
        auto next_color = [&](const Graph& graph, const std::vector<int>& colors, int v) {
            std::vector<int> sig;
            for (int w : graph.neighbors(v)) sig.push_back(colors[w]);
            std::sort(sig.begin(), sig.end());
            auto key = std::make_pair(colors[v], std::move(sig));
            auto [it, inserted] = ids.emplace(std::move(key), static_cast<int>(ids.size()));
            return it->second;
        };
        std::vector<int> ng(cg), nh(ch);
        for (int v = 1; v <= n; ++v) ng[v] = next_color(g, cg, v);
        for (int v = 1; v <= n; ++v) nh[v] = next_color(h, ch, v);
        cg = std::move(ng);
        ch = std::move(nh);
    }
    return {cg, ch};
}

struct IsoSearch {
    const Graph& g;
    const Graph& h;
    const std::vector<int>& cg;
    const std::vector<int>& ch;
    std::vector<Vertex> order;       // vertices of g in mapping order
    std::vector<Vertex> image;       // image[v] in h, 0 = unmapped
    std::vector<char> taken;         // vertices of h already used

    bool match(size_t pos) {
        if (pos == order.size()) return true;
        const Vertex v = order[pos];
        for (Vertex w = 1; w <= h.vertex_count(); ++w) {
            if (taken[w] || cg[v] != ch[w]) continue;
            bool ok = true;
            for (Vertex u : g.neighbors(v)) {
                if (image[u] && !h.has_edge(image[u], w)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                // Non-neighbors must stay non-adjacent; checking mapped
                // neighbors of w catches that side.
                for (Vertex x : h.neighbors(w)) {
                    if (!ok) break;
                    if (!taken[x]) continue;
                    Vertex pre = 0;
                    for (Vertex u = 1; u <= g.vertex_count() && !pre; ++u)
                        if (image[u] == x) pre = u;
                    if (pre && !g.has_edge(v, pre)) ok = false;
                }
            }
            if (!ok) continue;
            image[v] = w;
            taken[w] = 1;
            if (match(pos + 1)) return true;
            image[v] = 0;
            taken[w] = 0;
        }
        return false;
    }
};

}  // namespace

bool are_isomorphic(const Graph& g, const Graph& h) {
    if (g.vertex_count() != h.vertex_count()) return false;
    if (g.edge_count() != h.edge_count()) return false;
    const int n = g.vertex_count();
    if (n == 0) return true;

    auto [cg, ch] = refine_colors(g, h);
    std::map<int, int> count_g, count_h;
    for (int v = 1; v <= n; ++v) {
        ++count_g[cg[v]];
        ++count_h[ch[v]];
    }
    if (count_g != count_h) return false;

    IsoSearch search{g, h, cg, ch, {}, {}, {}};
    search.order.resize(static_cast<size_t>(n));
    for (int v = 1; v <= n; ++v) search.order[static_cast<size_t>(v) - 1] = v;
    // Rare color classes first, then high degree: fail fast.
    std::sort(search.order.begin(), search.order.end(), [&](Vertex a, Vertex b) {
        auto ka = std::make_tuple(count_g[cg[a]], -g.degree(a), a);
        auto kb = std::make_tuple(count_g[cg[b]], -g.degree(b), b);
        return ka < kb;
    });
    search.image.assign(static_cast<size_t>(n) + 1, 0);
    search.taken.assign(static_cast<size_t>(n) + 1, 0);
    return search.match(0);
}

}  // namespace xcomp
