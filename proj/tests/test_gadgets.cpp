#include <doctest.h>

#include <algorithm>

#include "naive_oracles.hpp"
#include "xcomp/gadgets.hpp"
#include "xcomp/oracles.hpp"

using namespace xcomp;

namespace {

Graph from_mask(int n, uint64_t mask) {
    std::vector<Edge> edges;
    int bit = 0;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) {
            if (mask & (uint64_t{1} << bit)) edges.emplace_back(u, v);
            ++bit;
        }
    return Graph(n, edges);
}

// Connected components of g restricted to `keep`, each sorted.
std::vector<VertexSet> components_within(const Graph& g, const VertexSet& keep) {
    std::vector<VertexSet> out;
    std::vector<char> seen(static_cast<size_t>(g.vertex_count()) + 1, 0);
    for (Vertex start : keep) {
        if (seen[start]) continue;
        VertexSet component;
        std::vector<Vertex> stack{start};
        seen[start] = 1;
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            component.push_back(v);
            for (Vertex w : g.neighbors(v))
                if (set_contains(keep, w) && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        out.push_back(normalized(std::move(component)));
    }
    return out;
}

}  // namespace

TEST_CASE("inflation of a single edge is the 9-cycle") {
    const InflationResult result = inflate(Graph::complete(2));
    CHECK(result.graph.vertex_count() == 9);
    CHECK(result.graph.edge_count() == 9);
    CHECK(are_isomorphic(result.graph, Graph::cycle(9)));
}

TEST_CASE("inflation counts") {
    const InflationResult result = inflate(Graph::complete(3));
    CHECK(result.graph.vertex_count() == 24);  // n + 7m
    CHECK(result.graph.edge_count() == 27);    // 9m
    CHECK(inflate(Graph(3)).graph == Graph(3));
}

TEST_CASE("inflation scaffold structure") {
    const Graph g = from_mask(4, 0b101011);
    const InflationResult result = inflate(g);
    CHECK(result.scaffold.size() == static_cast<size_t>(g.edge_count()));
    CHECK(is_independent_set(result.graph, g.vertices()));

    // Removing the original vertices leaves, per edge, one 2-vertex path and
    // one 5-vertex path ta1-ta2-tri-tb2-tb1.
    VertexSet scaffold_vertices;
    for (int v = g.vertex_count() + 1; v <= result.graph.vertex_count(); ++v)
        scaffold_vertices.push_back(v);
    const auto components = components_within(result.graph, scaffold_vertices);
    CHECK(components.size() == 2 * result.scaffold.size());
    for (const ScaffoldUnit& unit : result.scaffold) {
        const VertexSet pair = normalized({unit.mid1, unit.mid2});
        const VertexSet legs = normalized({unit.ta1, unit.ta2, unit.tri, unit.tb1, unit.tb2});
        CHECK(std::count(components.begin(), components.end(), pair) == 1);
        CHECK(std::count(components.begin(), components.end(), legs) == 1);
        CHECK(result.graph.degree(unit.tri) == 2);
        CHECK(result.graph.has_edge(unit.ta2, unit.tri));
        CHECK(result.graph.has_edge(unit.tb2, unit.tri));
    }
}

TEST_CASE("selector gadget shape") {
    const K4BoxResult box = k4_in_a_box();
    CHECK(box.graph.vertex_count() == 8);
    CHECK(box.graph.edge_count() == 14);
    int triangles = 0;
    for (Vertex a = 1; a <= 8; ++a)
        for (Vertex b = a + 1; b <= 8; ++b)
            for (Vertex c = b + 1; c <= 8; ++c)
                if (box.graph.has_edge(a, b) && box.graph.has_edge(b, c) &&
                    box.graph.has_edge(a, c))
                    ++triangles;
    CHECK(triangles == 8);
    CHECK(box.graph.has_edge(box.zero_terminals.first, box.zero_terminals.second));
    CHECK(box.graph.has_edge(box.one_terminals.first, box.one_terminals.second));
}

TEST_CASE("triangle split reduction shapes") {
    const ProblemInstance from_edge = triangle_split_reduction(Graph::complete(2));
    CHECK(from_edge.graph.vertex_count() == 5);
    CHECK(from_edge.graph.edge_count() == 6);
    CHECK(chromatic_number(from_edge.graph).value == 3);
    CHECK(validate_witness(from_edge).empty());

    // K4 needs four colors, so its reduction (22 vertices: 4 + 3*6) must not
    // be 3-colorable either.
    const ProblemInstance from_k4 = triangle_split_reduction(Graph::complete(4));
    CHECK(from_k4.graph.vertex_count() == 22);
    CHECK_FALSE(decide(from_k4).yes);

    const ProblemInstance untouched = triangle_split_reduction(Graph(2));
    CHECK(untouched.graph == Graph(2));
    CHECK(untouched.partition->x == VertexSet{1, 2});
    CHECK(untouched.partition->triangles.empty());
    CHECK(chromatic_number(untouched.graph).value == 1);
}

TEST_CASE("reduction keeps no original edge") {
    const Graph g = from_mask(4, 0b111001);
    const ProblemInstance reduced = triangle_split_reduction(g);
    for (auto [u, v] : g.edges()) CHECK_FALSE(reduced.graph.has_edge(u, v));
}

TEST_CASE("3-colorability is preserved on every graph up to 4 vertices") {
    for (int n = 0; n <= 4; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (uint64_t mask = 0; mask < (uint64_t{1} << pairs); ++mask) {
            const Graph g = from_mask(n, mask);
            const ProblemInstance reduced = triangle_split_reduction(g);
            CHECK(validate_witness(reduced).empty());
            CHECK(naive::has_proper_coloring(g, 3) == is_k_colorable(reduced.graph, 3));
        }
    }
}

TEST_CASE("inflation transfers cover thresholds on sampled graphs") {
    for (uint64_t mask : {0b000011ull, 0b001101ull, 0b110110ull, 0b111111ull}) {
        const Graph g = from_mask(4, mask);
        const Graph inflated = inflate(g).graph;
        const int vc = min_vertex_cover(g).size;
        CHECK(min_transversal(inflated, TransversalMode::Fvs).weight == vc);
        CHECK(min_transversal(inflated, TransversalMode::Oct).weight == vc);
    }
}
