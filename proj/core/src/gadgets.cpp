#include "xcomp/gadgets.hpp"

namespace xcomp {

InflationResult inflate(const Graph& g) {
    const int n = g.vertex_count();
    InflationResult out;
    out.edge_order = g.edges();  // already sorted (min,max) ascending
    out.original.assign(static_cast<size_t>(n) + 1, 0);
    for (int v = 1; v <= n; ++v) out.original[v] = v;

    std::vector<Edge> edges;
    int next = n;
    for (auto [u, v] : out.edge_order) {
        ScaffoldUnit unit{};
        unit.mid1 = ++next;
        unit.mid2 = ++next;
        unit.tri = ++next;
        unit.ta1 = ++next;
        unit.ta2 = ++next;
        unit.tb1 = ++next;
        unit.tb2 = ++next;
        edges.emplace_back(u, unit.mid1);
        edges.emplace_back(unit.mid1, unit.mid2);
        edges.emplace_back(unit.mid2, v);
        edges.emplace_back(u, unit.ta1);
        edges.emplace_back(unit.ta1, unit.ta2);
        edges.emplace_back(unit.ta2, unit.tri);
        edges.emplace_back(v, unit.tb1);
        edges.emplace_back(unit.tb1, unit.tb2);
        edges.emplace_back(unit.tb2, unit.tri);
        out.scaffold.push_back(unit);
    }
    out.graph = Graph(next, edges);
    return out;
}

K4BoxResult k4_in_a_box() {
    // a=1, b=2, c=3, d=4; subdivision vertices 5..8 on the boundary pairs.
    std::vector<Edge> edges = {
        {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4},
        {1, 5}, {2, 5},
        {2, 6}, {3, 6},
        {3, 7}, {4, 7},
        {4, 8}, {1, 8},
    };
    K4BoxResult out;
    out.graph = Graph(8, edges);
    out.zero_terminals = {1, 3};
    out.one_terminals = {2, 4};
    return out;
}

ProblemInstance triangle_split_reduction(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<Edge> edges;
    TrianglePartition part;
    part.x = g.vertices();

    int next = n;
    for (auto [u, v] : g.edges()) {
        const Vertex a = ++next;
        const Vertex b = ++next;
        const Vertex c = ++next;
        edges.emplace_back(a, b);
        edges.emplace_back(b, c);
        edges.emplace_back(a, c);
        edges.emplace_back(u, a);
        edges.emplace_back(v, b);
        edges.emplace_back(v, c);
        part.triangles.push_back({a, b, c});
    }

    ProblemInstance inst;
    inst.kind = Kind::TriangleSplit3Coloring;
    inst.graph = Graph(next, edges);
    inst.target = 3;
    inst.partition = std::move(part);
    return inst;
}

}  // namespace xcomp
