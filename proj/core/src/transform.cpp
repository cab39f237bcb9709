#include "xcomp/transform.hpp"

#include <stdexcept>

namespace xcomp {

ComplementChain complement_chain(const ProblemInstance& inst) {
    if (inst.kind != Kind::CliqueByVc)
        throw std::invalid_argument("complement chain expects a clique-by-vc instance");
    if (!validate_witness(inst).empty()) throw std::invalid_argument("invalid witness");
    const int n = inst.graph.vertex_count();
    if (inst.target > n)
        throw std::invalid_argument("target exceeds vertex count; complement target would be negative");

    const Graph co = complement(inst.graph);
    ComplementChain out;
    out.independent_set.kind = Kind::IsByCliqueDeletion;
    out.independent_set.graph = co;
    out.independent_set.target = inst.target;
    out.independent_set.witness = inst.witness;
    out.vertex_cover.kind = Kind::VcByCliqueDeletion;
    out.vertex_cover.graph = co;
    out.vertex_cover.target = n - inst.target;
    out.vertex_cover.witness = inst.witness;
    return out;
}

std::vector<VertexSet> clique_cover(const Graph& g, const VertexSet& z) {
    const VertexSet outside = set_difference(g.vertices(), z);
    if (!is_clique(g, outside))
        throw std::invalid_argument("clique cover expects G - Z to be a clique");

    std::vector<VertexSet> family;
    for (auto [u, v] : g.edges())
        if (set_contains(z, u) && set_contains(z, v)) family.push_back({u, v});
    if (!outside.empty()) family.push_back(outside);
    for (Vertex v : z) {
        VertexSet member{v};
        for (Vertex w : g.neighbors(v))
            if (!set_contains(z, w)) member.push_back(w);
        family.push_back(normalized(std::move(member)));
    }
    return family;
}

ProblemInstance apexify(const ProblemInstance& inst, TransversalMode mode) {
    if (inst.kind != Kind::VcByCliqueDeletion)
        throw std::invalid_argument("apexify expects a vc-by-clique-deletion instance");
    if (!validate_witness(inst).empty()) throw std::invalid_argument("invalid witness");

    const auto family = clique_cover(inst.graph, *inst.witness);
    const int n = inst.graph.vertex_count();
    std::vector<Edge> edges = inst.graph.edges();
    VertexSet apexes;
    int next = n;
    for (const VertexSet& member : family) {
        ++next;
        apexes.push_back(next);
        for (Vertex v : member) edges.emplace_back(v, next);
    }

    ProblemInstance out;
    out.kind = mode == TransversalMode::Fvs ? Kind::FvsByCliqueDeletion : Kind::OctByCliqueDeletion;
    out.graph = Graph(next, edges);
    out.target = inst.target;
    out.witness = set_union(*inst.witness, apexes);
    return out;
}

}  // namespace xcomp
