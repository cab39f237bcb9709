#include "xcomp/fpt.hpp"

#include <algorithm>
#include <stdexcept>

namespace xcomp {

namespace {

void require(const ProblemInstance& inst, Kind kind) {
    if (inst.kind != kind)
        throw std::invalid_argument("instance kind does not match the solver");
    if (!validate_witness(inst).empty())
        throw std::invalid_argument("instance witness is invalid");
}

}  // namespace

Verdict fpt_clique_by_vc(const ProblemInstance& inst) {
    require(inst, Kind::CliqueByVc);
    const Graph& g = inst.graph;
    const VertexSet& z = *inst.witness;
    const VertexSet outside = set_difference(g.vertices(), z);
    const int l = inst.target;

    Verdict out;
    VertexSet clique;
    // DFS over cliques inside Z, members ascending.
    auto search = [&](auto&& self, size_t from) -> bool {
        const int size = static_cast<int>(clique.size());
        if (size >= l) {
            out.yes = true;
            out.witness_set = clique;
            return true;
        }
        if (size >= l - 1) {
            for (Vertex v : outside) {
                bool adjacent_to_all = true;
                for (Vertex u : clique)
                    if (!g.has_edge(u, v)) {
                        adjacent_to_all = false;
                        break;
                    }
                if (adjacent_to_all) {
                    out.yes = true;
                    out.witness_set = set_union(clique, {v});
                    return true;
                }
            }
        }
        for (size_t i = from; i < z.size(); ++i) {
            bool extends = true;
            for (Vertex u : clique)
                if (!g.has_edge(u, z[i])) {
                    extends = false;
                    break;
                }
            if (!extends) continue;
            clique.push_back(z[i]);
            if (self(self, i + 1)) return true;
            clique.pop_back();
        }
        return false;
    };
    search(search, 0);
    return out;
}

std::vector<ProblemInstance> turing_kernel_clique_by_vc(const ProblemInstance& inst) {
    require(inst, Kind::CliqueByVc);
    const VertexSet& z = *inst.witness;
    const VertexSet outside = set_difference(inst.graph.vertices(), z);

    auto kernel_instance = [&](const VertexSet& keep) {
        InducedSubgraph sub = induced_subgraph(inst.graph, keep);
        ProblemInstance out;
        out.kind = Kind::CliqueByVc;
        out.graph = sub.graph;
        out.target = inst.target;
        VertexSet image;
        for (Vertex v : z) image.push_back(sub.new_id(v));
        out.witness = normalized(std::move(image));
        return out;
    };

    std::vector<ProblemInstance> out;
    out.push_back(kernel_instance(z));
    for (Vertex v : outside) out.push_back(kernel_instance(set_union(z, {v})));
    return out;
}

Verdict fpt_chromatic_by_vc(const ProblemInstance& inst) {
    require(inst, Kind::ChromaticByVc);
    const Graph& g = inst.graph;
    const VertexSet& z = *inst.witness;
    const int l = inst.target;
    const int n = g.vertex_count();

    Verdict out;
    if (n == 0) {
        out.yes = true;
        return out;
    }
    if (l >= static_cast<int>(z.size()) + 1) {
        // chi(G) <= |Z|+1: color Z distinctly, outside vertices share one
        // extra color (they form an independent set).
        out.yes = true;
        std::vector<int> colors(static_cast<size_t>(n) + 1,
                                static_cast<int>(z.size()) + 1);
        colors[0] = 0;
        for (size_t i = 0; i < z.size(); ++i) colors[z[i]] = static_cast<int>(i) + 1;
        out.witness_coloring = std::move(colors);
        return out;
    }
    if (l == 0) return out;  // n >= 1 needs at least one color

    const VertexSet outside = set_difference(g.vertices(), z);
    std::vector<int> color(static_cast<size_t>(n) + 1, 0);

    auto extends = [&]() {
        std::vector<int> full = color;
        for (Vertex v : outside) {
            std::vector<char> used(static_cast<size_t>(l) + 1, 0);
            for (Vertex w : g.neighbors(v))
                if (color[w]) used[color[w]] = 1;
            int free = 0;
            for (int c = 1; c <= l && !free; ++c)
                if (!used[c]) free = c;
            if (!free) return false;
            full[v] = free;
        }
        out.yes = true;
        out.witness_coloring = std::move(full);
        return true;
    };

    // Lexicographic enumeration of proper colorings of G[Z]; the least
    // vertex is pinned to color 1 to cut color symmetry.
    auto enumerate = [&](auto&& self, size_t pos) -> bool {
        if (pos == z.size()) return extends();
        const Vertex v = z[pos];
        const int cap = pos == 0 ? 1 : l;
        for (int c = 1; c <= cap; ++c) {
            bool proper = true;
            for (Vertex w : g.neighbors(v))
                if (color[w] == c) {
                    proper = false;
                    break;
                }
            if (!proper) continue;
            color[v] = c;
            if (self(self, pos + 1)) return true;
            color[v] = 0;
        }
        return false;
    };
    enumerate(enumerate, 0);
    return out;
}

Verdict fpt_transversal_by_clique_deletion(const ProblemInstance& inst, TransversalMode mode) {
    require(inst, mode == TransversalMode::Fvs ? Kind::FvsByCliqueDeletion
                                               : Kind::OctByCliqueDeletion);
    const Graph& g = inst.graph;
    const VertexSet& z = *inst.witness;
    const VertexSet rest = set_difference(g.vertices(), z);
    const int n = g.vertex_count();
    const int l = inst.target;
    if (z.size() > 30) throw SizeLimitError("deletion set too large for subset enumeration");
    const CycleMode cm =
        mode == TransversalMode::Fvs ? CycleMode::AllCycles : CycleMode::OddCycles;

    std::vector<VertexSet> avoided{{}};
    for (size_t i = 0; i < rest.size(); ++i) {
        avoided.push_back({rest[i]});
        for (size_t j = i + 1; j < rest.size(); ++j) avoided.push_back({rest[i], rest[j]});
    }

    Verdict out;
    std::vector<char> alive(static_cast<size_t>(n) + 1, 1);
    for (const VertexSet& a : avoided) {
        for (uint64_t mask = 0; mask < (uint64_t{1} << z.size()); ++mask) {
            VertexSet candidate = set_difference(rest, a);
            for (size_t i = 0; i < z.size(); ++i)
                if (mask & (uint64_t{1} << i)) candidate.push_back(z[i]);
            candidate = normalized(std::move(candidate));
            if (static_cast<int>(candidate.size()) > l) continue;
            std::fill(alive.begin(), alive.end(), 1);
            for (Vertex v : candidate) alive[v] = 0;
            if (!find_violating_cycle(g, cm, alive)) {
                out.yes = true;
                out.witness_set = candidate;
                return out;
            }
        }
    }
    return out;
}

}  // namespace xcomp
