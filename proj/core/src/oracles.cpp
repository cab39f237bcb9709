#include "xcomp/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>

namespace xcomp {

namespace {

constexpr int kSolverLimit = 64;

uint64_t bit_of(Vertex v) { return uint64_t{1} << (v - 1); }

std::vector<uint64_t> adjacency_masks(const Graph& g) {
    if (g.vertex_count() > kSolverLimit)
        throw SizeLimitError("graph exceeds the 64-vertex solver limit");
    std::vector<uint64_t> adj(static_cast<size_t>(g.vertex_count()) + 1, 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= bit_of(v);
        adj[v] |= bit_of(u);
    }
    return adj;
}

struct CliqueSolver {
    const std::vector<uint64_t>& adj;
    int best = 0;

    int color_bound(uint64_t p) const {
        int colors = 0;
        while (p) {
            ++colors;
            uint64_t cand = p;
            uint64_t cls = 0;
            while (cand) {
                int v = std::countr_zero(cand) + 1;
                cls |= bit_of(v);
                cand &= ~bit_of(v);
                cand &= ~adj[v];
            }
            p &= ~cls;
        }
        return colors;
    }

    void expand(uint64_t p, int rsize) {
        if (p == 0) {
            best = std::max(best, rsize);
            return;
        }
        if (rsize + color_bound(p) <= best) return;
        while (p) {
            if (rsize + std::popcount(p) <= best) return;
            int v = std::countr_zero(p) + 1;
            expand(p & adj[v], rsize + 1);
            p &= ~bit_of(v);
        }
    }

    bool exists(uint64_t p, int rsize, int target) {
        if (rsize == target) return true;
        if (rsize + std::popcount(p) < target) return false;
        if (rsize + color_bound(p) < target) return false;
        while (p) {
            int v = std::countr_zero(p) + 1;
            p &= ~bit_of(v);
            if (exists(p & adj[v], rsize + 1, target)) return true;
        }
        return false;
    }
};

}  // namespace

CliqueResult max_clique(const Graph& g) {
    const int n = g.vertex_count();
    auto adj = adjacency_masks(g);
    const uint64_t all = n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;

    CliqueSolver solver{adj};
    solver.expand(all, 0);

    CliqueResult out;
    out.size = solver.best;
    // Lexicographically least optimum: force members one by one.
    uint64_t p = all;
    int chosen = 0;
    while (chosen < out.size) {
        uint64_t cand = p;
        while (cand) {
            int v = std::countr_zero(cand) + 1;
            cand &= ~bit_of(v);
            uint64_t rest = p & adj[v] & ~(bit_of(v) | (bit_of(v) - 1));
            if (solver.exists(rest, chosen + 1, out.size)) {
                out.members.push_back(v);
                ++chosen;
                p = rest;
                break;
            }
        }
    }
    return out;
}

namespace {

struct VcSolver {
    const Graph& g;
    std::vector<char> in_cover;
    VertexSet cur;
    int best;
    VertexSet best_set;

    void rec() {
        if (static_cast<int>(cur.size()) >= best) return;
        const Edge* open = nullptr;
        for (const auto& e : g.edges()) {
            if (!in_cover[e.first] && !in_cover[e.second]) {
                open = &e;
                break;
            }
        }
        if (!open) {
            best = static_cast<int>(cur.size());
            best_set = normalized(cur);
            return;
        }
        if (static_cast<int>(cur.size()) + 1 >= best) return;
        for (Vertex v : {open->first, open->second}) {
            in_cover[v] = 1;
            cur.push_back(v);
            rec();
            cur.pop_back();
            in_cover[v] = 0;
        }
    }
};

}  // namespace

CoverResult min_vertex_cover(const Graph& g) {
    if (g.vertex_count() > kSolverLimit)
        throw SizeLimitError("graph exceeds the 64-vertex solver limit");
    VcSolver solver{g, std::vector<char>(static_cast<size_t>(g.vertex_count()) + 1, 0),
                    {}, g.vertex_count() + 1, {}};
    solver.rec();
    if (solver.best > g.vertex_count()) {
        solver.best = g.vertex_count();
        solver.best_set = g.vertices();
    }
    return CoverResult{solver.best, solver.best_set};
}

namespace {

struct ColorSolver {
    const Graph& g;
    int k;
    std::vector<int> color;  // 1-based, 0 = unassigned
    int assigned = 0;

    bool solve(int max_used) {
        if (assigned == g.vertex_count()) return true;
        // Saturation-first: most distinct neighbor colors, then degree,
        // then smallest id.
        int pick = 0, pick_sat = -1, pick_deg = -1;
        std::vector<char> seen(static_cast<size_t>(k) + 1);
        for (int v = 1; v <= g.vertex_count(); ++v) {
            if (color[v]) continue;
            std::fill(seen.begin(), seen.end(), 0);
            int sat = 0;
            for (int w : g.neighbors(v))
                if (color[w] && !seen[color[w]]) {
                    seen[color[w]] = 1;
                    ++sat;
                }
            int deg = g.degree(v);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        const int cap = std::min(k, max_used + 1);
        for (int c = 1; c <= cap; ++c) {
            bool ok = true;
            for (int w : g.neighbors(pick)) {
                if (color[w] == c) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            color[pick] = c;
            ++assigned;
            if (solve(std::max(max_used, c))) return true;
            color[pick] = 0;
            --assigned;
        }
        return false;
    }
};

}  // namespace

bool is_k_colorable(const Graph& g, int k, std::vector<int>* coloring) {
    const int n = g.vertex_count();
    if (n == 0) {
        if (coloring) coloring->assign(1, 0);
        return true;
    }
    if (k <= 0) return false;
    if (n > kSolverLimit) throw SizeLimitError("graph exceeds the 64-vertex solver limit");

    auto clique = max_clique(g);
    if (clique.size > k) return false;

    ColorSolver solver{g, k, std::vector<int>(static_cast<size_t>(n) + 1, 0), 0};
    // Pre-color a maximum clique: its vertices need pairwise distinct
    // colors anyway, which anchors the color symmetry.
    int next = 0;
    for (Vertex v : clique.members) solver.color[v] = ++next;
    solver.assigned = clique.size;
    if (!solver.solve(clique.size)) return false;
    if (coloring) *coloring = solver.color;
    return true;
}

ChromaticResult chromatic_number(const Graph& g) {
    ChromaticResult out;
    const int n = g.vertex_count();
    if (n == 0) {
        out.colors.assign(1, 0);
        return out;
    }
    const int lower = max_clique(g).size;
    for (int k = lower;; ++k) {
        std::vector<int> colors;
        if (is_k_colorable(g, k, &colors)) {
            out.value = k;
            out.colors = std::move(colors);
            return out;
        }
    }
}

namespace {

struct TransversalSolver {
    const Graph& g;
    CycleMode mode;
    const std::vector<long long>& weight;
    std::vector<char> alive;
    VertexSet deleted;
    long long best = std::numeric_limits<long long>::max();
    VertexSet best_set;

    void rec(long long cur) {
        if (cur >= best) return;
        auto cyc = find_violating_cycle(g, mode, alive);
        if (!cyc) {
            best = cur;
            best_set = normalized(deleted);
            return;
        }
        for (Vertex v : *cyc) {
            alive[v] = 0;
            deleted.push_back(v);
            rec(cur + weight[v]);
            deleted.pop_back();
            alive[v] = 1;
        }
    }
};

}  // namespace

TransversalResult min_transversal(const Graph& g, TransversalMode mode,
                                  const std::vector<long long>* weights) {
    const int n = g.vertex_count();
    if (n > kSolverLimit) throw SizeLimitError("graph exceeds the 64-vertex solver limit");
    std::vector<long long> unit;
    if (!weights) {
        unit.assign(static_cast<size_t>(n) + 1, 1);
        weights = &unit;
    }
    const CycleMode cm = mode == TransversalMode::Fvs ? CycleMode::AllCycles : CycleMode::OddCycles;
    TransversalSolver solver{g, cm, *weights,
                             std::vector<char>(static_cast<size_t>(n) + 1, 1), {}, {}, {}};
    solver.best = std::numeric_limits<long long>::max();
    solver.rec(0);
    return TransversalResult{solver.best, solver.best_set};
}

Verdict decide(const ProblemInstance& inst) {
    Verdict out;
    switch (inst.kind) {
        case Kind::Clique:
        case Kind::CliqueByVc: {
            auto r = max_clique(inst.graph);
            out.yes = r.size >= inst.target;
            out.value = r.size;
            if (out.yes) out.witness_set = r.members;
            break;
        }
        case Kind::IsByCliqueDeletion: {
            auto r = max_clique(complement(inst.graph));
            out.yes = r.size >= inst.target;
            out.value = r.size;
            if (out.yes) out.witness_set = r.members;
            break;
        }
        case Kind::VertexCover:
        case Kind::VcByCliqueDeletion: {
            auto r = min_vertex_cover(inst.graph);
            out.yes = r.size <= inst.target;
            out.value = r.size;
            if (out.yes) out.witness_set = r.members;
            break;
        }
        case Kind::TriangleSplit3Coloring:
        case Kind::ChromaticByVc: {
            auto r = chromatic_number(inst.graph);
            out.yes = r.value <= inst.target;
            out.value = r.value;
            if (out.yes) out.witness_coloring = r.colors;
            break;
        }
        case Kind::FvsByCliqueDeletion:
        case Kind::OctByCliqueDeletion:
        case Kind::WeightedFvsByVc:
        case Kind::WeightedOctByVc: {
            const bool fvs = inst.kind == Kind::FvsByCliqueDeletion ||
                             inst.kind == Kind::WeightedFvsByVc;
            const std::vector<long long>* w =
                kind_is_weighted(inst.kind) ? &*inst.weights : nullptr;
            auto r = min_transversal(inst.graph, fvs ? TransversalMode::Fvs : TransversalMode::Oct, w);
            out.yes = r.weight <= inst.target;
            out.value = r.weight;
            if (out.yes) out.witness_set = r.members;
            break;
        }
    }
    return out;
}

}  // namespace xcomp
