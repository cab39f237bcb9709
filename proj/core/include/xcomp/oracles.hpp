#pragma once

#include <stdexcept>
#include <vector>

#include "xcomp/graph.hpp"
#include "xcomp/instance.hpp"

namespace xcomp {

// Exact solvers operate on bitmask adjacency and are capped at 64 vertices.
class SizeLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CliqueResult {
    int size = 0;
    VertexSet members;  // lexicographically least maximum clique
};

struct CoverResult {
    int size = 0;
    VertexSet members;
};

struct ChromaticResult {
    int value = 0;
    std::vector<int> colors;  // 1-based vertex -> color in 1..value
};


struct TransversalResult {
    long long weight = 0;
    VertexSet members;
};

// Maximum clique by recursive expansion with a greedy-coloring bound.
CliqueResult max_clique(const Graph& g);

// Minimum vertex cover by branching on an uncovered edge.
CoverResult min_vertex_cover(const Graph& g);

// Decision variant with saturation-first backtracking; fills *coloring
// (1-based) when non-null and the answer is true.
bool is_k_colorable(const Graph& g, int k, std::vector<int>* coloring = nullptr);

// Exact chromatic number; chi(empty) = 0, chi(edgeless, n >= 1) = 1.
ChromaticResult chromatic_number(const Graph& g);

// Minimum-weight transversal (unit weights when `weights` is null) by
// branching on the vertices of a shortest violating cycle.
TransversalResult min_transversal(const Graph& g, TransversalMode mode,
                                  const std::vector<long long>* weights = nullptr);

// Dispatches to the matching solver and compares against the target.
Verdict decide(const ProblemInstance& inst);

}  // namespace xcomp
