#pragma once

#include <vector>

#include "xcomp/instance.hpp"
#include "xcomp/oracles.hpp"

namespace xcomp {

// Enumerates cliques C inside the vertex cover Z; a clique in the whole
// graph has at most one vertex outside Z, so it suffices to additionally
// look for one common neighbor of C outside Z. Runs in O(2^|Z|) subsets.
Verdict fpt_clique_by_vc(const ProblemInstance& inst);

// Emits (G[Z], Z, l) followed by (G[Z+{v}], Z, l) for every v outside Z in
// ascending order. Every output has at most |Z|+1 vertices and the OR of
// the output verdicts equals the input verdict.
std::vector<ProblemInstance> turing_kernel_clique_by_vc(const ProblemInstance& inst);

// Answers YES immediately when l >= |Z|+1; otherwise tries the proper
// l-colorings of G[Z] (least Z-vertex pinned to color 1) and extends: a
// coloring works iff every outside vertex has a color free of its
// neighborhood.
Verdict fpt_chromatic_by_vc(const ProblemInstance& inst);

// A transversal avoids at most two vertices of the clique V-Z. Enumerates
// the avoided set A (|A| <= 2) and all subsets of Z; O(2^|Z| n^2) checks.
Verdict fpt_transversal_by_clique_deletion(const ProblemInstance& inst, TransversalMode mode);

}  // namespace xcomp
