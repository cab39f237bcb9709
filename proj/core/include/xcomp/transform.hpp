#pragma once

#include <vector>

#include "xcomp/instance.hpp"

namespace xcomp {

struct ComplementChain {
    ProblemInstance independent_set;  // (complement(G), Z, l)
    ProblemInstance vertex_cover;     // (complement(G), Z, n - l)
};

// A clique in G is an independent set in the complement, and Z turns from a
// vertex cover into a clique deletion set. Throws when l > n (the second
// target would go negative).
ComplementChain complement_chain(const ProblemInstance& inst);

// Edge clique cover of a graph whose Z-removal leaves a clique: the edges
// inside Z, the outside clique, and per z in Z the set {z} + N(z) outside Z.
// Every edge lies in some member, every member induces a clique, and
// |family| <= C(|Z|,2) + 1 + |Z|. Empty members are dropped.
std::vector<VertexSet> clique_cover(const Graph& g, const VertexSet& z);

// Adds one apex vertex per cover member, adjacent to exactly that member.
// Turns a vc-by-clique-deletion instance into fvs- or oct-by-clique-deletion
// with the same target and k' = |Z| + |family|.
ProblemInstance apexify(const ProblemInstance& inst, TransversalMode mode);

}  // namespace xcomp
