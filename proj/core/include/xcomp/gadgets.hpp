#pragma once

#include <utility>
#include <vector>

#include "xcomp/graph.hpp"
#include "xcomp/instance.hpp"

namespace xcomp {

// The seven labeled vertices created per input edge by inflation. mid1/mid2
// subdivide the original edge; tri completes it into a triangle; ta*/tb*
// subdivide the two triangle legs (u-ta1-ta2-tri and v-tb1-tb2-tri).
struct ScaffoldUnit {
    Vertex mid1, mid2, tri, ta1, ta2, tb1, tb2;

    std::vector<Vertex> all() const { return {mid1, mid2, tri, ta1, ta2, tb1, tb2}; }
};

struct InflationResult {
    Graph graph;
    // Input vertices keep their ids; new vertices are appended.
    std::vector<Vertex> original;  // original[v] = v for v in 1..n
    // Per input edge index (edges sorted ascending, u = smaller endpoint).
    std::vector<ScaffoldUnit> scaffold;
    std::vector<Edge> edge_order;
};

// |V| = n + 7m, |E| = 9m. Every edge turns into a 9-cycle through its
// endpoints and its scaffold unit; inflate(K2) is a 9-cycle.
InflationResult inflate(const Graph& g);

struct K4BoxResult {
    Graph graph;  // 8 vertices, 14 edges
    std::pair<Vertex, Vertex> zero_terminals;
    std::pair<Vertex, Vertex> one_terminals;
};

// Clique on {a,b,c,d} plus one degree-2 vertex per boundary pair
// {a,b},{b,c},{c,d},{d,a}. The only size-2 triangle transversals are the
// terminal pairs {a,c} and {b,d}, which makes the gadget a one-bit selector.
K4BoxResult k4_in_a_box();

// Replaces every edge by a pendant triangle: the output keeps no original
// edge, is 3-colorable iff the input is, and splits into an independent set
// X (the original vertices) plus disjoint triangles Y.
ProblemInstance triangle_split_reduction(const Graph& g);

}  // namespace xcomp
