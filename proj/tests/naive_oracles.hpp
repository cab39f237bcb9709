// Test-only brute-force oracles: plain enumeration over all vertex subsets
// and colorings, kept deliberately independent of the pruned solvers they
// cross-check. Usable up to ~5 vertices.
#pragma once

#include <cstdint>
#include <vector>

#include "xcomp/graph.hpp"

namespace naive {

using xcomp::Graph;
using xcomp::Vertex;
using xcomp::VertexSet;

inline VertexSet subset_of_mask(int n, uint32_t mask) {
    VertexSet out;
    for (int v = 1; v <= n; ++v)
        if (mask & (1u << (v - 1))) out.push_back(v);
    return out;
}

inline bool pairwise_adjacent(const Graph& g, const VertexSet& s) {
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (!g.has_edge(s[i], s[j])) return false;
    return true;
}

inline int max_clique(const Graph& g) {
    const int n = g.vertex_count();
    int best = 0;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        const VertexSet s = subset_of_mask(n, mask);
        if (pairwise_adjacent(g, s)) best = std::max(best, static_cast<int>(s.size()));
    }
    return best;
}

inline int min_vertex_cover(const Graph& g) {
    const int n = g.vertex_count();
    int best = n;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        const VertexSet s = subset_of_mask(n, mask);
        bool covers = true;
        for (auto [u, v] : g.edges())
            if (!xcomp::set_contains(s, u) && !xcomp::set_contains(s, v)) {
                covers = false;
                break;
            }
        if (covers) best = std::min(best, static_cast<int>(s.size()));
    }
    return best;
}

inline bool has_proper_coloring(const Graph& g, int colors) {
    const int n = g.vertex_count();
    if (n == 0) return true;
    if (colors == 0) return false;
    std::vector<int> assignment(static_cast<size_t>(n) + 1, 1);
    for (;;) {
        bool proper = true;
        for (auto [u, v] : g.edges())
            if (assignment[u] == assignment[v]) {
                proper = false;
                break;
            }
        if (proper) return true;
        int pos = 1;
        while (pos <= n && assignment[pos] == colors) assignment[pos++] = 1;
        if (pos > n) return false;
        ++assignment[pos];
    }
}

inline int chromatic_number(const Graph& g) {
    for (int k = 0;; ++k)
        if (has_proper_coloring(g, k)) return k;
}

// Forest: every component has exactly |V| - 1 edges; own DFS, no library
// traversal involved.
inline bool acyclic(const Graph& g, const VertexSet& removed) {
    const int n = g.vertex_count();
    std::vector<char> gone(static_cast<size_t>(n) + 1, 0);
    for (Vertex v : removed) gone[v] = 1;
    int vertices = 0, edges = 0, components = 0;
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int v = 1; v <= n; ++v)
        if (!gone[v]) ++vertices;
    for (auto [u, v] : g.edges())
        if (!gone[u] && !gone[v]) ++edges;
    for (int start = 1; start <= n; ++start) {
        if (gone[start] || seen[start]) continue;
        ++components;
        std::vector<int> stack{start};
        seen[start] = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v))
                if (!gone[w] && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
    }
    return edges == vertices - components;
}

inline bool two_colorable(const Graph& g, const VertexSet& removed) {
    const int n = g.vertex_count();
    std::vector<char> gone(static_cast<size_t>(n) + 1, 0);
    for (Vertex v : removed) gone[v] = 1;
    VertexSet rest;
    for (int v = 1; v <= n; ++v)
        if (!gone[v]) rest.push_back(v);
    for (uint32_t mask = 0; mask < (1u << rest.size()); ++mask) {
        bool proper = true;
        auto side = [&](Vertex v) {
            const size_t index =
                static_cast<size_t>(std::lower_bound(rest.begin(), rest.end(), v) - rest.begin());
            return (mask >> index) & 1u;
        };
        for (auto [u, v] : g.edges()) {
            if (gone[u] || gone[v]) continue;
            if (side(u) == side(v)) {
                proper = false;
                break;
            }
        }
        if (proper) return true;
    }
    return rest.empty();
}

inline long long min_transversal(const Graph& g, bool odd_only,
                                 const std::vector<long long>* weights = nullptr) {
    const int n = g.vertex_count();
    long long best = -1;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        const VertexSet s = subset_of_mask(n, mask);
        const bool valid = odd_only ? two_colorable(g, s) : acyclic(g, s);
        if (!valid) continue;
        long long total = 0;
        for (Vertex v : s) total += weights ? (*weights)[static_cast<size_t>(v)] : 1;
        if (best < 0 || total < best) best = total;
    }
    return best;
}

}  // namespace naive
