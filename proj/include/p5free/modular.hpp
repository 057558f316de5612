#pragma once

#include <optional>

#include "p5free/graph.hpp"

namespace p5free {

/// A set of vertices no outside vertex distinguishes: every vertex not in
/// the set is complete or anticomplete to it.
struct HomogeneousSet {
    VertexSet members;

    bool operator==(const HomogeneousSet&) const = default;
};

inline bool is_homogeneous_set(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.vertex_count())
        throw std::invalid_argument("is_homogeneous_set: set does not match the graph");
    if (s.empty()) return false;
    for (int v : s.complemented())
        if (!g.complete_to(v, s) && !g.anticomplete_to(v, s)) return false;
    return true;
}

/// Proper means 2 <= |s| < n, the sizes at which substitution decomposition
/// makes progress.
inline bool is_proper_homogeneous_set(const Graph& g, const VertexSet& s) {
    return s.size() >= 2 && s.size() < g.vertex_count() && is_homogeneous_set(g, s);
}

/// Smallest homogeneous set containing the seed: repeatedly absorb any
/// outside vertex mixed on the current set. May grow to the whole vertex
/// set, in which case the seed lies in no proper homogeneous set.
inline VertexSet homogeneous_closure(const Graph& g, VertexSet s) {
    const int n = g.vertex_count();
    bool changed = true;
    while (changed && s.size() < n) {
        changed = false;
        for (int v = 0; v < n; ++v) {
            if (s.contains(v)) continue;
            if (!g.complete_to(v, s) && !g.anticomplete_to(v, s)) {
                s.add(v);
                changed = true;
            }
        }
    }
    return s;
}

/// A proper homogeneous set if one exists (i.e. g is not prime), otherwise
/// nothing. Deterministic: the largest closure over all seed pairs wins
/// (ties by least minimum element), then vertices are folded in ascending
/// order as long as the closure stays proper, so the result is
/// inclusion-maximal among proper homogeneous sets.
inline std::optional<HomogeneousSet> find_proper_homogeneous_set(const Graph& g) {
    const int n = g.vertex_count();
    std::optional<VertexSet> best;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            VertexSet seed(n);
            seed.add(u);
            seed.add(v);
            VertexSet c = homogeneous_closure(g, seed);
            if (c.size() >= n) continue;
            if (!best || c.size() > best->size() ||
                (c.size() == best->size() && c.min() < best->min()))
                best = c;
        }
    }
    if (!best) return std::nullopt;

    bool grew = true;
    while (grew) {
        grew = false;
        for (int w = 0; w < n; ++w) {
            if (best->contains(w)) continue;
            VertexSet t = *best;
            t.add(w);
            t = homogeneous_closure(g, t);
            if (t.size() < n) {
                *best = t;
                grew = true;
                break;
            }
        }
    }
    return HomogeneousSet{*best};
}

inline bool is_prime(const Graph& g) { return !find_proper_homogeneous_set(g); }

/// Replace vertex x of outer by a copy of inner: inner vertices become
/// adjacent to exactly the former neighbors of x. Labels: outer vertices
/// keep their order with x removed (u maps to u or u-1), inner vertices are
/// appended in order.
inline Graph substitute(const Graph& outer, int x, const Graph& inner) {
    const int no = outer.vertex_count();
    const int ni = inner.vertex_count();
    if (x < 0 || x >= no)
        throw std::invalid_argument("substitute: replaced vertex out of range");
    if (ni == 0) throw std::invalid_argument("substitute: inner graph is empty");

    Graph g(no - 1 + ni);
    auto outer_label = [x](int u) { return u < x ? u : u - 1; };
    for (int u = 0; u < no; ++u) {
        if (u == x) continue;
        for (int v : outer.neighbors(u))
            if (v != x && u < v) g.add_edge(outer_label(u), outer_label(v));
    }
    for (int u = 0; u < ni; ++u)
        for (int v : inner.neighbors(u))
            if (u < v) g.add_edge(no - 1 + u, no - 1 + v);
    for (int u : outer.neighbors(x))
        for (int w = 0; w < ni; ++w) g.add_edge(outer_label(u), no - 1 + w);
    return g;
}

/// Inverse of substitute along a proper homogeneous set h: the inner part is
/// g[h], the outer part is g with h contracted to its least member, and x is
/// that member's position in the outer graph. The label maps let callers
/// translate child vertices back to g.
struct HomogeneousDecomposition {
    Graph inner;
    Graph outer;
    int x;  // position of the contracted representative inside outer
    std::vector<int> inner_map;  // inner label -> g label
    std::vector<int> outer_map;  // outer label -> g label
};

inline HomogeneousDecomposition decompose_by_homogeneous_set(const Graph& g,
                                                             const HomogeneousSet& h) {
    if (!is_proper_homogeneous_set(g, h.members))
        throw std::invalid_argument("decompose_by_homogeneous_set: " + h.members.to_string() +
                                    " is not a proper homogeneous set");
    InducedSubgraph in = induced(g, h.members);
    VertexSet outer_set = h.members.complemented();
    outer_set.add(h.members.min());
    InducedSubgraph out = induced(g, outer_set);

    HomogeneousDecomposition d;
    d.inner = std::move(in.graph);
    d.outer = std::move(out.graph);
    d.inner_map = std::move(in.vertex_map);
    d.outer_map = std::move(out.vertex_map);
    d.x = static_cast<int>(std::lower_bound(d.outer_map.begin(), d.outer_map.end(),
                                            h.members.min()) -
                           d.outer_map.begin());
    return d;
}

}  // namespace p5free
