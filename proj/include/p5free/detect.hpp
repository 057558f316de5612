#pragma once

#include <optional>
#include <span>
#include <variant>

#include "p5free/graph.hpp"

namespace p5free {

/// Small patterns the recognizer cares about. Complement pairs: P5/CoP5,
/// C4/CoC4; P4 and C5 are self-complementary.
enum class Pattern { P4, P5, CoP5, C4, CoC4, C5 };

inline int pattern_order(Pattern p) {
    switch (p) {
        case Pattern::P4:
        case Pattern::C4:
        case Pattern::CoC4: return 4;
        default: return 5;
    }
}

inline const char* pattern_name(Pattern p) {
    switch (p) {
        case Pattern::P4: return "P4";
        case Pattern::P5: return "P5";
        case Pattern::CoP5: return "CoP5";
        case Pattern::C4: return "C4";
        case Pattern::CoC4: return "CoC4";
        case Pattern::C5: return "C5";
    }
    return "?";
}

inline std::optional<Pattern> pattern_from_name(std::string_view s) {
    if (s == "P4") return Pattern::P4;
    if (s == "P5") return Pattern::P5;
    if (s == "CoP5") return Pattern::CoP5;
    if (s == "C4") return Pattern::C4;
    if (s == "CoC4") return Pattern::CoC4;
    if (s == "C5") return Pattern::C5;
    return std::nullopt;
}

inline Pattern complement_pattern(Pattern p) {
    switch (p) {
        case Pattern::P5: return Pattern::CoP5;
        case Pattern::CoP5: return Pattern::P5;
        case Pattern::C4: return Pattern::CoC4;
        case Pattern::CoC4: return Pattern::C4;
        default: return p;  // P4 and C5 are their own complements
    }
}

/// Adjacency of tuple positions i, j in the pattern. Path and cycle tuples
/// list consecutive vertices; for CoP5 and CoC4 the path/cycle order is the
/// one seen in the complement.
inline bool pattern_edge(Pattern p, int i, int j) {
    if (i == j) return false;
    if (i > j) std::swap(i, j);
    switch (p) {
        case Pattern::P4:
        case Pattern::P5: return j == i + 1;
        case Pattern::C4: return j == i + 1 || (i == 0 && j == 3);
        case Pattern::C5: return j == i + 1 || (i == 0 && j == 4);
        case Pattern::CoP5: return j != i + 1;
        case Pattern::CoC4: return !(j == i + 1 || (i == 0 && j == 3));
    }
    return false;
}

/// An ordered vertex tuple inducing the pattern in the host graph.
struct ForbiddenWitness {
    Pattern pattern;
    std::vector<int> vertices;

    bool operator==(const ForbiddenWitness&) const = default;
};

/// Check a claimed witness against its host graph.
inline bool witness_induces(const Graph& g, const ForbiddenWitness& w) {
    const int k = pattern_order(w.pattern);
    if (static_cast<int>(w.vertices.size()) != k) return false;
    for (int i = 0; i < k; ++i) {
        int v = w.vertices[static_cast<std::size_t>(i)];
        if (v < 0 || v >= g.vertex_count()) return false;
        for (int j = 0; j < i; ++j) {
            int u = w.vertices[static_cast<std::size_t>(j)];
            if (u == v) return false;
            if (g.adjacent(u, v) != pattern_edge(w.pattern, j, i)) return false;
        }
    }
    return true;
}

/// Lexicographically least ordered tuple inducing p in g, if any. The search
/// fills tuple positions left to right, trying vertices in ascending order
/// and pruning with one candidate bitset per position, so the first hit is
/// the least tuple.
inline std::optional<ForbiddenWitness> find_induced(const Graph& g, Pattern p) {
    const int k = pattern_order(p);
    const int n = g.vertex_count();
    if (n < k) return std::nullopt;

    std::vector<VertexSet> nonadj;
    nonadj.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) nonadj.push_back(g.non_neighbors(v));

    std::vector<int> tuple(static_cast<std::size_t>(k));
    VertexSet used(n);

    auto search = [&](auto&& self, int depth) -> bool {
        VertexSet cand = used.complemented();
        for (int i = 0; i < depth; ++i) {
            int u = tuple[static_cast<std::size_t>(i)];
            cand &= pattern_edge(p, i, depth) ? g.neighbors(u)
                                              : nonadj[static_cast<std::size_t>(u)];
        }
        for (int v : cand) {
            tuple[static_cast<std::size_t>(depth)] = v;
            if (depth + 1 == k) return true;
            used.add(v);
            if (self(self, depth + 1)) return true;
            used.remove(v);
        }
        return false;
    };

    if (search(search, 0)) return ForbiddenWitness{p, tuple};
    return std::nullopt;
}

/// First witness over the given patterns, scanned in list order.
inline std::optional<ForbiddenWitness> find_first_induced(const Graph& g,
                                                          std::span<const Pattern> ps) {
    for (Pattern p : ps)
        if (auto w = find_induced(g, p)) return w;
    return std::nullopt;
}

inline std::optional<ForbiddenWitness> find_first_induced(
    const Graph& g, std::initializer_list<Pattern> ps) {
    return find_first_induced(g, std::span<const Pattern>(ps.begin(), ps.size()));
}

inline bool is_free(const Graph& g, std::initializer_list<Pattern> ps) {
    return !find_first_induced(g, ps);
}

/// Partition of the vertices into a clique and a stable set. Cross edges are
/// unconstrained.
struct SplitPartition {
    VertexSet clique_part;
    VertexSet stable_part;

    bool operator==(const SplitPartition&) const = default;
};

using SplitResult = std::variant<SplitPartition, ForbiddenWitness>;

/// Split test by the degree-sequence characterization: with degrees
/// d1 >= ... >= dn and h = max{i : di >= i-1}, the graph is split iff
/// sum_{i<=h} di = h(h-1) + sum_{i>h} di, and then the h vertices of largest
/// degree form the clique side. Non-split graphs instead yield an induced
/// C4, complement-of-C4, or C5 witness (scanned in that order).
inline SplitResult is_split(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });

    long long head = 0, tail = 0;
    int h = 0;
    for (int i = 1; i <= n; ++i)
        if (g.degree(order[static_cast<std::size_t>(i - 1)]) >= i - 1) h = i;
    for (int i = 0; i < n; ++i) {
        int d = g.degree(order[static_cast<std::size_t>(i)]);
        (i < h ? head : tail) += d;
    }

    if (head == static_cast<long long>(h) * (h - 1) + tail) {
        SplitPartition sp{VertexSet(n), VertexSet(n)};
        for (int i = 0; i < n; ++i)
            (i < h ? sp.clique_part : sp.stable_part).add(order[static_cast<std::size_t>(i)]);
        if (!g.is_clique(sp.clique_part) || !g.is_stable(sp.stable_part))
            throw std::logic_error("is_split: degree test accepted a non-split partition");
        return sp;
    }

    for (Pattern p : {Pattern::C4, Pattern::CoC4, Pattern::C5})
        if (auto w = find_induced(g, p)) return *w;
    throw std::logic_error("is_split: degree test rejected a graph with no witness");
}

inline bool is_split_graph(const Graph& g) {
    return std::holds_alternative<SplitPartition>(is_split(g));
}

}  // namespace p5free
