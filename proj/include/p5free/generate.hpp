#pragma once

#include <cstdint>
#include <random>

#include "p5free/tree.hpp"

namespace p5free {

enum class GenKind { Split, PentagonSub, Unified, Mixed };

inline const char* gen_kind_name(GenKind k) {
    switch (k) {
        case GenKind::Split: return "split";
        case GenKind::PentagonSub: return "pentagon-sub";
        case GenKind::Unified: return "unified";
        case GenKind::Mixed: return "mixed";
    }
    return "?";
}

inline std::optional<GenKind> gen_kind_from_name(const std::string& s) {
    for (GenKind k : {GenKind::Split, GenKind::PentagonSub, GenKind::Unified, GenKind::Mixed})
        if (s == gen_kind_name(k)) return k;
    return std::nullopt;
}

struct GeneratedInstance {
    Graph graph;
    DecompTree tree;
};

namespace detail {

// All randomness goes through these helpers so the output is a pure function
// of the seed (mt19937_64 itself is specified by the standard; the library
// distributions are not portable across implementations).
inline int rand_below(std::mt19937_64& rng, int k) {
    return static_cast<int>(rng() % static_cast<std::uint64_t>(k));
}

inline bool coin(std::mt19937_64& rng) { return (rng() & 1) != 0; }

/// Geometric draw with mean 4 (success chance 1/4 per step, support 1, 2, ...).
inline int geometric4(std::mt19937_64& rng) {
    int s = 1;
    while ((rng() & 3) != 0) ++s;
    return s;
}

/// Random split graph: vertices 0..k-1 form a clique, the rest a stable set,
/// cross edges fall independently. The construction partition is recorded in
/// the leaf, so validity never depends on re-derivation.
inline DecompTree gen_split_leaf(std::mt19937_64& rng, int n) {
    const int k = rand_below(rng, n + 1);
    Graph g(n);
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
    for (int u = 0; u < k; ++u)
        for (int v = k; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    VertexSet clique(n), stable(n);
    for (int v = 0; v < k; ++v) clique.add(v);
    for (int v = k; v < n; ++v) stable.add(v);
    return DecompTree{n, SplitLeaf{std::move(g), {std::move(clique), std::move(stable)}}};
}

inline DecompTree gen_pentagon_leaf(std::mt19937_64& rng) {
    std::array<int, 5> cy{0, 1, 2, 3, 4};
    for (int i = 4; i > 0; --i)
        std::swap(cy[static_cast<std::size_t>(i)],
                  cy[static_cast<std::size_t>(rand_below(rng, i + 1))]);
    return DecompTree{5, PentagonLeaf{cy}};
}

inline DecompTree gen_tree(std::mt19937_64& rng, int n, GenKind kind);

/// Unification node whose halves are split graphs by construction, which
/// keeps the unified graph in the class no matter how the dice fall:
///   g1 = clique on a+b+l, stable t+{cstar};  g2 = clique on b+l+{astar},
///   stable t+c.  Shared t-b and t-l edges are drawn once and written into
/// both halves.
inline DecompTree gen_unify_node(std::mt19937_64& rng, int n, Side side) {
    int a = 1, l = 1, c = 1, b = 0, t = 0;
    if (n >= 5) a = c = 2;
    for (int left = n - a - l - c; left > 0; --left) {
        switch (rand_below(rng, 5)) {
            case 0: ++a; break;
            case 1: ++b; break;
            case 2: ++l; break;
            case 3: ++t; break;
            default: ++c; break;
        }
    }

    // Shared-part coins, indexed by (t position, b or l position).
    std::vector<std::vector<bool>> tb(static_cast<std::size_t>(t)),
        tl(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) {
        for (int j = 0; j < b; ++j) tb[static_cast<std::size_t>(i)].push_back(coin(rng));
        for (int j = 0; j < l; ++j) tl[static_cast<std::size_t>(i)].push_back(coin(rng));
    }
    // c0 is the first c-vertex and is complete to b; other c-b edges fall freely.
    std::vector<std::vector<bool>> cb(static_cast<std::size_t>(c));
    for (int i = 0; i < c; ++i)
        for (int j = 0; j < b; ++j)
            cb[static_cast<std::size_t>(i)].push_back(i == 0 || coin(rng));

    UnifyNode node;
    node.side = side;

    const int n1 = a + b + l + t + 1;  // a, b, l, t blocks, then cstar
    {
        Graph g1(n1);
        auto bv = [a](int j) { return a + j; };
        auto lv = [a, b](int j) { return a + b + j; };
        auto tv = [a, b, l](int j) { return a + b + l + j; };
        const int cstar = n1 - 1;
        for (int u = 0; u < a + b + l; ++u)
            for (int v = u + 1; v < a + b + l; ++v) g1.add_edge(u, v);
        for (int j = 0; j < b; ++j) g1.add_edge(cstar, bv(j));
        for (int j = 0; j < l; ++j) g1.add_edge(cstar, lv(j));
        for (int i = 0; i < t; ++i) {
            for (int j = 0; j < b; ++j)
                if (tb[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
                    g1.add_edge(tv(i), bv(j));
            for (int j = 0; j < l; ++j)
                if (tl[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
                    g1.add_edge(tv(i), lv(j));
        }
        VertexSet clique(n1), stable(n1);
        for (int v = 0; v < a + b + l; ++v) clique.add(v);
        for (int v = a + b + l; v < n1; ++v) stable.add(v);

        for (int j = 0; j < a; ++j) node.a.push_back(j);
        for (int j = 0; j < b; ++j) node.b1.push_back(bv(j));
        for (int j = 0; j < l; ++j) node.l1.push_back(lv(j));
        for (int j = 0; j < t; ++j) node.t1.push_back(tv(j));
        node.cstar = cstar;
        node.a0 = 0;
        node.left = std::make_unique<DecompTree>(
            DecompTree{n1, SplitLeaf{std::move(g1), {std::move(clique), std::move(stable)}}});
    }

    const int n2 = b + l + t + c + 1;  // b, l, t, c blocks, then astar
    {
        Graph g2(n2);
        auto lv = [b](int j) { return b + j; };
        auto tv = [b, l](int j) { return b + l + j; };
        auto cv = [b, l, t](int j) { return b + l + t + j; };
        const int astar = n2 - 1;
        for (int u = 0; u < b + l; ++u)
            for (int v = u + 1; v < b + l; ++v) g2.add_edge(u, v);
        for (int v = 0; v < b + l; ++v) g2.add_edge(astar, v);
        for (int i = 0; i < c; ++i)
            for (int j = 0; j < l; ++j) g2.add_edge(cv(i), lv(j));
        for (int i = 0; i < c; ++i)
            for (int j = 0; j < b; ++j)
                if (cb[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
                    g2.add_edge(cv(i), j);
        for (int i = 0; i < t; ++i) {
            for (int j = 0; j < b; ++j)
                if (tb[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
                    g2.add_edge(tv(i), j);
            for (int j = 0; j < l; ++j)
                if (tl[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
                    g2.add_edge(tv(i), lv(j));
        }
        VertexSet clique(n2), stable(n2);
        for (int v = 0; v < b + l; ++v) clique.add(v);
        clique.add(astar);
        for (int v = b + l; v < astar; ++v) stable.add(v);

        for (int j = 0; j < b; ++j) node.b2.push_back(j);
        for (int j = 0; j < l; ++j) node.l2.push_back(lv(j));
        for (int j = 0; j < t; ++j) node.t2.push_back(tv(j));
        for (int j = 0; j < c; ++j) node.c.push_back(cv(j));
        node.astar = astar;
        node.c0 = cv(0);
        node.right = std::make_unique<DecompTree>(
            DecompTree{n2, SplitLeaf{std::move(g2), {std::move(clique), std::move(stable)}}});
    }

    node.labels = identity_labels(n);
    return DecompTree{n, std::move(node)};
}

inline DecompTree gen_substitution_node(std::mt19937_64& rng, int n, GenKind kind) {
    const int no = 2 + rand_below(rng, n - 2);  // outer size in [2, n-1]
    const int ni = n - no + 1;
    SubstitutionNode node;
    node.x = rand_below(rng, no);
    node.outer = std::make_unique<DecompTree>(gen_tree(rng, no, kind));
    node.inner = std::make_unique<DecompTree>(gen_tree(rng, ni, kind));
    node.labels = identity_labels(n);
    return DecompTree{n, std::move(node)};
}

inline DecompTree gen_tree(std::mt19937_64& rng, int n, GenKind kind) {
    if (kind == GenKind::Split || n <= 2) return gen_split_leaf(rng, n);

    if (geometric4(rng) >= n) {
        if (n == 5 && kind != GenKind::Unified && coin(rng)) return gen_pentagon_leaf(rng);
        return gen_split_leaf(rng, n);
    }

    switch (kind) {
        case GenKind::PentagonSub:
            return gen_substitution_node(rng, n, kind);
        case GenKind::Unified:
            return gen_unify_node(rng, n, coin(rng) ? Side::InComplement : Side::InGraph);
        default:
            switch (rand_below(rng, 3)) {
                case 0: return gen_substitution_node(rng, n, kind);
                case 1: return gen_unify_node(rng, n, Side::InGraph);
                default: return gen_unify_node(rng, n, Side::InComplement);
            }
    }
}

}  // namespace detail

/// Seeded construction of a class member of exactly `size` vertices together
/// with its decomposition tree. Split leaves, pentagon leaves, substitutions
/// and unifications (on either side) all occur, steered by `kind`. The result
/// is audited before return: the tree replays to the graph and the graph is
/// {P5, CoP5}-free.
inline GeneratedInstance generate_member(std::uint64_t seed, int size, GenKind kind) {
    if (size < 1) throw std::invalid_argument("generate_member: size must be at least 1");
    std::mt19937_64 rng(seed);
    DecompTree tree = detail::gen_tree(rng, size, kind);
    Graph g = reconstruct(tree);
    if (g.vertex_count() != size)
        throw std::logic_error("generate_member: tree replays to the wrong size");
    if (auto w = find_first_induced(g, {Pattern::P5, Pattern::CoP5}))
        throw std::logic_error("generate_member: audit found " + format_witness(*w));
    return {std::move(g), std::move(tree)};
}

}  // namespace p5free
