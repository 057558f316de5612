#pragma once

#include <array>
#include <memory>
#include <variant>

#include "p5free/divide.hpp"

namespace p5free {

struct DecompTree;
using TreePtr = std::unique_ptr<DecompTree>;

/// Terminal: a split graph together with a clique/stable partition.
struct SplitLeaf {
    Graph graph;
    SplitPartition partition;
};

/// Terminal: a five-cycle. `cycle` lists the leaf's vertex labels in cyclic
/// order; the leaf graph is exactly the edges between cyclic neighbors.
struct PentagonLeaf {
    std::array<int, 5> cycle;
};

/// Inner node: this graph is substitute(outer, x, inner) followed by the
/// `labels` renaming (labels[i] = this node's label of convention vertex i).
struct SubstitutionNode {
    TreePtr outer;
    int x = -1;
    TreePtr inner;
    std::vector<int> labels;
};

/// Inner node: this graph is unify_pair of the two children under the given
/// roles (complemented first when side says so), then the `labels` renaming.
/// Children are the two halves as standalone graphs.
struct UnifyNode {
    Side side = Side::InGraph;
    // Role data of the halves, in the children's own labels.
    std::vector<int> a, b1, l1, t1;
    int cstar = -1, a0 = -1;
    std::vector<int> b2, c, l2, t2;
    int astar = -1, c0 = -1;
    TreePtr left;   // half on a + b + l + t + {cstar}
    TreePtr right;  // half on b + c + l + t + {astar}
    std::vector<int> labels;
};

/// Constructive certificate of {P5, CoP5}-freeness: a recipe rebuilding the
/// graph from split graphs and pentagons by substitution and split
/// unification (possibly in the complement). Every node records the vertex
/// count of the graph it replays.
struct DecompTree {
    int n = 0;
    std::variant<SplitLeaf, PentagonLeaf, SubstitutionNode, UnifyNode> node;
};

inline int tree_node_count(const DecompTree& t) {
    return std::visit(
        [](const auto& node) -> int {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, SubstitutionNode>)
                return 1 + tree_node_count(*node.outer) + tree_node_count(*node.inner);
            else if constexpr (std::is_same_v<T, UnifyNode>)
                return 1 + tree_node_count(*node.left) + tree_node_count(*node.right);
            else
                return 1;
        },
        t.node);
}

/// Replay a tree bottom-up into the labeled graph it certifies. Malformed
/// trees (wrong permutations, invalid leaves, role sets inconsistent with
/// the children) raise invalid_argument.
inline Graph reconstruct(const DecompTree& t) {
    return std::visit(
        [&t](const auto& node) -> Graph {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, SplitLeaf>) {
                if (node.graph.vertex_count() != t.n)
                    throw std::invalid_argument("reconstruct: leaf size disagrees with node");
                if ((node.partition.clique_part | node.partition.stable_part) !=
                        node.graph.vertices() ||
                    node.partition.clique_part.intersects(node.partition.stable_part))
                    throw std::invalid_argument("reconstruct: split partition does not cover leaf");
                if (!node.graph.is_clique(node.partition.clique_part) ||
                    !node.graph.is_stable(node.partition.stable_part))
                    throw std::invalid_argument("reconstruct: split leaf partition is invalid");
                return node.graph;
            } else if constexpr (std::is_same_v<T, PentagonLeaf>) {
                if (t.n != 5) throw std::invalid_argument("reconstruct: pentagon leaf with n != 5");
                std::array<bool, 5> seen{};
                for (int v : node.cycle) {
                    if (v < 0 || v >= 5 || seen[static_cast<std::size_t>(v)])
                        throw std::invalid_argument("reconstruct: pentagon cycle is not a permutation");
                    seen[static_cast<std::size_t>(v)] = true;
                }
                Graph g(5);
                for (int i = 0; i < 5; ++i)
                    g.add_edge(node.cycle[static_cast<std::size_t>(i)],
                               node.cycle[static_cast<std::size_t>((i + 1) % 5)]);
                return g;
            } else if constexpr (std::is_same_v<T, SubstitutionNode>) {
                Graph outer = reconstruct(*node.outer);
                Graph inner = reconstruct(*node.inner);
                Graph conv = substitute(outer, node.x, inner);
                if (conv.vertex_count() != t.n)
                    throw std::invalid_argument("reconstruct: substitution size disagrees with node");
                return relabel(conv, node.labels);
            } else {
                Graph left = reconstruct(*node.left);
                Graph right = reconstruct(*node.right);
                ComposablePair p;
                p.g1.graph = std::move(left);
                p.g1.a = node.a;
                p.g1.b = node.b1;
                p.g1.l = node.l1;
                p.g1.t = node.t1;
                p.g1.cstar = node.cstar;
                p.g1.a0 = node.a0;
                p.g2.graph = std::move(right);
                p.g2.b = node.b2;
                p.g2.c = node.c;
                p.g2.l = node.l2;
                p.g2.t = node.t2;
                p.g2.astar = node.astar;
                p.g2.c0 = node.c0;
                Graph conv = unify_pair(p);
                if (node.side == Side::InComplement) conv = complement(conv);
                if (conv.vertex_count() != t.n)
                    throw std::invalid_argument("reconstruct: unification size disagrees with node");
                return relabel(conv, node.labels);
            }
        },
        t.node);
}

/// Either a decomposition tree (membership certificate) or an induced
/// forbidden pattern (exclusion certificate).
struct RecognitionResult {
    std::variant<DecompTree, ForbiddenWitness> value;

    bool is_member() const { return std::holds_alternative<DecompTree>(value); }
    const DecompTree& tree() const { return std::get<DecompTree>(value); }
    const ForbiddenWitness& witness() const { return std::get<ForbiddenWitness>(value); }
};

namespace detail {

inline std::vector<int> identity_labels(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
    return v;
}

/// Witness of a child node translated into the parent's labels.
inline ForbiddenWitness lift_witness(ForbiddenWitness w, const std::vector<int>& child_map) {
    for (int& v : w.vertices) v = child_map[static_cast<std::size_t>(v)];
    return w;
}

inline RecognitionResult decompose_impl(const Graph& g, bool pentagons_allowed) {
    const int n = g.vertex_count();

    // Split graphs are class members outright and terminate the recursion;
    // checking this first keeps cliques, stars and all tiny graphs as
    // single leaves.
    if (auto sr = is_split(g); std::holds_alternative<SplitPartition>(sr))
        return {DecompTree{n, SplitLeaf{g, std::get<SplitPartition>(sr)}}};

    // Not prime: peel off a proper homogeneous set. The children determine
    // membership, since the five-vertex patterns are prime: any witness in g
    // survives in a child, and member children compose to a member.
    if (auto h = find_proper_homogeneous_set(g)) {
        HomogeneousDecomposition d = decompose_by_homogeneous_set(g, *h);
        RecognitionResult inner = decompose_impl(d.inner, pentagons_allowed);
        if (!inner.is_member())
            return {lift_witness(inner.witness(), d.inner_map)};
        RecognitionResult outer = decompose_impl(d.outer, pentagons_allowed);
        if (!outer.is_member())
            return {lift_witness(outer.witness(), d.outer_map)};

        // Convention order of substitute(outer, x, inner), written in g's labels.
        std::vector<int> labels;
        labels.reserve(static_cast<std::size_t>(n));
        for (int j = 0; j < d.outer.vertex_count(); ++j) {
            if (j == d.x) continue;
            labels.push_back(d.outer_map[static_cast<std::size_t>(j)]);
        }
        for (int host : d.inner_map) labels.push_back(host);

        SubstitutionNode node;
        node.outer = std::make_unique<DecompTree>(std::move(std::get<DecompTree>(outer.value)));
        node.x = d.x;
        node.inner = std::make_unique<DecompTree>(std::move(std::get<DecompTree>(inner.value)));
        node.labels = std::move(labels);
        return {DecompTree{n, std::move(node)}};
    }

    // Prime and not split: settle membership here.
    if (pentagons_allowed) {
        if (auto w = find_first_induced(g, {Pattern::P5, Pattern::CoP5})) return {*w};
        if (auto c5 = find_induced(g, Pattern::C5)) {
            // A prime {P5, CoP5}-free graph containing a five-cycle is one.
            if (n != 5)
                throw std::logic_error("decompose: prime C5-bearing member larger than the cycle");
            PentagonLeaf leaf;
            std::copy_n(c5->vertices.begin(), 5, leaf.cycle.begin());
            return {DecompTree{5, std::move(leaf)}};
        }
    } else {
        if (auto w = find_first_induced(g, {Pattern::P5, Pattern::CoP5, Pattern::C5}))
            return {*w};
    }

    auto d = find_split_divide(g);
    if (!d) throw std::logic_error("decompose: prime non-split member admits no divide");
    ComposablePair pair = split_into_pair(g, *d);

    UnifyNode node;
    node.side = d->side;
    node.a = pair.g1.a;
    node.b1 = pair.g1.b;
    node.l1 = pair.g1.l;
    node.t1 = pair.g1.t;
    node.cstar = pair.g1.cstar;
    node.a0 = pair.g1.a0;
    node.b2 = pair.g2.b;
    node.c = pair.g2.c;
    node.l2 = pair.g2.l;
    node.t2 = pair.g2.t;
    node.astar = pair.g2.astar;
    node.c0 = pair.g2.c0;
    node.labels = unification_vertex_order(*d);

    // Both halves are induced in g or its complement, hence members; a
    // witness here would mean the divide construction went wrong.
    RecognitionResult left = decompose_impl(pair.g1.graph, pentagons_allowed);
    RecognitionResult right = decompose_impl(pair.g2.graph, pentagons_allowed);
    if (!left.is_member() || !right.is_member())
        throw std::logic_error("decompose: half of a member divide is not a member");
    node.left = std::make_unique<DecompTree>(std::move(std::get<DecompTree>(left.value)));
    node.right = std::make_unique<DecompTree>(std::move(std::get<DecompTree>(right.value)));
    return {DecompTree{n, std::move(node)}};
}

}  // namespace detail

/// Full decomposition: a tree over split leaves, pentagon leaves,
/// substitutions and split unifications, or an induced P5 / CoP5 witness.
/// reconstruct of the tree reproduces g exactly (same labels).
inline RecognitionResult decompose(const Graph& g) {
    return detail::decompose_impl(g, true);
}

/// Decomposition of {P5, CoP5, C5}-free graphs: pentagons are forbidden, so
/// C5-bearing inputs are rejected with a C5 (or P5 / CoP5) witness.
inline RecognitionResult decompose_perfect(const Graph& g) {
    return detail::decompose_impl(g, false);
}

inline bool recognize(const Graph& g) { return decompose(g).is_member(); }

}  // namespace p5free
