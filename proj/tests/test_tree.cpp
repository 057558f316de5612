#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "oracles.hpp"
#include "p5free/generate.hpp"
#include "p5free/tree.hpp"

using namespace p5free;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::MessageMatches;

namespace {

Graph wedge5() {
    return make_graph(5, {{0, 1}, {0, 2}, {2, 3}, {2, 4}, {3, 4}});
}

// Every structural invariant a well-formed tree keeps at every node: sizes
// add up, role shapes match and each node replays to a graph of its size.
void check_tree_shape(const DecompTree& t, bool pentagons_allowed) {
    CHECK(reconstruct(t).vertex_count() == t.n);
    std::visit(
        [&](const auto& node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, PentagonLeaf>) {
                CHECK(pentagons_allowed);
                CHECK(t.n == 5);
            } else if constexpr (std::is_same_v<T, SubstitutionNode>) {
                CHECK(node.outer->n + node.inner->n - 1 == t.n);
                CHECK(node.inner->n >= 2);
                CHECK(node.outer->n >= 2);
                CHECK(static_cast<int>(node.labels.size()) == t.n);
                check_tree_shape(*node.outer, pentagons_allowed);
                check_tree_shape(*node.inner, pentagons_allowed);
            } else if constexpr (std::is_same_v<T, UnifyNode>) {
                const int shared =
                    static_cast<int>(node.b1.size() + node.l1.size() + node.t1.size());
                CHECK(node.left->n + node.right->n == t.n + shared + 2);
                CHECK(node.left->n < t.n);
                CHECK(node.right->n < t.n);
                CHECK(node.b2.size() == node.b1.size());
                CHECK(node.l2.size() == node.l1.size());
                CHECK(node.t2.size() == node.t1.size());
                CHECK(static_cast<int>(node.labels.size()) == t.n);
                check_tree_shape(*node.left, pentagons_allowed);
                check_tree_shape(*node.right, pentagons_allowed);
            }
        },
        t.node);
}

}  // namespace

TEST_CASE("decompose settles the five-vertex landmarks") {
    RecognitionResult c5 = decompose(cycle_graph(5));
    REQUIRE(c5.is_member());
    REQUIRE(std::holds_alternative<PentagonLeaf>(c5.tree().node));
    CHECK(std::get<PentagonLeaf>(c5.tree().node).cycle == std::array<int, 5>{0, 1, 2, 3, 4});
    CHECK(reconstruct(c5.tree()) == cycle_graph(5));
    CHECK(tree_node_count(c5.tree()) == 1);

    RecognitionResult p5 = decompose(path_graph(5));
    REQUIRE_FALSE(p5.is_member());
    CHECK(p5.witness().pattern == Pattern::P5);
    CHECK(p5.witness().vertices == std::vector<int>{0, 1, 2, 3, 4});

    RecognitionResult cop5 = decompose(complement(path_graph(5)));
    REQUIRE_FALSE(cop5.is_member());
    CHECK(cop5.witness().pattern == Pattern::CoP5);
    CHECK(cop5.witness().vertices == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("split graphs decompose to a single leaf") {
    for (const Graph& g : {complete_graph(7), Graph(6), path_graph(3),
                           make_graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}})}) {
        RecognitionResult r = decompose(g);
        REQUIRE(r.is_member());
        CHECK(std::holds_alternative<SplitLeaf>(r.tree().node));
        CHECK(tree_node_count(r.tree()) == 1);
        CHECK(reconstruct(r.tree()) == g);
    }
}

TEST_CASE("a four-cycle decomposes by its homogeneous set") {
    RecognitionResult r = decompose(cycle_graph(4));
    REQUIRE(r.is_member());
    REQUIRE(std::holds_alternative<SubstitutionNode>(r.tree().node));
    const auto& node = std::get<SubstitutionNode>(r.tree().node);
    CHECK(std::holds_alternative<SplitLeaf>(node.outer->node));
    CHECK(std::holds_alternative<SplitLeaf>(node.inner->node));
    CHECK(tree_node_count(r.tree()) == 3);
    CHECK(reconstruct(r.tree()) == cycle_graph(4));
}

TEST_CASE("a hand-assembled unify node replays the wedge graph") {
    Graph g = wedge5();
    SplitDivide d;
    d.a = VertexSet::of(5, {0, 1});
    d.b = VertexSet(5);
    d.c = VertexSet::of(5, {3, 4});
    d.l = VertexSet::of(5, {2});
    d.t = VertexSet(5);
    d.a0 = 0;
    d.c0 = 3;
    ComposablePair p = split_into_pair(g, d);

    UnifyNode node;
    node.side = Side::InGraph;
    node.a = p.g1.a;
    node.b1 = p.g1.b;
    node.l1 = p.g1.l;
    node.t1 = p.g1.t;
    node.cstar = p.g1.cstar;
    node.a0 = p.g1.a0;
    node.b2 = p.g2.b;
    node.c = p.g2.c;
    node.l2 = p.g2.l;
    node.t2 = p.g2.t;
    node.astar = p.g2.astar;
    node.c0 = p.g2.c0;
    node.labels = unification_vertex_order(d);

    auto leaf = [](const Graph& h) {
        auto sr = is_split(h);
        REQUIRE(std::holds_alternative<SplitPartition>(sr));
        return std::make_unique<DecompTree>(
            DecompTree{h.vertex_count(), SplitLeaf{h, std::get<SplitPartition>(sr)}});
    };
    node.left = leaf(p.g1.graph);
    node.right = leaf(p.g2.graph);

    DecompTree t{5, std::move(node)};
    CHECK(tree_node_count(t) == 3);
    CHECK(reconstruct(t) == g);
}

TEST_CASE("recognition agrees with the oracle on every graph up to n=5") {
    const std::uint64_t expected_members[] = {1, 1, 2, 8, 64, 904};
    for (int n = 0; n <= 5; ++n) {
        std::uint64_t members = 0;
        for (std::uint64_t mask = 0; mask < oracle::labeled_graph_count(n); ++mask) {
            Graph g = oracle::graph_from_mask(n, mask);
            RecognitionResult r = decompose(g);
            REQUIRE(r.is_member() == oracle::is_free(g, {Pattern::P5, Pattern::CoP5}));
            if (r.is_member()) {
                ++members;
                REQUIRE(reconstruct(r.tree()) == g);
                check_tree_shape(r.tree(), true);
            } else {
                CHECK((r.witness().pattern == Pattern::P5 ||
                       r.witness().pattern == Pattern::CoP5));
                CHECK(witness_induces(g, r.witness()));
            }
        }
        CHECK(members == expected_members[n]);
    }
}

TEST_CASE("pentagon-free decomposition agrees with the oracle up to n=5") {
    RecognitionResult c5 = decompose_perfect(cycle_graph(5));
    REQUIRE_FALSE(c5.is_member());
    CHECK(c5.witness().pattern == Pattern::C5);
    CHECK(c5.witness().vertices == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(decompose_perfect(complete_graph(4)).is_member());

    const std::uint64_t expected_members[] = {1, 1, 2, 8, 64, 892};
    for (int n = 0; n <= 5; ++n) {
        std::uint64_t members = 0;
        for (std::uint64_t mask = 0; mask < oracle::labeled_graph_count(n); ++mask) {
            Graph g = oracle::graph_from_mask(n, mask);
            RecognitionResult r = decompose_perfect(g);
            REQUIRE(r.is_member() ==
                    oracle::is_free(g, {Pattern::P5, Pattern::CoP5, Pattern::C5}));
            if (r.is_member()) {
                ++members;
                REQUIRE(reconstruct(r.tree()) == g);
                check_tree_shape(r.tree(), false);
            } else {
                CHECK(witness_induces(g, r.witness()));
            }
        }
        CHECK(members == expected_members[n]);
    }
}

TEST_CASE("round trip through generated members of varied shapes") {
    const GenKind kinds[] = {GenKind::Split, GenKind::PentagonSub, GenKind::Unified,
                             GenKind::Mixed};
    for (std::uint64_t seed = 1; seed <= 40; ++seed)
        for (GenKind kind : kinds) {
            int n = 1 + static_cast<int>((seed * 7) % 40);
            GeneratedInstance inst = generate_member(seed, n, kind);
            CHECK(reconstruct(inst.tree) == inst.graph);
            RecognitionResult r = decompose(inst.graph);
            REQUIRE(r.is_member());
            CHECK(reconstruct(r.tree()) == inst.graph);
            check_tree_shape(r.tree(), true);
        }
}

TEST_CASE("recognition is self-complementary on random graphs") {
    std::mt19937_64 rng(404);
    for (int round = 0; round < 60; ++round) {
        Graph g = oracle::random_graph(rng, 9, round % 2 ? 0.2 : 0.5);
        CHECK(recognize(g) == recognize(complement(g)));
        CHECK(recognize(g) == is_free(g, {Pattern::P5, Pattern::CoP5}));
    }
}

TEST_CASE("reconstruct rejects malformed trees") {
    auto split_leaf_tree = [](int n, const Graph& g, VertexSet clique, VertexSet stable) {
        return DecompTree{n, SplitLeaf{g, SplitPartition{std::move(clique), std::move(stable)}}};
    };

    CHECK_THROWS_MATCHES(
        reconstruct(split_leaf_tree(4, complete_graph(3), VertexSet::full(3), VertexSet(3))),
        std::invalid_argument, MessageMatches(ContainsSubstring("leaf size disagrees")));
    CHECK_THROWS_MATCHES(
        reconstruct(split_leaf_tree(3, complete_graph(3), VertexSet::of(3, {0, 1}), VertexSet(3))),
        std::invalid_argument, MessageMatches(ContainsSubstring("does not cover")));
    CHECK_THROWS_MATCHES(
        reconstruct(
            split_leaf_tree(3, path_graph(3), VertexSet::of(3, {0, 2}), VertexSet::of(3, {1}))),
        std::invalid_argument, MessageMatches(ContainsSubstring("partition is invalid")));

    CHECK_THROWS_MATCHES(reconstruct(DecompTree{6, PentagonLeaf{{0, 1, 2, 3, 4}}}),
                         std::invalid_argument,
                         MessageMatches(ContainsSubstring("pentagon leaf with n != 5")));
    CHECK_THROWS_MATCHES(reconstruct(DecompTree{5, PentagonLeaf{{0, 1, 2, 3, 3}}}),
                         std::invalid_argument,
                         MessageMatches(ContainsSubstring("not a permutation")));

    // A substitution whose labels repeat a vertex.
    RecognitionResult r = decompose(cycle_graph(4));
    REQUIRE(r.is_member());
    {
        DecompTree t = std::move(std::get<DecompTree>(r.value));
        auto& node = std::get<SubstitutionNode>(t.node);
        node.labels[0] = node.labels[1];
        CHECK_THROWS_AS(reconstruct(t), std::invalid_argument);
        node.labels = {0, 1, 2};  // wrong length
        CHECK_THROWS_AS(reconstruct(t), std::invalid_argument);
    }
}

TEST_CASE("corrupting a unify node's roles is caught at reconstruction") {
    // Build the valid wedge unify tree, then damage it.
    Graph g = wedge5();
    SplitDivide d;
    d.a = VertexSet::of(5, {0, 1});
    d.b = VertexSet(5);
    d.c = VertexSet::of(5, {3, 4});
    d.l = VertexSet::of(5, {2});
    d.t = VertexSet(5);
    d.a0 = 0;
    d.c0 = 3;
    ComposablePair p = split_into_pair(g, d);

    UnifyNode node;
    node.a = p.g1.a;
    node.l1 = p.g1.l;
    node.cstar = p.g1.cstar;
    node.a0 = p.g1.a0;
    node.b2 = p.g2.b;
    node.c = p.g2.c;
    node.l2 = p.g2.l;
    node.t2 = p.g2.t;
    node.astar = p.g2.astar;
    node.c0 = p.g2.c0;
    node.labels = unification_vertex_order(d);
    auto leaf = [](const Graph& h) {
        auto sr = is_split(h);
        return std::make_unique<DecompTree>(
            DecompTree{h.vertex_count(), SplitLeaf{h, std::get<SplitPartition>(sr)}});
    };
    node.left = leaf(p.g1.graph);
    node.right = leaf(p.g2.graph);
    node.a0 = 1;  // in a, but not complete to l
    DecompTree t{5, std::move(node)};
    CHECK_THROWS_MATCHES(reconstruct(t), std::invalid_argument,
                         MessageMatches(ContainsSubstring("pair violates")));
}
