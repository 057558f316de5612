#pragma once

#include <optional>

#include "p5free/structure.hpp"

namespace p5free {

enum class Side { InGraph, InComplement };

inline const char* side_name(Side s) {
    return s == Side::InGraph ? "graph" : "complement";
}

/// Five-way partition (A, B, C, L, T) of the vertices of the side graph
/// (g itself, or its complement) along which the graph splits into two
/// strictly smaller parts:
///   - |A| >= 2; A complete to B and anticomplete to C and T; a0 in A is
///     complete to L;
///   - L nonempty clique, every vertex of L mixed on A, L complete to B and C;
///   - |C| >= 2; c0 in C is complete to B; no vertex of C is mixed on an
///     anticomponent of B;
///   - T stable and anticomplete to C.
/// B and T may be empty.
struct SplitDivide {
    Side side = Side::InGraph;
    VertexSet a, b, c, l, t;
    int a0 = -1;
    int c0 = -1;
};

/// Check every clause of the divide against the declared side of g. Throws
/// only if the sets fail to partition V(g).
inline std::vector<Violation> validate_split_divide(const Graph& g, const SplitDivide& d) {
    const int n = g.vertex_count();
    for (const VertexSet* s : {&d.a, &d.b, &d.c, &d.l, &d.t})
        if (s->universe() != n)
            throw std::invalid_argument("split divide: set universe mismatch");
    if (d.a.size() + d.b.size() + d.c.size() + d.l.size() + d.t.size() != n ||
        (d.a | d.b | d.c | d.l | d.t) != VertexSet::full(n))
        throw std::invalid_argument("split divide: sets do not partition V");

    const Graph side = d.side == Side::InComplement ? complement(g) : g;
    std::vector<Violation> out;
    auto flag = [&out](std::string clause, std::string detail) {
        out.push_back({std::move(clause), std::move(detail)});
    };

    if (d.a.size() < 2) flag("A-size", "A has fewer than 2 vertices");
    if (!side.sets_complete(d.a, d.b)) flag("A-complete-B", "A is not complete to B");
    if (!side.sets_anticomplete(d.a, d.c | d.t))
        flag("A-anticomplete-CT", "A meets C or T");
    if (!d.a.contains(d.a0))
        flag("a0", "a0 = " + std::to_string(d.a0) + " is not in A");
    else if (!side.complete_to(d.a0, d.l))
        flag("a0", "a0 = " + std::to_string(d.a0) + " misses a vertex of L");

    if (d.l.empty()) flag("L-nonempty", "L is empty");
    if (!side.is_clique(d.l)) flag("L-clique", "L is not a clique");
    for (int v : d.l)
        if (d.a.empty() || side.complete_to(v, d.a) || side.anticomplete_to(v, d.a))
            flag("L-mixed-on-A", "vertex " + std::to_string(v) + " of L is not mixed on A");
    if (!side.sets_complete(d.l, d.b | d.c))
        flag("L-complete-BC", "L is not complete to B and C");

    if (d.c.size() < 2) flag("C-size", "C has fewer than 2 vertices");
    if (!d.c.contains(d.c0))
        flag("c0", "c0 = " + std::to_string(d.c0) + " is not in C");
    else if (!side.complete_to(d.c0, d.b))
        flag("c0", "c0 = " + std::to_string(d.c0) + " misses a vertex of B");
    for (const VertexSet& z : anticomponents(side, d.b))
        for (int v : d.c)
            if (!side.complete_to(v, z) && !side.anticomplete_to(v, z))
                flag("C-anticomponents-B", "vertex " + std::to_string(v) +
                                               " of C is mixed on " + z.to_string());

    if (!side.is_stable(d.t)) flag("T-stable", "T is not stable");
    if (!side.sets_anticomplete(d.t, d.c)) flag("T-anticomplete-C", "T meets C");

    return out;
}

namespace detail {

/// Divide construction on the side graph h, which is prime, class-free and
/// contains two disjoint edges. Returns sets in h's labels.
inline SplitDivide divide_from_structure(const Graph& h, const StructurePartition& sp,
                                         bool& divide_in_complement_of_h) {
    const int n = h.vertex_count();
    VertexSet y = union_of(sp.ys);
    SplitDivide d;

    if (h.is_clique(y)) {
        // Divide of h itself: peel the first big piece off against its
        // mixed attachment inside the clique Y.
        divide_in_complement_of_h = false;
        d.a = sp.xs[1];
        d.l = sp.ys[1];
        d.b = y - sp.ys[1];
        d.c = VertexSet(n);
        for (int i = 2; i <= sp.m; ++i) d.c |= sp.xs[static_cast<std::size_t>(i)];
        d.t = sp.xs[0];
    } else {
        // Divide of the complement of h. Z runs over the big anticomponents
        // of Y; pick the first whose attachment X_Z is anticomplete to every
        // other big anticomponent (one exists by clause (ix)).
        divide_in_complement_of_h = true;
        const std::pair<VertexSet, VertexSet>* choice = nullptr;
        for (const auto& attach : sp.mixed_attach) {
            bool clean = true;
            for (const auto& other : sp.mixed_attach)
                if (&other != &attach && !h.sets_anticomplete(attach.second, other.first)) {
                    clean = false;
                    break;
                }
            if (clean) {
                choice = &attach;
                break;
            }
        }
        if (!choice)
            throw std::logic_error("find_split_divide: no anticomponent satisfies clause (ix)");
        const VertexSet& z = choice->first;
        const VertexSet& xz = choice->second;

        // Z lives inside a single Y part; the piece with that index plays
        // the special role (any big piece works when Z sits in Y0).
        int home = 0;
        for (int i = 0; i <= sp.m; ++i)
            if (z.intersects(sp.ys[static_cast<std::size_t>(i)])) {
                home = i;
                if (!z.is_subset_of(sp.ys[static_cast<std::size_t>(i)]))
                    throw std::logic_error(
                        "find_split_divide: anticomponent spans two Y parts");
                break;
            }
        const int s = home >= 1 ? home : 1;

        d.a = z;
        d.l = xz;
        d.b = VertexSet(n);
        VertexSet cprime(n);
        for (int v : sp.xs[static_cast<std::size_t>(s)] | (sp.xs[0] - xz)) {
            if (h.anticomplete_to(v, z))
                d.b.add(v);
            else if (h.complete_to(v, z))
                cprime.add(v);
            else
                throw std::logic_error("find_split_divide: vertex " + std::to_string(v) +
                                       " is mixed on the chosen anticomponent");
        }
        // K: vertices forming size-1 anticomponents of Y; those with a
        // neighbor in X_Z become T.
        d.t = VertexSet(n);
        VertexSet k(n);
        for (const VertexSet& anti : anticomponents(h, y))
            if (anti.size() == 1) k |= anti;
        for (int v : k)
            if (!h.anticomplete_to(v, xz)) d.t.add(v);
        d.c = cprime | (y - (z | d.t));
        for (int i = 1; i <= sp.m; ++i)
            if (i != s) d.c |= sp.xs[static_cast<std::size_t>(i)];
    }
    return d;
}

}  // namespace detail

/// Divide search. Split inputs yield nothing (they are leaves, not divided);
/// otherwise g must be {P5, CoP5, C5}-free and prime, and a valid divide is
/// returned: on the side of g containing two disjoint edges, either the
/// derived partition divides that side directly (Y a clique) or it divides
/// the other side. a0 / c0 are the least qualifying vertices.
inline std::optional<SplitDivide> find_split_divide(const Graph& g) {
    if (is_split_graph(g)) return std::nullopt;
    if (auto w = find_first_induced(g, {Pattern::P5, Pattern::CoP5, Pattern::C5}))
        throw std::invalid_argument("find_split_divide: graph contains " + format_witness(*w));
    if (auto h = find_proper_homogeneous_set(g))
        throw std::invalid_argument("find_split_divide: not prime, homogeneous set " +
                                    h->members.to_string());

    // Work on whichever side shows two disjoint edges (a non-split class
    // member has them on at least one side).
    const bool flip = !find_induced(g, Pattern::CoC4).has_value();
    const Graph side_graph = flip ? complement(g) : g;
    StructurePartition sp = build_structure_partition(side_graph);

    bool in_complement_of_side = false;
    SplitDivide d = detail::divide_from_structure(side_graph, sp, in_complement_of_side);
    d.side = (flip != in_complement_of_side) ? Side::InComplement : Side::InGraph;

    const Graph divide_side = d.side == Side::InComplement ? complement(g) : g;
    d.a0 = -1;
    for (int v : d.a)
        if (divide_side.complete_to(v, d.l)) {
            d.a0 = v;
            break;
        }
    d.c0 = -1;
    for (int v : d.c)
        if (divide_side.complete_to(v, d.b)) {
            d.c0 = v;
            break;
        }

    std::vector<Violation> bad = validate_split_divide(g, d);
    if (!bad.empty())
        throw std::logic_error("find_split_divide: constructed divide violates " +
                               bad.front().clause + ": " + bad.front().detail);
    return d;
}

/// One half of a composable pair. Role vectors are ascending lists of the
/// half's own vertex labels; position k of b / l / t in one half corresponds
/// to position k in the other.
struct PairHalf1 {
    Graph graph;  // on a + b + l + t + {cstar}
    std::vector<int> a, b, l, t;
    int cstar = -1;  // stand-in for the missing C side: complete to b+l, anticomplete to a+t
    int a0 = -1;     // vertex of a complete to l
};

struct PairHalf2 {
    Graph graph;  // on b + c + l + t + {astar}
    std::vector<int> b, c, l, t;
    int astar = -1;  // stand-in for the missing A side: complete to b+l, anticomplete to c+t
    int c0 = -1;     // vertex of c complete to b
};

struct ComposablePair {
    PairHalf1 g1;
    PairHalf2 g2;
};

namespace detail {

inline VertexSet roles_to_set(int n, const std::vector<int>& roles) {
    VertexSet s(n);
    for (int v : roles) s.add(v);
    return s;
}

inline bool ascending_distinct(const std::vector<int>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i - 1] >= v[i]) return false;
    return true;
}

}  // namespace detail

/// Definition-level check of a composable pair: role shapes, the clauses on
/// each half, and agreement of the two halves on the shared b + l + t part
/// under the positional correspondence (not up to isomorphism).
inline std::vector<Violation> validate_composable_pair(const ComposablePair& p) {
    std::vector<Violation> out;
    auto flag = [&out](std::string clause, std::string detail) {
        out.push_back({std::move(clause), std::move(detail)});
    };

    const Graph& g1 = p.g1.graph;
    const Graph& g2 = p.g2.graph;
    const int n1 = g1.vertex_count();
    const int n2 = g2.vertex_count();

    for (const std::vector<int>* r : {&p.g1.a, &p.g1.b, &p.g1.l, &p.g1.t})
        if (!detail::ascending_distinct(*r)) {
            flag("roles", "a role list of g1 is not strictly ascending");
            return out;
        }
    for (const std::vector<int>* r : {&p.g2.b, &p.g2.c, &p.g2.l, &p.g2.t})
        if (!detail::ascending_distinct(*r)) {
            flag("roles", "a role list of g2 is not strictly ascending");
            return out;
        }
    for (int v : p.g1.a)
        if (v < 0 || v >= n1) {
            flag("roles", "role vertex out of range in g1");
            return out;
        }
    if (static_cast<int>(p.g1.a.size() + p.g1.b.size() + p.g1.l.size() + p.g1.t.size()) + 1 !=
            n1 ||
        p.g1.cstar < 0 || p.g1.cstar >= n1) {
        flag("roles", "g1 roles do not partition its vertices");
        return out;
    }
    if (static_cast<int>(p.g2.b.size() + p.g2.c.size() + p.g2.l.size() + p.g2.t.size()) + 1 !=
            n2 ||
        p.g2.astar < 0 || p.g2.astar >= n2) {
        flag("roles", "g2 roles do not partition its vertices");
        return out;
    }

    VertexSet a1 = detail::roles_to_set(n1, p.g1.a);
    VertexSet b1 = detail::roles_to_set(n1, p.g1.b);
    VertexSet l1 = detail::roles_to_set(n1, p.g1.l);
    VertexSet t1 = detail::roles_to_set(n1, p.g1.t);
    VertexSet all1 = a1 | b1 | l1 | t1;
    if (all1.contains(p.g1.cstar) ||
        all1.size() + 1 != n1) {
        flag("roles", "g1 roles overlap");
        return out;
    }
    VertexSet b2 = detail::roles_to_set(n2, p.g2.b);
    VertexSet c2 = detail::roles_to_set(n2, p.g2.c);
    VertexSet l2 = detail::roles_to_set(n2, p.g2.l);
    VertexSet t2 = detail::roles_to_set(n2, p.g2.t);
    VertexSet all2 = b2 | c2 | l2 | t2;
    if (all2.contains(p.g2.astar) || all2.size() + 1 != n2) {
        flag("roles", "g2 roles overlap");
        return out;
    }
    if (p.g1.b.size() != p.g2.b.size() || p.g1.l.size() != p.g2.l.size() ||
        p.g1.t.size() != p.g2.t.size()) {
        flag("roles", "shared b/l/t sizes differ between the halves");
        return out;
    }
    if (p.g1.a.empty()) flag("A-nonempty", "a is empty");
    if (p.g2.c.empty()) flag("C-nonempty", "c is empty");

    if (!g1.is_clique(l1)) flag("L-clique", "l is not a clique in g1");
    if (!g1.is_stable(t1)) flag("T-stable", "t is not stable in g1");
    if (!g1.sets_complete(a1, b1)) flag("A-complete-B", "a is not complete to b in g1");
    if (!g1.sets_anticomplete(a1, t1)) flag("A-anticomplete-T", "a meets t in g1");
    if (p.g1.a0 < 0 || !a1.contains(p.g1.a0))
        flag("a0", "a0 is not a vertex of a");
    else if (!g1.complete_to(p.g1.a0, l1))
        flag("a0", "a0 = " + std::to_string(p.g1.a0) + " misses a vertex of l");
    if (!g1.complete_to(p.g1.cstar, b1 | l1))
        flag("cstar", "cstar misses a vertex of b or l");
    if (!g1.anticomplete_to(p.g1.cstar, a1 | t1))
        flag("cstar", "cstar has a neighbor in a or t");

    // Shared part: adjacency inside b+l+t must agree position-by-position.
    std::vector<int> shared1 = p.g1.b;
    shared1.insert(shared1.end(), p.g1.l.begin(), p.g1.l.end());
    shared1.insert(shared1.end(), p.g1.t.begin(), p.g1.t.end());
    std::vector<int> shared2 = p.g2.b;
    shared2.insert(shared2.end(), p.g2.l.begin(), p.g2.l.end());
    shared2.insert(shared2.end(), p.g2.t.begin(), p.g2.t.end());
    for (std::size_t i = 0; i < shared1.size(); ++i)
        for (std::size_t j = i + 1; j < shared1.size(); ++j)
            if (g1.adjacent(shared1[i], shared1[j]) != g2.adjacent(shared2[i], shared2[j])) {
                flag("agreement", "halves disagree on shared pair (position " +
                                      std::to_string(i) + "," + std::to_string(j) + ")");
                i = shared1.size();  // one report is enough
                break;
            }

    if (!g2.sets_anticomplete(t2, c2)) flag("T-anticomplete-C", "t meets c in g2");
    if (!g2.sets_complete(l2, b2 | c2)) flag("L-complete-BC", "l is not complete to b and c in g2");
    if (!g2.complete_to(p.g2.astar, b2 | l2))
        flag("astar", "astar misses a vertex of b or l");
    if (!g2.anticomplete_to(p.g2.astar, c2 | t2))
        flag("astar", "astar has a neighbor in c or t");
    if (p.g2.c0 < 0 || !c2.contains(p.g2.c0))
        flag("c0", "c0 is not a vertex of c");
    else if (!g2.complete_to(p.g2.c0, b2))
        flag("c0", "c0 = " + std::to_string(p.g2.c0) + " misses a vertex of b");
    for (const VertexSet& z : anticomponents(g2, b2))
        for (int v : p.g2.c)
            if (!g2.complete_to(v, z) && !g2.anticomplete_to(v, z))
                flag("C-anticomponents-B", "vertex " + std::to_string(v) +
                                               " of c is mixed on " + z.to_string());

    return out;
}

/// Cut the side graph into the two overlapping halves of the divide:
/// g1 = side[a + b + {c0} + l + t] with c0 renamed cstar, and
/// g2 = side[{a0} + b + c + l + t] with a0 renamed astar. Both halves are
/// relabeled 0..k-1 ascending (the induced convention), so the shared b/l/t
/// lists correspond position-by-position.
inline ComposablePair split_into_pair(const Graph& g, const SplitDivide& d) {
    std::vector<Violation> bad = validate_split_divide(g, d);
    if (!bad.empty())
        throw std::invalid_argument("split_into_pair: divide violates " + bad.front().clause +
                                    ": " + bad.front().detail);
    const Graph side = d.side == Side::InComplement ? complement(g) : g;

    auto ranks = [](const std::vector<int>& hosts, const VertexSet& subset) {
        std::vector<int> out;
        for (std::size_t i = 0; i < hosts.size(); ++i)
            if (subset.contains(hosts[i])) out.push_back(static_cast<int>(i));
        return out;
    };
    auto rank_of = [](const std::vector<int>& hosts, int host) {
        return static_cast<int>(std::lower_bound(hosts.begin(), hosts.end(), host) -
                                hosts.begin());
    };

    ComposablePair p;
    {
        VertexSet verts1 = d.a | d.b | d.l | d.t;
        verts1.add(d.c0);
        InducedSubgraph part = induced(side, verts1);
        p.g1.graph = std::move(part.graph);
        p.g1.a = ranks(part.vertex_map, d.a);
        p.g1.b = ranks(part.vertex_map, d.b);
        p.g1.l = ranks(part.vertex_map, d.l);
        p.g1.t = ranks(part.vertex_map, d.t);
        p.g1.cstar = rank_of(part.vertex_map, d.c0);
        p.g1.a0 = rank_of(part.vertex_map, d.a0);
    }
    {
        VertexSet verts2 = d.b | d.c | d.l | d.t;
        verts2.add(d.a0);
        InducedSubgraph part = induced(side, verts2);
        p.g2.graph = std::move(part.graph);
        p.g2.b = ranks(part.vertex_map, d.b);
        p.g2.c = ranks(part.vertex_map, d.c);
        p.g2.l = ranks(part.vertex_map, d.l);
        p.g2.t = ranks(part.vertex_map, d.t);
        p.g2.astar = rank_of(part.vertex_map, d.a0);
        p.g2.c0 = rank_of(part.vertex_map, d.c0);
    }

    bad = validate_composable_pair(p);
    if (!bad.empty())
        throw std::logic_error("split_into_pair: produced pair violates " + bad.front().clause +
                               ": " + bad.front().detail);
    return p;
}

/// Vertex order of the unified graph: a-vertices of g1 first (ascending),
/// then the shared b+l+t in ascending g2 order, then the c-vertices of g2.
/// Entry i names the half vertex that unified vertex i came from.
struct UnifiedLayout {
    std::vector<int> from_g1;   // unified index of each g1 vertex, -1 for cstar
    std::vector<int> from_g2;   // unified index of each g2 vertex, -1 for astar
    int total = 0;
};

inline UnifiedLayout unified_layout(const ComposablePair& p) {
    const int n1 = p.g1.graph.vertex_count();
    const int n2 = p.g2.graph.vertex_count();
    UnifiedLayout lay;
    lay.from_g1.assign(static_cast<std::size_t>(n1), -1);
    lay.from_g2.assign(static_cast<std::size_t>(n2), -1);

    int next = 0;
    for (int v : p.g1.a) lay.from_g1[static_cast<std::size_t>(v)] = next++;

    std::vector<int> shared2 = p.g2.b;
    shared2.insert(shared2.end(), p.g2.l.begin(), p.g2.l.end());
    shared2.insert(shared2.end(), p.g2.t.begin(), p.g2.t.end());
    std::vector<int> shared1 = p.g1.b;
    shared1.insert(shared1.end(), p.g1.l.begin(), p.g1.l.end());
    shared1.insert(shared1.end(), p.g1.t.begin(), p.g1.t.end());

    // Ascending g2 order for the shared block, mirrored onto g1 through the
    // positional correspondence.
    std::vector<std::size_t> pos(shared2.size());
    for (std::size_t i = 0; i < pos.size(); ++i) pos[i] = i;
    std::sort(pos.begin(), pos.end(),
              [&shared2](std::size_t i, std::size_t j) { return shared2[i] < shared2[j]; });
    for (std::size_t i : pos) {
        lay.from_g2[static_cast<std::size_t>(shared2[i])] = next;
        lay.from_g1[static_cast<std::size_t>(shared1[i])] = next;
        ++next;
    }
    for (int v : p.g2.c) lay.from_g2[static_cast<std::size_t>(v)] = next++;
    lay.total = next;
    return lay;
}

/// Glue a valid pair back together: keep g1 on a + shared, g2 on shared + c,
/// drop the stand-ins, and leave a anticomplete to c.
inline Graph unify_pair(const ComposablePair& p) {
    std::vector<Violation> bad = validate_composable_pair(p);
    if (!bad.empty())
        throw std::invalid_argument("unify_pair: pair violates " + bad.front().clause + ": " +
                                    bad.front().detail);
    UnifiedLayout lay = unified_layout(p);
    Graph g(lay.total);
    const auto& g1 = p.g1.graph;
    const auto& g2 = p.g2.graph;
    for (int u = 0; u < g1.vertex_count(); ++u) {
        if (lay.from_g1[static_cast<std::size_t>(u)] < 0) continue;
        for (int v : g1.neighbors(u))
            if (u < v && lay.from_g1[static_cast<std::size_t>(v)] >= 0)
                g.add_edge(lay.from_g1[static_cast<std::size_t>(u)],
                           lay.from_g1[static_cast<std::size_t>(v)]);
    }
    for (int u = 0; u < g2.vertex_count(); ++u) {
        if (lay.from_g2[static_cast<std::size_t>(u)] < 0) continue;
        for (int v : g2.neighbors(u))
            if (u < v && lay.from_g2[static_cast<std::size_t>(v)] >= 0)
                g.add_edge(lay.from_g2[static_cast<std::size_t>(u)],
                           lay.from_g2[static_cast<std::size_t>(v)]);
    }
    return g;
}

/// Original labels of the side graph in unified order: sorted A, then sorted
/// B+L+T, then sorted C. unify_pair(split_into_pair(g, d)) equals the side
/// graph relabeled by the inverse of this list.
inline std::vector<int> unification_vertex_order(const SplitDivide& d) {
    std::vector<int> order = d.a.to_vector();
    for (int v : d.b | d.l | d.t) order.push_back(v);
    for (int v : d.c) order.push_back(v);
    return order;
}

}  // namespace p5free
