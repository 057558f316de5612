#pragma once

#include <optional>
#include <utility>

#include "p5free/detect.hpp"
#include "p5free/modular.hpp"

namespace p5free {

/// A validator finding. `clause` is a short stable identifier, `detail` a
/// human-readable explanation with concrete vertices.
struct Violation {
    std::string clause;
    std::string detail;
};

inline std::string format_witness(const ForbiddenWitness& w) {
    std::string s = pattern_name(w.pattern);
    s += " (";
    for (std::size_t i = 0; i < w.vertices.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w.vertices[i]);
    }
    return s + ")";
}

/// In a {P5, CoP5, C5}-free graph, take disjoint nonempty sets a, b and a
/// vertex t outside both with: t anticomplete to a, t complete to b, every
/// vertex of b with a neighbor in a, and g[a] connected. Then some vertex of
/// a is complete to b; this returns the one with the most neighbors in b,
/// least label among maximizers. Every precondition is checked and reported
/// on its own.
inline int lemma_abx(const Graph& g, const VertexSet& a, const VertexSet& b, int t) {
    const int n = g.vertex_count();
    if (a.universe() != n || b.universe() != n)
        throw std::invalid_argument("lemma_abx: sets do not match the graph");
    if (t < 0 || t >= n) throw std::invalid_argument("lemma_abx: t out of range");
    if (a.empty()) throw std::invalid_argument("lemma_abx: a is empty");
    if (b.empty()) throw std::invalid_argument("lemma_abx: b is empty");
    if (a.intersects(b)) throw std::invalid_argument("lemma_abx: a and b intersect");
    if (a.contains(t) || b.contains(t))
        throw std::invalid_argument("lemma_abx: t belongs to a or b");
    if (!g.anticomplete_to(t, a))
        throw std::invalid_argument("lemma_abx: t has a neighbor in a");
    if (!g.complete_to(t, b))
        throw std::invalid_argument("lemma_abx: t misses a vertex of b");
    for (int v : b)
        if (g.anticomplete_to(v, a))
            throw std::invalid_argument("lemma_abx: vertex " + std::to_string(v) +
                                        " of b has no neighbor in a");
    if (components(g, a).size() != 1)
        throw std::invalid_argument("lemma_abx: g[a] is disconnected");
    if (auto w = find_first_induced(g, {Pattern::P5, Pattern::CoP5, Pattern::C5}))
        throw std::invalid_argument("lemma_abx: graph contains " + format_witness(*w));

    int best = -1, best_deg = -1;
    for (int v : a) {
        int d = (g.neighbors(v) & b).size();
        if (d > best_deg) {
            best = v;
            best_deg = d;
        }
    }
    if (!g.complete_to(best, b))
        throw std::logic_error("lemma_abx: maximizer is not complete to b");
    return best;
}

/// Two-level partition of a prime {P5, CoP5, C5}-free graph containing two
/// disjoint edges: X splits into a stable rest X0 and connected pieces
/// X1..Xm (m >= 2, each of size >= 2, pairwise anticomplete), Y = V \ X
/// splits into Y0 (complete to X \ X0) and Yi (vertices mixed on Xi), and
/// mixed_attach records, for each anticomponent Z of Y with |Z| >= 2, the
/// set X_Z of X0-vertices mixed on Z.
struct StructurePartition {
    int m = 0;
    std::vector<VertexSet> xs;  // X0..Xm
    std::vector<VertexSet> ys;  // Y0..Ym
    std::vector<std::pair<VertexSet, VertexSet>> mixed_attach;  // (Z, X_Z) by min of Z
};

inline VertexSet union_of(const std::vector<VertexSet>& sets, std::size_t from = 0) {
    if (sets.empty()) throw std::invalid_argument("union_of: no sets");
    VertexSet u(sets.front().universe());
    for (std::size_t i = from; i < sets.size(); ++i) u |= sets[i];
    return u;
}

/// Check the nine clauses of the partition against g. Returned violations
/// carry clause ids "(i)".."(ix)" plus "attach" when mixed_attach disagrees
/// with what g induces. Throws only if the sets fail to partition V(g).
inline std::vector<Violation> validate_structure_partition(const Graph& g,
                                                           const StructurePartition& sp) {
    const int n = g.vertex_count();
    if (sp.xs.size() != sp.ys.size() || static_cast<int>(sp.xs.size()) != sp.m + 1)
        throw std::invalid_argument("structure partition: expected m+1 X parts and Y parts");
    int total = 0;
    VertexSet all(n);
    for (const auto& part : {std::cref(sp.xs), std::cref(sp.ys)})
        for (const VertexSet& s : part.get()) {
            if (s.universe() != n)
                throw std::invalid_argument("structure partition: set universe mismatch");
            total += s.size();
            all |= s;
        }
    if (total != n || all != VertexSet::full(n))
        throw std::invalid_argument("structure partition: sets do not partition V");

    std::vector<Violation> out;
    auto flag = [&out](std::string clause, std::string detail) {
        out.push_back({std::move(clause), std::move(detail)});
    };

    const VertexSet& x0 = sp.xs[0];
    VertexSet x_all = union_of(sp.xs);
    VertexSet x_big = x_all - x0;
    VertexSet y_all = union_of(sp.ys);

    // (i) X0 stable; each Xi (i >= 1) connected of size >= 2; all X parts
    // pairwise anticomplete; and there are at least two big pieces.
    if (sp.m < 2) flag("(i)", "fewer than two connected pieces (m = " + std::to_string(sp.m) + ")");
    if (!g.is_stable(x0)) flag("(i)", "X0 " + x0.to_string() + " is not stable");
    for (int i = 1; i <= sp.m; ++i) {
        const VertexSet& xi = sp.xs[static_cast<std::size_t>(i)];
        if (xi.size() < 2)
            flag("(i)", "X" + std::to_string(i) + " has fewer than 2 vertices");
        if (!xi.empty() && components(g, xi).size() != 1)
            flag("(i)", "X" + std::to_string(i) + " " + xi.to_string() + " is disconnected");
    }
    for (int i = 0; i <= sp.m; ++i)
        for (int j = i + 1; j <= sp.m; ++j)
            if (!g.sets_anticomplete(sp.xs[static_cast<std::size_t>(i)],
                                     sp.xs[static_cast<std::size_t>(j)]))
                flag("(i)", "X" + std::to_string(i) + " and X" + std::to_string(j) +
                                " touch");

    // (ii) Yi nonempty; its vertices are mixed on Xi and complete to the
    // other big pieces; Y0 vertices are complete to all big pieces.
    for (int i = 1; i <= sp.m; ++i) {
        const VertexSet& yi = sp.ys[static_cast<std::size_t>(i)];
        const VertexSet& xi = sp.xs[static_cast<std::size_t>(i)];
        if (yi.empty()) flag("(ii)", "Y" + std::to_string(i) + " is empty");
        for (int y : yi) {
            if (xi.empty() || g.complete_to(y, xi) || g.anticomplete_to(y, xi))
                flag("(ii)", "vertex " + std::to_string(y) + " of Y" + std::to_string(i) +
                                 " is not mixed on X" + std::to_string(i));
            VertexSet others = x_big - xi;
            if (!g.complete_to(y, others))
                flag("(ii)", "vertex " + std::to_string(y) + " of Y" + std::to_string(i) +
                                 " misses another big piece");
        }
    }
    for (int y : sp.ys[0])
        if (!g.complete_to(y, x_big))
            flag("(ii)", "vertex " + std::to_string(y) + " of Y0 misses a big piece");

    // (iii) distinct Y parts are complete to each other.
    for (int i = 0; i <= sp.m; ++i)
        for (int j = i + 1; j <= sp.m; ++j)
            if (!g.sets_complete(sp.ys[static_cast<std::size_t>(i)],
                                 sp.ys[static_cast<std::size_t>(j)]))
                flag("(iii)", "Y" + std::to_string(i) + " and Y" + std::to_string(j) +
                                  " are not complete to each other");

    std::vector<VertexSet> y_anti = anticomponents(g, y_all);

    // (iv) no vertex of a big piece is mixed on an anticomponent of Y.
    for (int x : x_big)
        for (const VertexSet& z : y_anti)
            if (!g.complete_to(x, z) && !g.anticomplete_to(x, z))
                flag("(iv)", "vertex " + std::to_string(x) + " of a big piece is mixed on " +
                                 z.to_string());

    // (v) each big piece has a vertex complete to Y.
    for (int i = 1; i <= sp.m; ++i) {
        bool found = false;
        for (int x : sp.xs[static_cast<std::size_t>(i)])
            if (g.complete_to(x, y_all)) {
                found = true;
                break;
            }
        if (!found) flag("(v)", "no vertex of X" + std::to_string(i) + " is complete to Y");
    }

    // (vi) each X0-vertex is mixed on at most one anticomponent of Y.
    for (int x : x0) {
        int mixed = 0;
        for (const VertexSet& z : y_anti)
            if (!g.complete_to(x, z) && !g.anticomplete_to(x, z)) ++mixed;
        if (mixed > 1)
            flag("(vi)", "vertex " + std::to_string(x) + " of X0 is mixed on " +
                             std::to_string(mixed) + " anticomponents of Y");
    }

    // mixed_attach must list exactly the big anticomponents with the X0
    // vertices mixed on them.
    std::vector<std::pair<VertexSet, VertexSet>> expected;
    for (const VertexSet& z : y_anti) {
        if (z.size() < 2) continue;
        VertexSet xz(n);
        for (int x : x0)
            if (!g.complete_to(x, z) && !g.anticomplete_to(x, z)) xz.add(x);
        expected.emplace_back(z, xz);
    }
    if (sp.mixed_attach != expected)
        flag("attach", "mixed_attach disagrees with the anticomponents of Y");

    // (vii) each X_Z is nonempty and the X_Z are pairwise disjoint.
    for (std::size_t i = 0; i < sp.mixed_attach.size(); ++i) {
        const auto& [z, xz] = sp.mixed_attach[i];
        if (xz.empty()) flag("(vii)", "X_Z is empty for Z = " + z.to_string());
        for (std::size_t j = i + 1; j < sp.mixed_attach.size(); ++j)
            if (xz.intersects(sp.mixed_attach[j].second))
                flag("(vii)", "X_Z sets for " + z.to_string() + " and " +
                                  sp.mixed_attach[j].first.to_string() + " intersect");
    }

    // (viii) each big anticomponent has a vertex anticomplete to its X_Z.
    for (const auto& [z, xz] : sp.mixed_attach) {
        bool found = false;
        for (int v : z)
            if (g.anticomplete_to(v, xz)) {
                found = true;
                break;
            }
        if (!found)
            flag("(viii)", "every vertex of " + z.to_string() + " meets X_Z " + xz.to_string());
    }

    // (ix) if Y is not a clique, some big anticomponent Z has X_Z
    // anticomplete to all big anticomponents of Y \ Z.
    if (!g.is_clique(y_all)) {
        bool found = false;
        for (const auto& [z, xz] : sp.mixed_attach) {
            bool clean = true;
            for (const VertexSet& other : y_anti) {
                if (other == z || other.size() < 2) continue;
                if (!g.sets_anticomplete(xz, other)) {
                    clean = false;
                    break;
                }
            }
            if (clean) {
                found = true;
                break;
            }
        }
        if (!found)
            flag("(ix)", "no big anticomponent of Y has X_Z anticomplete to the others");
    }

    return out;
}

/// Build the partition for a prime {P5, CoP5, C5}-free graph containing two
/// disjoint edges. X is seeded with the least such witness and grown
/// greedily (ascending labels, repeated until stable) while g[X] keeps at
/// least two components of size >= 2; everything else is derived. The result
/// always passes validate_structure_partition.
inline StructurePartition build_structure_partition(const Graph& g) {
    const int n = g.vertex_count();
    if (auto h = find_proper_homogeneous_set(g))
        throw std::invalid_argument("build_structure_partition: not prime, homogeneous set " +
                                    h->members.to_string());
    if (auto w = find_first_induced(g, {Pattern::P5, Pattern::CoP5, Pattern::C5}))
        throw std::invalid_argument("build_structure_partition: graph contains " +
                                    format_witness(*w));
    auto seed = find_induced(g, Pattern::CoC4);
    if (!seed)
        throw std::invalid_argument(
            "build_structure_partition: graph has no two disjoint edges");

    auto big_count = [&g](const VertexSet& s) {
        int big = 0;
        for (const VertexSet& c : components(g, s))
            if (c.size() >= 2) ++big;
        return big;
    };

    VertexSet x(n);
    for (int v : seed->vertices) x.add(v);
    bool grew = true;
    while (grew) {
        grew = false;
        for (int v = 0; v < n; ++v) {
            if (x.contains(v)) continue;
            VertexSet t = x;
            t.add(v);
            if (big_count(t) >= 2) {
                x = t;
                grew = true;
            }
        }
    }

    StructurePartition sp;
    sp.xs.push_back(VertexSet(n));  // X0, filled below
    for (const VertexSet& c : components(g, x)) {
        if (c.size() >= 2)
            sp.xs.push_back(c);
        else
            sp.xs[0] |= c;
    }
    sp.m = static_cast<int>(sp.xs.size()) - 1;
    if (sp.m < 2)
        throw std::logic_error("build_structure_partition: fewer than two big pieces survived");

    VertexSet y = x.complemented();
    if (y.empty())
        throw std::logic_error("build_structure_partition: X swallowed the whole graph");
    sp.ys.assign(sp.xs.size(), VertexSet(n));
    for (int v : y) {
        int home = 0, mixed = 0;
        for (int i = 1; i <= sp.m; ++i) {
            const VertexSet& xi = sp.xs[static_cast<std::size_t>(i)];
            if (!g.complete_to(v, xi) && !g.anticomplete_to(v, xi)) {
                home = i;
                ++mixed;
            }
        }
        if (mixed > 1)
            throw std::logic_error("build_structure_partition: vertex " + std::to_string(v) +
                                   " is mixed on two big pieces");
        sp.ys[static_cast<std::size_t>(home)].add(v);
    }

    for (const VertexSet& z : anticomponents(g, y)) {
        if (z.size() < 2) continue;
        VertexSet xz(n);
        for (int v : sp.xs[0])
            if (!g.complete_to(v, z) && !g.anticomplete_to(v, z)) xz.add(v);
        sp.mixed_attach.emplace_back(z, xz);
    }

    std::vector<Violation> bad = validate_structure_partition(g, sp);
    if (!bad.empty())
        throw std::logic_error("build_structure_partition: clause " + bad.front().clause +
                               " failed: " + bad.front().detail);
    return sp;
}

}  // namespace p5free
