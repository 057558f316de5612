#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace p5free {

/// Subset of a fixed vertex range {0, ..., universe-1}, packed 64 bits per
/// word. Binary operations require both operands to share the same universe.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe)
        : universe_(checked_universe(universe)), words_(word_count(universe)) {}

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (auto& w : s.words_) w = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    static VertexSet of(int universe, std::initializer_list<int> vs) {
        VertexSet s(universe);
        for (int v : vs) s.add(v);
        return s;
    }

    int universe() const { return universe_; }

    bool contains(int v) const {
        return v >= 0 && v < universe_ &&
               (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
    }

    void add(int v) {
        check_range(v);
        words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
    }

    void remove(int v) {
        check_range(v);
        words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    int size() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    /// Least element, or -1 when empty.
    int min() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }

    /// First element >= v, or universe() when none.
    int next_at_or_after(int v) const {
        if (v < 0) v = 0;
        if (v >= universe_) return universe_;
        std::size_t i = static_cast<std::size_t>(v) >> 6;
        std::uint64_t w = words_[i] & (~std::uint64_t{0} << (v & 63));
        while (true) {
            if (w) return static_cast<int>(i * 64 + std::countr_zero(w));
            if (++i == words_.size()) return universe_;
            w = words_[i];
        }
    }

    bool intersects(const VertexSet& o) const {
        check_same(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const VertexSet& o) const {
        check_same(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    VertexSet& operator|=(const VertexSet& o) {
        check_same(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        check_same(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) {
        check_same(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    /// All vertices of the universe not in this set.
    VertexSet complemented() const {
        VertexSet s(universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = ~words_[i];
        s.trim();
        return s;
    }

    bool operator==(const VertexSet&) const = default;

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (int v : *this) out.push_back(v);
        return out;
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int v : *this) {
            if (!first) s += ",";
            s += std::to_string(v);
            first = false;
        }
        return s + "}";
    }

    class const_iterator {
    public:
        const_iterator(const VertexSet* s, int v) : set_(s), v_(v) {}
        int operator*() const { return v_; }
        const_iterator& operator++() {
            v_ = set_->next_at_or_after(v_ + 1);
            return *this;
        }
        bool operator!=(const const_iterator& o) const { return v_ != o.v_; }
        bool operator==(const const_iterator& o) const { return v_ == o.v_; }

    private:
        const VertexSet* set_;
        int v_;
    };

    const_iterator begin() const { return {this, next_at_or_after(0)}; }
    const_iterator end() const { return {this, universe_}; }

private:
    static int checked_universe(int u) {
        if (u < 0) throw std::invalid_argument("VertexSet: negative universe");
        return u;
    }
    static std::size_t word_count(int u) {
        return (static_cast<std::size_t>(u) + 63) / 64;
    }
    void check_range(int v) const {
        if (v < 0 || v >= universe_)
            throw std::out_of_range("VertexSet: vertex " + std::to_string(v) +
                                    " outside universe of size " + std::to_string(universe_));
    }
    void check_same(const VertexSet& o) const {
        if (universe_ != o.universe_)
            throw std::logic_error("VertexSet: universe mismatch");
    }
    // Bits above universe_ stay zero so ==, popcount and complemented() are exact.
    void trim() {
        if (universe_ % 64 != 0 && !words_.empty())
            words_.back() &= (~std::uint64_t{0}) >> (64 - universe_ % 64);
    }

    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Labeled simple graph on vertices {0..n-1} with symmetric, irreflexive
/// adjacency stored as one bitset row per vertex. Immutable by convention
/// once built; every algorithm in this library treats it as a value.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(checked_order(n)), adj_(static_cast<std::size_t>(n), VertexSet(n)) {}

    int vertex_count() const { return n_; }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        return adj_[static_cast<std::size_t>(u)].contains(v);
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("Graph: self-loop at vertex " + std::to_string(u));
        adj_[static_cast<std::size_t>(u)].add(v);
        adj_[static_cast<std::size_t>(v)].add(u);
    }

    void remove_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        adj_[static_cast<std::size_t>(u)].remove(v);
        adj_[static_cast<std::size_t>(v)].remove(u);
    }

    const VertexSet& neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    /// Vertices distinct from v and not adjacent to it.
    VertexSet non_neighbors(int v) const {
        VertexSet s = neighbors(v).complemented();
        s.remove(v);
        return s;
    }

    int degree(int v) const { return neighbors(v).size(); }

    int edge_count() const {
        int twice = 0;
        for (const auto& row : adj_) twice += row.size();
        return twice / 2;
    }

    VertexSet vertices() const { return VertexSet::full(n_); }

    /// True iff v is adjacent to every vertex of s other than v itself.
    bool complete_to(int v, const VertexSet& s) const {
        VertexSet missing = s - neighbors(v);
        if (missing.contains(v)) missing.remove(v);
        return missing.empty();
    }

    /// True iff v has no neighbor in s.
    bool anticomplete_to(int v, const VertexSet& s) const {
        return !neighbors(v).intersects(s);
    }

    /// Every pair (u in a, v in b, u != v) adjacent.
    bool sets_complete(const VertexSet& a, const VertexSet& b) const {
        for (int u : a)
            if (!complete_to(u, b)) return false;
        return true;
    }

    /// No pair (u in a, v in b) adjacent.
    bool sets_anticomplete(const VertexSet& a, const VertexSet& b) const {
        for (int u : a)
            if (!anticomplete_to(u, b)) return false;
        return true;
    }

    bool is_clique(const VertexSet& s) const {
        for (int u : s)
            if (!complete_to(u, s)) return false;
        return true;
    }

    bool is_stable(const VertexSet& s) const {
        for (int u : s)
            if (!anticomplete_to(u, s)) return false;
        return true;
    }

    bool operator==(const Graph&) const = default;

private:
    static int checked_order(int n) {
        if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
        return n;
    }
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::out_of_range("Graph: vertex " + std::to_string(v) +
                                    " outside {0.." + std::to_string(n_ - 1) + "}");
    }

    int n_ = 0;
    std::vector<VertexSet> adj_;
};

inline Graph make_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

inline Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need at least 3 vertices");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

/// Edge {u,v} present iff u != v and {u,v} absent in g. Involutive.
inline Graph complement(const Graph& g) {
    const int n = g.vertex_count();
    Graph c(n);
    for (int u = 0; u < n; ++u)
        for (int v : g.non_neighbors(u))
            if (u < v) c.add_edge(u, v);
    return c;
}

/// Copy of g with vertex u renamed to new_label[u]; new_label must be a
/// permutation of 0..n-1.
inline Graph relabel(const Graph& g, const std::vector<int>& new_label) {
    const int n = g.vertex_count();
    if (static_cast<int>(new_label.size()) != n)
        throw std::invalid_argument("relabel: label map has wrong size");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int l : new_label) {
        if (l < 0 || l >= n || seen[static_cast<std::size_t>(l)])
            throw std::invalid_argument("relabel: label map is not a permutation");
        seen[static_cast<std::size_t>(l)] = true;
    }
    Graph r(n);
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u))
            if (u < v)
                r.add_edge(new_label[static_cast<std::size_t>(u)],
                           new_label[static_cast<std::size_t>(v)]);
    return r;
}

/// Induced subgraph relabeled 0..|s|-1 in ascending order of original
/// labels, together with the map back to the host graph.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> vertex_map;  // child label -> host label, ascending
};

inline InducedSubgraph induced(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.vertex_count())
        throw std::invalid_argument("induced: vertex set does not match the graph");
    InducedSubgraph out;
    out.vertex_map = s.to_vector();
    const int k = static_cast<int>(out.vertex_map.size());
    out.graph = Graph(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.adjacent(out.vertex_map[static_cast<std::size_t>(i)],
                           out.vertex_map[static_cast<std::size_t>(j)]))
                out.graph.add_edge(i, j);
    return out;
}

namespace detail {

inline std::vector<VertexSet> connected_parts(const Graph& g, const VertexSet& s,
                                              bool in_complement) {
    if (s.universe() != g.vertex_count())
        throw std::invalid_argument("components: vertex set does not match the graph");
    const int n = g.vertex_count();
    std::vector<VertexSet> out;
    VertexSet seen(n);
    for (int v : s) {
        if (seen.contains(v)) continue;
        VertexSet comp(n);
        comp.add(v);
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next(n);
            for (int u : frontier)
                next |= (in_complement ? g.non_neighbors(u) : g.neighbors(u)) & s;
            next -= comp;
            comp |= next;
            frontier = next;
        }
        seen |= comp;
        out.push_back(comp);  // seeds visited ascending, so parts sort by min
    }
    return out;
}

}  // namespace detail

/// Vertex sets of the connected components of g[s], sorted by least element.
inline std::vector<VertexSet> components(const Graph& g, const VertexSet& s) {
    return detail::connected_parts(g, s, false);
}

/// Components of the complement restricted to s, sorted by least element.
inline std::vector<VertexSet> anticomponents(const Graph& g, const VertexSet& s) {
    return detail::connected_parts(g, s, true);
}

enum class Relation { Complete, Anticomplete, Mixed };

inline const char* relation_name(Relation r) {
    switch (r) {
        case Relation::Complete: return "complete";
        case Relation::Anticomplete: return "anticomplete";
        case Relation::Mixed: return "mixed";
    }
    return "?";
}

/// How v sits relative to the nonempty set s (v must lie outside s).
inline Relation relation(const Graph& g, int v, const VertexSet& s) {
    if (s.universe() != g.vertex_count())
        throw std::invalid_argument("relation: vertex set does not match the graph");
    if (s.empty()) throw std::invalid_argument("relation: empty set");
    if (s.contains(v)) throw std::invalid_argument("relation: vertex belongs to the set");
    if (g.complete_to(v, s)) return Relation::Complete;
    if (g.anticomplete_to(v, s)) return Relation::Anticomplete;
    return Relation::Mixed;
}

}  // namespace p5free
