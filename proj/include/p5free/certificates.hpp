#pragma once

#include <json.hpp>

#include "p5free/graph_io.hpp"
#include "p5free/tree.hpp"

namespace p5free {

using nlohmann::json;

inline constexpr const char* kCertificateSchema = "p5free.cert/1";

/// Raised when a document parses as JSON but is not one of our certificate
/// documents (wrong schema tag, missing or mistyped fields).
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline json set_to_json(const VertexSet& s) { return json(s.to_vector()); }

inline VertexSet set_from_json(const json& j, int universe, const char* what) {
    if (!j.is_array()) throw SchemaError(std::string(what) + ": expected an array");
    VertexSet s(universe);
    for (const auto& e : j) {
        if (!e.is_number_integer()) throw SchemaError(std::string(what) + ": expected integers");
        int v = e.get<int>();
        if (v < 0 || v >= universe)
            throw SchemaError(std::string(what) + ": vertex " + std::to_string(v) +
                              " out of range");
        s.add(v);
    }
    return s;
}

inline std::vector<int> ints_from_json(const json& j, const char* what) {
    if (!j.is_array()) throw SchemaError(std::string(what) + ": expected an array");
    std::vector<int> out;
    for (const auto& e : j) {
        if (!e.is_number_integer()) throw SchemaError(std::string(what) + ": expected integers");
        out.push_back(e.get<int>());
    }
    return out;
}

inline const json& field(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError(std::string("missing field \"") + key + "\"");
    return *it;
}

inline int int_field(const json& j, const char* key) {
    const json& f = field(j, key);
    if (!f.is_number_integer()) throw SchemaError(std::string("field \"") + key + "\" must be an integer");
    return f.get<int>();
}

inline std::string string_field(const json& j, const char* key) {
    const json& f = field(j, key);
    if (!f.is_string()) throw SchemaError(std::string("field \"") + key + "\" must be a string");
    return f.get<std::string>();
}

}  // namespace detail

inline json witness_to_json(const ForbiddenWitness& w) {
    return json{{"pattern", pattern_name(w.pattern)}, {"vertices", w.vertices}};
}

inline ForbiddenWitness witness_from_json(const json& j) {
    auto p = pattern_from_name(detail::string_field(j, "pattern"));
    if (!p) throw SchemaError("witness: unknown pattern name");
    return ForbiddenWitness{*p, detail::ints_from_json(detail::field(j, "vertices"), "witness")};
}

inline json side_to_json(Side s) { return json(side_name(s)); }

inline Side side_from_json(const json& j) {
    if (j == "graph") return Side::InGraph;
    if (j == "complement") return Side::InComplement;
    throw SchemaError("side: expected \"graph\" or \"complement\"");
}

inline json tree_to_json(const DecompTree& t) {
    return std::visit(
        [&t](const auto& node) -> json {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, SplitLeaf>) {
                return json{{"kind", "split_leaf"},
                            {"n", t.n},
                            {"graph6", encode_graph6(node.graph)},
                            {"clique", detail::set_to_json(node.partition.clique_part)},
                            {"stable", detail::set_to_json(node.partition.stable_part)}};
            } else if constexpr (std::is_same_v<T, PentagonLeaf>) {
                return json{{"kind", "pentagon_leaf"},
                            {"n", 5},
                            {"cycle", std::vector<int>(node.cycle.begin(), node.cycle.end())}};
            } else if constexpr (std::is_same_v<T, SubstitutionNode>) {
                return json{{"kind", "substitution"},
                            {"n", t.n},
                            {"x", node.x},
                            {"labels", node.labels},
                            {"outer", tree_to_json(*node.outer)},
                            {"inner", tree_to_json(*node.inner)}};
            } else {
                return json{{"kind", "split_unification"},
                            {"n", t.n},
                            {"side", side_to_json(node.side)},
                            {"labels", node.labels},
                            {"g1", json{{"a", node.a},
                                        {"b", node.b1},
                                        {"l", node.l1},
                                        {"t", node.t1},
                                        {"cstar", node.cstar},
                                        {"a0", node.a0},
                                        {"tree", tree_to_json(*node.left)}}},
                            {"g2", json{{"b", node.b2},
                                        {"c", node.c},
                                        {"l", node.l2},
                                        {"t", node.t2},
                                        {"astar", node.astar},
                                        {"c0", node.c0},
                                        {"tree", tree_to_json(*node.right)}}}};
            }
        },
        t.node);
}

inline DecompTree tree_from_json(const json& j) {
    if (!j.is_object()) throw SchemaError("tree: expected an object");
    const std::string kind = detail::string_field(j, "kind");
    const int n = detail::int_field(j, "n");
    if (n < 0) throw SchemaError("tree: negative vertex count");

    if (kind == "split_leaf") {
        Graph g;
        try {
            g = decode_graph6(detail::string_field(j, "graph6"));
        } catch (const ParseError& e) {
            throw SchemaError(std::string("split leaf: ") + e.what());
        }
        SplitPartition sp{detail::set_from_json(detail::field(j, "clique"), g.vertex_count(), "clique"),
                          detail::set_from_json(detail::field(j, "stable"), g.vertex_count(), "stable")};
        return DecompTree{n, SplitLeaf{std::move(g), std::move(sp)}};
    }
    if (kind == "pentagon_leaf") {
        auto cy = detail::ints_from_json(detail::field(j, "cycle"), "cycle");
        if (cy.size() != 5) throw SchemaError("pentagon leaf: cycle must list 5 vertices");
        PentagonLeaf leaf;
        std::copy_n(cy.begin(), 5, leaf.cycle.begin());
        return DecompTree{n, std::move(leaf)};
    }
    if (kind == "substitution") {
        SubstitutionNode node;
        node.x = detail::int_field(j, "x");
        node.labels = detail::ints_from_json(detail::field(j, "labels"), "labels");
        node.outer = std::make_unique<DecompTree>(tree_from_json(detail::field(j, "outer")));
        node.inner = std::make_unique<DecompTree>(tree_from_json(detail::field(j, "inner")));
        return DecompTree{n, std::move(node)};
    }
    if (kind == "split_unification") {
        UnifyNode node;
        node.side = side_from_json(detail::field(j, "side"));
        node.labels = detail::ints_from_json(detail::field(j, "labels"), "labels");
        const json& g1 = detail::field(j, "g1");
        node.a = detail::ints_from_json(detail::field(g1, "a"), "g1.a");
        node.b1 = detail::ints_from_json(detail::field(g1, "b"), "g1.b");
        node.l1 = detail::ints_from_json(detail::field(g1, "l"), "g1.l");
        node.t1 = detail::ints_from_json(detail::field(g1, "t"), "g1.t");
        node.cstar = detail::int_field(g1, "cstar");
        node.a0 = detail::int_field(g1, "a0");
        node.left = std::make_unique<DecompTree>(tree_from_json(detail::field(g1, "tree")));
        const json& g2 = detail::field(j, "g2");
        node.b2 = detail::ints_from_json(detail::field(g2, "b"), "g2.b");
        node.c = detail::ints_from_json(detail::field(g2, "c"), "g2.c");
        node.l2 = detail::ints_from_json(detail::field(g2, "l"), "g2.l");
        node.t2 = detail::ints_from_json(detail::field(g2, "t"), "g2.t");
        node.astar = detail::int_field(g2, "astar");
        node.c0 = detail::int_field(g2, "c0");
        node.right = std::make_unique<DecompTree>(tree_from_json(detail::field(g2, "tree")));
        return DecompTree{n, std::move(node)};
    }
    throw SchemaError("tree: unknown node kind \"" + kind + "\"");
}

inline json divide_to_json(const SplitDivide& d) {
    return json{{"schema", kCertificateSchema},
                {"type", "split_divide"},
                {"side", side_to_json(d.side)},
                {"a", detail::set_to_json(d.a)},
                {"b", detail::set_to_json(d.b)},
                {"c", detail::set_to_json(d.c)},
                {"l", detail::set_to_json(d.l)},
                {"t", detail::set_to_json(d.t)},
                {"a0", d.a0},
                {"c0", d.c0}};
}

inline SplitDivide divide_from_json(const json& j, int universe) {
    SplitDivide d;
    d.side = side_from_json(detail::field(j, "side"));
    d.a = detail::set_from_json(detail::field(j, "a"), universe, "a");
    d.b = detail::set_from_json(detail::field(j, "b"), universe, "b");
    d.c = detail::set_from_json(detail::field(j, "c"), universe, "c");
    d.l = detail::set_from_json(detail::field(j, "l"), universe, "l");
    d.t = detail::set_from_json(detail::field(j, "t"), universe, "t");
    d.a0 = detail::int_field(j, "a0");
    d.c0 = detail::int_field(j, "c0");
    return d;
}

inline json structure_to_json(const StructurePartition& sp) {
    json xs = json::array(), ys = json::array(), attach = json::array();
    for (const auto& x : sp.xs) xs.push_back(detail::set_to_json(x));
    for (const auto& y : sp.ys) ys.push_back(detail::set_to_json(y));
    for (const auto& [z, xz] : sp.mixed_attach)
        attach.push_back(json{{"z", detail::set_to_json(z)}, {"xz", detail::set_to_json(xz)}});
    return json{{"schema", kCertificateSchema},
                {"type", "structure_partition"},
                {"m", sp.m},
                {"x", std::move(xs)},
                {"y", std::move(ys)},
                {"attach", std::move(attach)}};
}

inline StructurePartition structure_from_json(const json& j, int universe) {
    StructurePartition sp;
    sp.m = detail::int_field(j, "m");
    const json& xs = detail::field(j, "x");
    const json& ys = detail::field(j, "y");
    if (!xs.is_array() || !ys.is_array()) throw SchemaError("structure: x and y must be arrays");
    for (const auto& e : xs) sp.xs.push_back(detail::set_from_json(e, universe, "x part"));
    for (const auto& e : ys) sp.ys.push_back(detail::set_from_json(e, universe, "y part"));
    const json& attach = detail::field(j, "attach");
    if (!attach.is_array()) throw SchemaError("structure: attach must be an array");
    for (const auto& e : attach)
        sp.mixed_attach.emplace_back(detail::set_from_json(detail::field(e, "z"), universe, "z"),
                                     detail::set_from_json(detail::field(e, "xz"), universe, "xz"));
    return sp;
}

inline json split_to_json(const SplitPartition& sp) {
    return json{{"schema", kCertificateSchema},
                {"type", "split"},
                {"clique", detail::set_to_json(sp.clique_part)},
                {"stable", detail::set_to_json(sp.stable_part)}};
}

inline SplitPartition split_from_json(const json& j, int universe) {
    return SplitPartition{
        detail::set_from_json(detail::field(j, "clique"), universe, "clique"),
        detail::set_from_json(detail::field(j, "stable"), universe, "stable")};
}

/// Top-level document for recognition outcomes.
inline json recognition_to_json(const RecognitionResult& r, int n) {
    if (r.is_member())
        return json{{"schema", kCertificateSchema},
                    {"type", "tree"},
                    {"n", n},
                    {"tree", tree_to_json(r.tree())}};
    json w = witness_to_json(r.witness());
    w["schema"] = kCertificateSchema;
    w["type"] = "witness";
    w["n"] = n;
    return w;
}

/// Parse any certificate document and check its schema tag. Returns the
/// document for type-specific handling.
inline json parse_certificate_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw SchemaError(std::string("certificate is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw SchemaError("certificate: expected a JSON object");
    if (detail::string_field(j, "schema") != kCertificateSchema)
        throw SchemaError("certificate: unsupported schema tag");
    return j;
}

}  // namespace p5free
