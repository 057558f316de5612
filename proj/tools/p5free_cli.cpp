#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "p5free/certificates.hpp"
#include "p5free/enumerate.hpp"
#include "p5free/generate.hpp"

namespace {

using namespace p5free;

std::string read_all(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw std::runtime_error("cannot open " + path);
        buf << in.rdbuf();
    }
    return buf.str();
}

Graph load_graph(const std::string& path, const std::string& format) {
    return decode_graph(read_all(path), format == "edgelist" ? GraphFileFormat::EdgeList
                                                             : GraphFileFormat::Graph6);
}

std::string emit_graph(const Graph& g, const std::string& format) {
    return format == "edgelist" ? encode_edge_list(g) : encode_graph6(g) + "\n";
}

int run_recognize(const std::string& input, const std::string& format, bool as_json,
                  bool quiet) {
    Graph g = load_graph(input, format);
    RecognitionResult r = decompose(g);
    if (as_json)
        std::cout << recognition_to_json(r, g.vertex_count()).dump() << "\n";
    else if (!quiet) {
        if (r.is_member())
            std::cout << "member: decomposition tree with " << tree_node_count(r.tree())
                      << " node(s)\n";
        else
            std::cout << "non-member: contains " << format_witness(r.witness()) << "\n";
    }
    return r.is_member() ? 0 : 1;
}

int report_invalid(bool quiet, const std::string& why) {
    if (!quiet) std::cout << "invalid: " << why << "\n";
    return 1;
}

int report_violations(bool quiet, const std::vector<Violation>& bad) {
    if (bad.empty()) return 0;
    if (!quiet)
        for (const auto& v : bad) std::cout << "invalid [" << v.clause << "] " << v.detail << "\n";
    return 1;
}

int run_verify(const std::string& input, const std::string& format, const std::string& cert_path,
               bool quiet) {
    Graph g = load_graph(input, format);
    const int n = g.vertex_count();
    json doc = parse_certificate_document(read_all(cert_path));
    const std::string type = detail::string_field(doc, "type");

    int rc;
    if (type == "tree") {
        DecompTree t = tree_from_json(detail::field(doc, "tree"));
        Graph replay;
        try {
            replay = reconstruct(t);
        } catch (const std::invalid_argument& e) {
            return report_invalid(quiet, e.what());
        }
        rc = replay == g ? 0 : report_invalid(quiet, "tree replays to a different graph");
    } else if (type == "witness") {
        ForbiddenWitness w = witness_from_json(doc);
        for (int v : w.vertices)
            if (v < 0 || v >= n)
                return report_invalid(quiet, "witness vertex out of range");
        rc = witness_induces(g, w)
                 ? 0
                 : report_invalid(quiet, "vertices do not induce the claimed pattern");
    } else if (type == "split_divide") {
        try {
            rc = report_violations(quiet, validate_split_divide(g, divide_from_json(doc, n)));
        } catch (const std::invalid_argument& e) {
            return report_invalid(quiet, e.what());
        }
    } else if (type == "structure_partition") {
        try {
            rc = report_violations(quiet,
                                   validate_structure_partition(g, structure_from_json(doc, n)));
        } catch (const std::invalid_argument& e) {
            return report_invalid(quiet, e.what());
        }
    } else if (type == "split") {
        SplitPartition sp = split_from_json(doc, n);
        if ((sp.clique_part | sp.stable_part) != g.vertices() ||
            sp.clique_part.intersects(sp.stable_part))
            return report_invalid(quiet, "parts do not partition the vertices");
        if (!g.is_clique(sp.clique_part)) return report_invalid(quiet, "clique part has a non-edge");
        if (!g.is_stable(sp.stable_part)) return report_invalid(quiet, "stable part has an edge");
        rc = 0;
    } else {
        throw SchemaError("certificate: unknown document type \"" + type + "\"");
    }
    if (rc == 0 && !quiet) std::cout << "valid " << type << " certificate\n";
    return rc;
}

int run_generate(std::uint64_t seed, int n, const std::string& kind_name,
                 const std::string& format, bool as_json, bool quiet) {
    auto kind = gen_kind_from_name(kind_name);
    if (!kind) throw SchemaError("unknown generator kind \"" + kind_name + "\"");
    GeneratedInstance inst = generate_member(seed, n, *kind);
    if (!quiet) std::cout << emit_graph(inst.graph, format);
    if (as_json)
        std::cout << json{{"schema", kCertificateSchema},
                          {"type", "tree"},
                          {"n", n},
                          {"tree", tree_to_json(inst.tree)}}
                         .dump()
                  << "\n";
    return 0;
}

int run_enumerate(int n, const std::string& mode_name, int threads, bool quiet) {
    const EnumerateMode mode =
        mode_name == "agree" ? EnumerateMode::Agree : EnumerateMode::Count;
    EnumerateReport rep = enumerate_labeled(n, mode, threads);
    if (mode == EnumerateMode::Count) {
        for (const auto& [k, count] : rep.counts) std::cout << "n=" << k << " " << count << "\n";
        return 0;
    }
    if (rep.disagreements.empty()) {
        if (!quiet) std::cout << "agree: constructive and direct answers match up to n=" << n
                              << "\n";
        return 0;
    }
    for (const auto& line : rep.disagreements) std::cout << "disagree: " << line << "\n";
    return 1;
}

int run_divide(const std::string& input, const std::string& format, bool as_json, bool quiet) {
    Graph g = load_graph(input, format);
    std::optional<SplitDivide> d;
    try {
        d = find_split_divide(g);
    } catch (const std::invalid_argument& e) {
        if (!quiet) std::cout << "no divide: " << e.what() << "\n";
        return 1;
    }
    if (!d) {
        SplitPartition sp = std::get<SplitPartition>(is_split(g));
        if (as_json)
            std::cout << split_to_json(sp).dump() << "\n";
        else if (!quiet)
            std::cout << "split graph: clique " << sp.clique_part.to_string() << " stable "
                      << sp.stable_part.to_string() << "\n";
        return 0;
    }
    if (as_json)
        std::cout << divide_to_json(*d).dump() << "\n";
    else if (!quiet)
        std::cout << "divide in the " << side_name(d->side) << ": A=" << d->a.to_string()
                  << " B=" << d->b.to_string() << " C=" << d->c.to_string()
                  << " L=" << d->l.to_string() << " T=" << d->t.to_string() << " a0=" << d->a0
                  << " c0=" << d->c0 << "\n";
    return 0;
}

int run_structure(const std::string& input, const std::string& format, bool as_json, bool quiet) {
    Graph g = load_graph(input, format);
    StructurePartition sp;
    try {
        sp = build_structure_partition(g);
    } catch (const std::invalid_argument& e) {
        if (!quiet) std::cout << "no structure partition: " << e.what() << "\n";
        return 1;
    }
    if (as_json) {
        std::cout << structure_to_json(sp).dump() << "\n";
    } else if (!quiet) {
        std::cout << "structure partition with m=" << sp.m << "\n";
        for (std::size_t i = 0; i < sp.xs.size(); ++i)
            std::cout << "  X" << i << "=" << sp.xs[i].to_string() << " Y" << i << "="
                      << sp.ys[i].to_string() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"recognizer and certificate toolkit for {P5, co-P5}-free graphs"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string format = "graph6";
    std::string cert_path;
    std::string kind_name = "mixed";
    std::string mode_name = "count";
    std::uint64_t seed = 0;
    int n = 0;
    int threads = 1;
    bool as_json = false;
    bool quiet = false;

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("--input", input, "graph file, '-' for stdin")->capture_default_str();
        sub->add_option("--format", format, "graph file format")
            ->check(CLI::IsMember({"graph6", "edgelist"}))
            ->capture_default_str();
    };
    auto add_output = [&](CLI::App* sub) {
        sub->add_flag("--json", as_json, "print the certificate document as JSON");
        sub->add_flag("--quiet", quiet, "suppress human-readable output");
    };

    CLI::App* rec = app.add_subcommand("recognize", "decide membership; exit 0 member, 1 not");
    add_input(rec);
    add_output(rec);

    CLI::App* ver = app.add_subcommand(
        "verify", "check a certificate against a graph; exit 0 valid, 1 invalid");
    add_input(ver);
    ver->add_option("--cert", cert_path, "certificate JSON file, '-' for stdin")->required();
    ver->add_flag("--quiet", quiet, "suppress human-readable output");

    CLI::App* gen =
        app.add_subcommand("generate", "emit a seeded random member with its certificate");
    gen->add_option("--seed", seed, "generator seed")->capture_default_str();
    gen->add_option("--n", n, "number of vertices")->required()->check(CLI::PositiveNumber);
    gen->add_option("--kind", kind_name, "construction style")
        ->check(CLI::IsMember({"split", "pentagon-sub", "unified", "mixed"}))
        ->capture_default_str();
    gen->add_option("--format", format, "graph output format")
        ->check(CLI::IsMember({"graph6", "edgelist"}))
        ->capture_default_str();
    add_output(gen);

    CLI::App* enu = app.add_subcommand("enumerate", "sweep all labeled graphs up to --n");
    enu->add_option("--n", n, "largest vertex count")->required()->check(CLI::Range(1, 7));
    enu->add_option("--mode", mode_name, "count members, or cross-check answers")
        ->check(CLI::IsMember({"count", "agree"}))
        ->capture_default_str();
    enu->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber)
        ->capture_default_str();
    enu->add_flag("--quiet", quiet, "suppress human-readable output");

    CLI::App* div = app.add_subcommand(
        "divide", "find a split divide (or certify the graph split); exit 1 if neither applies");
    add_input(div);
    add_output(div);

    CLI::App* str = app.add_subcommand("structure",
                                       "partition a prime member around its co-C4 skeleton");
    add_input(str);
    add_output(str);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (rec->parsed()) return run_recognize(input, format, as_json, quiet);
        if (ver->parsed()) return run_verify(input, format, cert_path, quiet);
        if (gen->parsed()) return run_generate(seed, n, kind_name, format, as_json, quiet);
        if (enu->parsed()) return run_enumerate(n, mode_name, threads, quiet);
        if (div->parsed()) return run_divide(input, format, as_json, quiet);
        if (str->parsed()) return run_structure(input, format, as_json, quiet);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
