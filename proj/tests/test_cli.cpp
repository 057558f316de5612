#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "p5free/certificates.hpp"
#include "p5free/detect.hpp"
#include "p5free/graph_io.hpp"
#include "p5free/modular.hpp"

using namespace p5free;
using Catch::Matchers::ContainsSubstring;

namespace {

struct CliResult {
    int status = -1;
    std::string out;  // stdout and stderr, interleaved
};

std::string scratch_path() {
    static int counter = 0;
    return "/tmp/p5free_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++);
}

std::string temp_file(const std::string& content) {
    std::string path = scratch_path();
    std::ofstream f(path, std::ios::binary);
    f << content;
    return path;
}

CliResult run_cli(const std::string& args, const std::string& input = "") {
    std::string in_path = temp_file(input);
    std::string cmd =
        std::string(P5FREE_CLI_PATH) + " " + args + " < " + in_path + " 2>&1";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult r;
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int rc = ::pclose(pipe);
    std::remove(in_path.c_str());
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

// First prime {P5, CoP5, C5}-free non-split graph on 6 vertices, as graph6.
std::string prime_member_graph6() {
    for (std::uint64_t mask = 0;; ++mask) {
        Graph g(6);
        int bit = 0;
        for (int u = 0; u < 6; ++u)
            for (int v = u + 1; v < 6; ++v, ++bit)
                if ((mask >> bit) & 1) g.add_edge(u, v);
        if (!is_free(g, {Pattern::P5, Pattern::CoP5, Pattern::C5})) continue;
        if (is_split_graph(g) || find_proper_homogeneous_set(g)) continue;
        // keep a graph with two disjoint edges so `structure` accepts it too
        if (!find_induced(g, Pattern::CoC4)) continue;
        return encode_graph6(g);
    }
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

std::string after_first_line(const std::string& s) {
    std::size_t p = s.find('\n');
    return p == std::string::npos ? std::string() : s.substr(p + 1);
}

}  // namespace

TEST_CASE("recognize reads graph6 from stdin and reports membership") {
    CliResult r = run_cli("recognize", "Dhc\n");
    CHECK(r.status == 0);
    CHECK_THAT(r.out, ContainsSubstring("member: decomposition tree with 1 node(s)"));

    r = run_cli("recognize --json", "Dhc\n");
    CHECK(r.status == 0);
    json doc = json::parse(r.out);
    CHECK(doc["type"] == "tree");
    CHECK(doc["tree"]["kind"] == "pentagon_leaf");

    r = run_cli("recognize --quiet", "Dhc\n");
    CHECK(r.status == 0);
    CHECK(r.out.empty());
}

TEST_CASE("recognize rejects non-members with a witness") {
    std::string path = temp_file("5 4\n0 1\n1 2\n2 3\n3 4\n");
    CliResult r = run_cli("recognize --input " + path + " --format edgelist --json");
    CHECK(r.status == 1);
    json doc = json::parse(r.out);
    CHECK(doc["type"] == "witness");
    CHECK(doc["pattern"] == "P5");
    CHECK(doc["vertices"] == json::array({0, 1, 2, 3, 4}));

    r = run_cli("recognize --input " + path + " --format edgelist");
    CHECK(r.status == 1);
    CHECK_THAT(r.out, ContainsSubstring("non-member: contains P5 (0,1,2,3,4)"));
    std::remove(path.c_str());
}

TEST_CASE("recognize input failures exit 2") {
    CliResult r = run_cli("recognize", "D");
    CHECK(r.status == 2);
    CHECK_THAT(r.out, ContainsSubstring("error: graph6: truncated"));

    r = run_cli("recognize --input /nonexistent/graph.g6");
    CHECK(r.status == 2);
    CHECK_THAT(r.out, ContainsSubstring("cannot open"));
}

TEST_CASE("verify accepts its own tree certificates and rejects tampering") {
    CliResult rec = run_cli("recognize --json", "Dhc\n");
    REQUIRE(rec.status == 0);
    std::string cert = temp_file(rec.out);
    std::string graph = temp_file("Dhc\n");

    CliResult r = run_cli("verify --input " + graph + " --cert " + cert);
    CHECK(r.status == 0);
    CHECK_THAT(r.out, ContainsSubstring("valid tree certificate"));

    // Same certificate against a different graph.
    std::string other = temp_file(encode_graph6(path_graph(5)) + "\n");
    r = run_cli("verify --input " + other + " --cert " + cert);
    CHECK(r.status == 1);
    CHECK_THAT(r.out, ContainsSubstring("replays to a different graph"));

    // Reordering the pentagon's cycle changes the replayed labels.
    json doc = json::parse(rec.out);
    doc["tree"]["cycle"] = json::array({0, 2, 1, 3, 4});
    std::string bent = temp_file(doc.dump());
    r = run_cli("verify --input " + graph + " --cert " + bent);
    CHECK(r.status == 1);

    // Breaking the cycle permutation is caught by reconstruction.
    doc["tree"]["cycle"] = json::array({0, 0, 1, 2, 3});
    std::string broken = temp_file(doc.dump());
    r = run_cli("verify --input " + graph + " --cert " + broken);
    CHECK(r.status == 1);
    CHECK_THAT(r.out, ContainsSubstring("invalid:"));

    // Schema and type problems are usage-level failures.
    doc = json::parse(rec.out);
    doc["schema"] = "p5free.cert/999";
    std::string wrong_schema = temp_file(doc.dump());
    r = run_cli("verify --input " + graph + " --cert " + wrong_schema);
    CHECK(r.status == 2);
    CHECK_THAT(r.out, ContainsSubstring("unsupported schema tag"));

    doc = json::parse(rec.out);
    doc["type"] = "blessing";
    std::string wrong_type = temp_file(doc.dump());
    r = run_cli("verify --input " + graph + " --cert " + wrong_type);
    CHECK(r.status == 2);
    CHECK_THAT(r.out, ContainsSubstring("unknown document type"));

    for (const std::string& p : {cert, graph, other, bent, broken, wrong_schema, wrong_type})
        std::remove(p.c_str());
}

TEST_CASE("verify checks witness certificates against the graph") {
    std::string p5 = temp_file("5 4\n0 1\n1 2\n2 3\n3 4\n");
    CliResult rec = run_cli("recognize --input " + p5 + " --format edgelist --json");
    REQUIRE(rec.status == 1);
    std::string cert = temp_file(rec.out);

    CliResult r = run_cli("verify --input " + p5 + " --format edgelist --cert " + cert);
    CHECK(r.status == 0);
    CHECK_THAT(r.out, ContainsSubstring("valid witness certificate"));

    // The same tuple does not induce a P5 in the five-cycle.
    std::string c5 = temp_file("Dhc\n");
    r = run_cli("verify --input " + c5 + " --cert " + cert);
    CHECK(r.status == 1);
    CHECK_THAT(r.out, ContainsSubstring("do not induce"));

    for (const std::string& p : {p5, cert, c5}) std::remove(p.c_str());
}

TEST_CASE("divide certifies split graphs and emits divides otherwise") {
    std::string k5 = temp_file(encode_graph6(complete_graph(5)) + "\n");
    CliResult r = run_cli("divide --input " + k5);
    CHECK(r.status == 0);
    CHECK_THAT(r.out, ContainsSubstring("split graph: clique {"));

    r = run_cli("divide --input " + k5 + " --json");
    REQUIRE(r.status == 0);
    std::string split_cert = temp_file(r.out);
    r = run_cli("verify --input " + k5 + " --cert " + split_cert);
    CHECK(r.status == 0);
    CHECK_THAT(r.out, ContainsSubstring("valid split certificate"));

    std::string member = temp_file(prime_member_graph6() + "\n");
    r = run_cli("divide --input " + member);
    CHECK(r.status == 0);
    CHECK_THAT(r.out, ContainsSubstring("divide in the "));

    r = run_cli("divide --input " + member + " --json");
    REQUIRE(r.status == 0);
    json doc = json::parse(r.out);
    std::string divide_cert = temp_file(r.out);
    r = run_cli("verify --input " + member + " --cert " + divide_cert);
    CHECK(r.status == 0);
    CHECK_THAT(r.out, ContainsSubstring("valid split_divide certificate"));

    // Damage the divide: point a0 somewhere outside A.
    doc["a0"] = doc["c0"];
    std::string bent = temp_file(doc.dump());
    r = run_cli("verify --input " + member + " --cert " + bent);
    CHECK(r.status == 1);
    CHECK_THAT(r.out, ContainsSubstring("invalid [a0]"));

    for (const std::string& p : {k5, split_cert, member, divide_cert, bent})
        std::remove(p.c_str());
}

TEST_CASE("divide refuses out-of-scope inputs") {
    CliResult r = run_cli("divide", encode_graph6(path_graph(5)) + "\n");
    CHECK(r.status == 1);
    CHECK_THAT(r.out, ContainsSubstring("no divide:"));
    CHECK_THAT(r.out, ContainsSubstring("contains P5"));

    r = run_cli("divide", encode_graph6(cycle_graph(4)) + "\n");
    CHECK(r.status == 1);
    CHECK_THAT(r.out, ContainsSubstring("not prime"));
}

TEST_CASE("structure partitions prime members and explains refusals") {
    std::string member = temp_file(prime_member_graph6() + "\n");
    CliResult r = run_cli("structure --input " + member);
    CHECK(r.status == 0);
    CHECK_THAT(r.out, ContainsSubstring("structure partition with m="));
    CHECK_THAT(r.out, ContainsSubstring("X1="));

    r = run_cli("structure --input " + member + " --json");
    REQUIRE(r.status == 0);
    std::string cert = temp_file(r.out);
    CliResult v = run_cli("verify --input " + member + " --cert " + cert);
    CHECK(v.status == 0);
    CHECK_THAT(v.out, ContainsSubstring("valid structure_partition certificate"));

    r = run_cli("structure", encode_graph6(path_graph(5)) + "\n");
    CHECK(r.status == 1);
    CHECK_THAT(r.out, ContainsSubstring("no structure partition:"));

    for (const std::string& p : {member, cert}) std::remove(p.c_str());
}

TEST_CASE("generate is reproducible and its JSON verifies") {
    CliResult a = run_cli("generate --n 25 --seed 7 --kind mixed");
    CliResult b = run_cli("generate --n 25 --seed 7 --kind mixed");
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(decode_graph6(first_line(a.out)).vertex_count() == 25);

    CliResult c = run_cli("generate --n 25 --seed 8 --kind mixed");
    CHECK(c.out != a.out);

    // Graph line plus certificate line; the tree replays the graph.
    CliResult full = run_cli("generate --n 40 --seed 7 --kind mixed --json");
    REQUIRE(full.status == 0);
    Graph g = decode_graph6(first_line(full.out));
    json doc = json::parse(after_first_line(full.out));
    CHECK(reconstruct(tree_from_json(doc["tree"])) == g);

    std::string graph = temp_file(first_line(full.out) + "\n");
    CliResult v = run_cli("verify --input " + graph + " --cert -", after_first_line(full.out));
    CHECK(v.status == 0);
    CHECK_THAT(v.out, ContainsSubstring("valid tree certificate"));

    CliResult el = run_cli("generate --n 25 --seed 7 --kind mixed --format edgelist");
    CHECK(decode_edge_list(el.out) == decode_graph6(first_line(a.out)));

    std::remove(graph.c_str());
}

TEST_CASE("enumerate prints the frozen counts and checks agreement") {
    CliResult r = run_cli("enumerate --n 5");
    CHECK(r.status == 0);
    CHECK(r.out == "n=1 1\nn=2 2\nn=3 8\nn=4 64\nn=5 904\n");

    CliResult t = run_cli("enumerate --n 5 --threads 3");
    CHECK(t.status == 0);
    CHECK(t.out == r.out);

    CliResult a = run_cli("enumerate --n 4 --mode agree");
    CHECK(a.status == 0);
    CHECK_THAT(a.out, ContainsSubstring("agree: constructive and direct answers match up to n=4"));
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("").status == 2);
    CHECK(run_cli("transmogrify").status == 2);
    CHECK(run_cli("recognize --format pdf", "Dhc\n").status == 2);
    CHECK(run_cli("generate").status == 2);               // missing --n
    CHECK(run_cli("generate --n 0").status == 2);         // not positive
    CHECK(run_cli("generate --n 5 --kind bogus").status == 2);
    CHECK(run_cli("enumerate --n 8").status == 2);        // over the cap
    CHECK(run_cli("verify", "Dhc\n").status == 2);        // missing --cert
}
