#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "antimagic/cli.hpp"
#include "antimagic/driver.hpp"
#include "antimagic/generators.hpp"
#include "antimagic/io.hpp"
#include "antimagic/oracle.hpp"

using namespace antimagic;

namespace {

std::string fresh_dir() {
    static int counter = 0;
    auto dir = std::filesystem::temp_directory_path() /
               ("antimagic_cli_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter++));
    std::filesystem::create_directories(dir);
    return dir.string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spit(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    REQUIRE(out.good());
    out << content;
}

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

// run_cli writes to the real streams; swap their buffers for the call.
CliRun cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    auto* old_out = std::cout.rdbuf(out.rdbuf());
    auto* old_err = std::cerr.rdbuf(err.rdbuf());
    int code = -1;
    try {
        code = run_cli(std::move(args));
    } catch (...) {
        std::cout.rdbuf(old_out);
        std::cerr.rdbuf(old_err);
        throw;
    }
    std::cout.rdbuf(old_out);
    std::cerr.rdbuf(old_err);
    return {code, out.str(), err.str()};
}

Graph petersen() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; i++) {
        e.push_back({i, (i + 1) % 5});
        e.push_back({i, i + 5});
        e.push_back({5 + i, 5 + (i + 2) % 5});
    }
    return Graph::from_edges(10, e);
}

} // namespace

TEST_CASE("single edge has a witness labeled 1") {
    auto res = brute_force_antimagic(Graph::from_edges(2, {{0, 1}}));
    REQUIRE(res.status == OracleStatus::Exists);
    REQUIRE(res.witness.has_value());
    REQUIRE(res.witness->labeling.labels == std::vector<long long>{1});
    REQUIRE(verify_antimagic(*res.witness).accepted());
}

TEST_CASE("two-edge star is the boundary case and it exists") {
    auto res = brute_force_antimagic(Graph::from_edges(3, {{0, 1}, {1, 2}}));
    REQUIRE(res.status == OracleStatus::Exists);
    REQUIRE(res.explored > 0);
    REQUIRE(verify_antimagic(*res.witness).accepted());
    // hand check: both arcs into the hub, labels 1 and 2, sums 3 / -1 / -2
    std::set<long long> sums(res.witness->sums.begin(), res.witness->sums.end());
    REQUIRE(sums.size() == 3);
}

TEST_CASE("three-edge star exists with distinct witness sums") {
    auto res = brute_force_antimagic(star(3));
    REQUIRE(res.status == OracleStatus::Exists);
    REQUIRE(verify_antimagic(*res.witness).accepted());
}

TEST_CASE("edgeless graphs settle immediately") {
    auto one = brute_force_antimagic(Graph::from_edges(1, {}));
    REQUIRE(one.status == OracleStatus::Exists);
    REQUIRE(one.witness->labeling.labels.empty());
    // two isolated vertices both sum to zero, and no labeling can help
    auto two = brute_force_antimagic(Graph::from_edges(2, {}));
    REQUIRE(two.status == OracleStatus::NotExists);
}

TEST_CASE("tiny budget reports inconclusive, never a verdict") {
    auto res = brute_force_antimagic(star(3), 2);
    REQUIRE(res.status == OracleStatus::Inconclusive);
    REQUIRE_FALSE(res.witness.has_value());
    REQUIRE(res.explored <= 2);
}

TEST_CASE("oracle refuses more than ten edges") {
    REQUIRE_THROWS_AS(brute_force_antimagic(complete_bipartite(3, 4)), precondition_error);
    REQUIRE_THROWS_AS(brute_force_antimagic(star(3), 0), precondition_error);
}

TEST_CASE("oracle and pipeline agree on tiny no-deg-0/2 instances") {
    SplitMix64 rng{2468};
    for (int it = 0; it < 25; it++) {
        Graph g = (it % 2 == 0) ? star(3 + (int)rng.below(5))
                                : tree_of_stars(2, 3, 3, rng.next());
        if (g.edge_count() > 10) continue;
        auto res = brute_force_antimagic(g);
        REQUIRE(res.status == OracleStatus::Exists);
        auto cert = antimagic_orientation_bipartite(g);
        REQUIRE(verify_antimagic(cert).accepted());
    }
}

TEST_CASE("edge list parse inverts serialize") {
    for (const Graph& g : {complete_bipartite(2, 3), star(4), hypercube(3)}) {
        auto text = serialize_edge_list(g);
        auto back = parse_edge_list(text);
        REQUIRE(back.vertex_count == g.vertex_count);
        REQUIRE(back.edges == g.edges);
        REQUIRE(serialize_edge_list(back) == text);
    }
}

TEST_CASE("edge list accepts comments and blank lines") {
    auto g = parse_edge_list("# a graph\n\n3 2\n0 1\n# middle\n1 2\n");
    REQUIRE(g.vertex_count == 3);
    REQUIRE(g.edge_count() == 2);
}

TEST_CASE("edge list rejects malformed documents") {
    REQUIRE_THROWS_AS(parse_edge_list(""), malformed_input_error);
    REQUIRE_THROWS_AS(parse_edge_list("3\n"), malformed_input_error);
    REQUIRE_THROWS_AS(parse_edge_list("3 2\n0 1\n"), malformed_input_error);        // short
    REQUIRE_THROWS_AS(parse_edge_list("3 1\n0 1\n1 2\n"), malformed_input_error);   // long
    REQUIRE_THROWS_AS(parse_edge_list("3 1\n0 x\n"), malformed_input_error);        // token
    REQUIRE_THROWS_AS(parse_edge_list("3 1\n0 1x\n"), malformed_input_error);       // suffix
    REQUIRE_THROWS_AS(parse_edge_list("3 1\n0 3\n"), malformed_input_error);        // range
    REQUIRE_THROWS_AS(parse_edge_list("3 1\n1 1\n"), malformed_input_error);        // loop
    REQUIRE_THROWS_AS(parse_edge_list("3 2\n0 1\n1 0\n"), malformed_input_error);   // dup
    REQUIRE_THROWS_AS(parse_edge_list("-1 0\n"), malformed_input_error);
}

TEST_CASE("certificate documents round-trip and carry their meta") {
    auto g = complete_bipartite(3, 3);
    auto text = orient_document(g, OrientMode::bipartite, 42u);
    auto doc = parse_certificate(text);
    REQUIRE(doc.cert.graph.vertex_count == g.vertex_count);
    REQUIRE(doc.cert.graph.edge_count() == g.edge_count());
    REQUIRE(verify_antimagic(doc.cert).accepted());
    REQUIRE(doc.meta.pipeline == "bipartite");
    REQUIRE(doc.meta.case_tag == "case1");
    REQUIRE(doc.meta.seed == 42u);
    auto recomputed =
        oriented_vertex_sums(doc.cert.graph, doc.cert.orientation, doc.cert.labeling);
    REQUIRE(recomputed == doc.cert.sums);
    // serializing the parsed certificate reproduces the bytes
    CertificateMeta meta;
    meta.pipeline = doc.meta.pipeline;
    meta.case_tag = doc.meta.case_tag;
    meta.seed = doc.meta.seed;
    REQUIRE(serialize_certificate(doc.cert, meta) == text);
}

TEST_CASE("certificate parser rejects broken documents") {
    REQUIRE_THROWS_AS(parse_certificate("not json"), malformed_input_error);
    REQUIRE_THROWS_AS(parse_certificate("{}"), malformed_input_error);
    REQUIRE_THROWS_AS(parse_certificate(R"({"n":2,"m":1,"arcs":[],"sums":[],"meta":{}})"),
                      malformed_input_error);
    auto text = orient_document(star(3), OrientMode::bipartite, std::nullopt);
    auto broken = text;
    auto pos = broken.find("\"vertex\": 0");
    REQUIRE(pos != std::string::npos);
    broken.replace(pos, 11, "\"vertex\": 9");
    REQUIRE_THROWS_AS(parse_certificate(broken), malformed_input_error);
}

TEST_CASE("cli generates, orients, and verifies end to end") {
    auto dir = fresh_dir();
    auto graph_file = dir + "/k33.txt";
    auto cert_file = dir + "/k33.cert.json";
    auto gen = cli({"gen", "--family", "complete-bipartite", "--params", "3", "3", "--out",
                    graph_file});
    REQUIRE(gen.code == exit_ok);
    REQUIRE(parse_edge_list(slurp(graph_file)).edge_count() == 9);

    auto orient = cli({"orient", "--mode", "bipartite", "--input", graph_file, "--output",
                       cert_file});
    REQUIRE(orient.code == exit_ok);
    auto doc = parse_certificate(slurp(cert_file));
    REQUIRE(verify_antimagic(doc.cert).accepted());
    REQUIRE(doc.meta.pipeline == "bipartite");

    auto verify = cli({"verify", cert_file});
    REQUIRE(verify.code == exit_ok);
    REQUIRE(verify.out == "accept\n");
}

TEST_CASE("cli verify rejects a tampered certificate") {
    auto dir = fresh_dir();
    auto cert_file = dir + "/tampered.cert.json";
    auto text = orient_document(complete_bipartite(3, 3), OrientMode::bipartite, std::nullopt);
    // force a duplicate label: rewrite the unique label 9 to 1
    auto pos = text.find("\"label\": 9");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 10, "\"label\": 1");
    spit(cert_file, text);
    auto verify = cli({"verify", cert_file});
    REQUIRE(verify.code == exit_reject);
    REQUIRE(verify.out.rfind("reject", 0) == 0);
}

TEST_CASE("cli verify rejects sums that disagree with the arcs") {
    auto dir = fresh_dir();
    auto cert_file = dir + "/sums.cert.json";
    auto text = orient_document(star(3), OrientMode::bipartite, std::nullopt);
    auto pos = text.find("\"sum\": 6");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 8, "\"sum\": 7");
    spit(cert_file, text);
    auto verify = cli({"verify", cert_file});
    REQUIRE(verify.code == exit_reject);
    REQUIRE(verify.out.find("declared sums") != std::string::npos);
}

TEST_CASE("cli maps error classes to exit codes") {
    auto dir = fresh_dir();
    auto pet_file = dir + "/petersen.txt";
    spit(pet_file, serialize_edge_list(petersen()));

    auto gated = cli({"orient", "--mode", "mindegree", "--input", pet_file});
    REQUIRE(gated.code == exit_precondition);
    auto unsafe = cli({"orient", "--mode", "mindegree", "--input", pet_file, "--unsafe"});
    REQUIRE(unsafe.code == exit_reject);
    REQUIRE(unsafe.err.rfind("counterexample", 0) == 0);

    auto path_file = dir + "/path.txt";
    spit(path_file, "3 2\n0 1\n1 2\n");
    REQUIRE(cli({"orient", "--mode", "bipartite", "--input", path_file}).code ==
            exit_precondition);

    REQUIRE(cli({"orient", "--mode", "bipartite", "--input", dir + "/missing.txt"}).code ==
            exit_malformed);
    auto garbage_file = dir + "/garbage.txt";
    spit(garbage_file, "this is not an edge list\n");
    REQUIRE(cli({"orient", "--mode", "bipartite", "--input", garbage_file}).code ==
            exit_malformed);
    REQUIRE(cli({"gen", "--family", "nonsense", "--params", "3"}).code == exit_precondition);
    REQUIRE(cli({"gen", "--family", "star"}).code == exit_precondition); // missing params
    REQUIRE(cli({"bogus-subcommand"}).code == exit_malformed);
    REQUIRE(cli({}).code == exit_malformed);
    REQUIRE(cli({"--help"}).code == exit_ok);
}

TEST_CASE("cli oracle reports all three statuses with matching exit codes") {
    auto dir = fresh_dir();
    auto star_file = dir + "/star.txt";
    spit(star_file, serialize_edge_list(star(3)));
    auto exists = cli({"oracle", "--input", star_file});
    REQUIRE(exists.code == exit_ok);
    REQUIRE(exists.out.rfind("exists", 0) == 0);
    // the witness document on stdout parses and verifies
    auto body = exists.out.substr(exists.out.find('\n') + 1);
    REQUIRE(verify_antimagic(parse_certificate(body).cert).accepted());

    auto twin_file = dir + "/twins.txt";
    spit(twin_file, "2 0\n");
    auto missing = cli({"oracle", "--input", twin_file});
    REQUIRE(missing.code == exit_reject);
    REQUIRE(missing.out.rfind("not-exists", 0) == 0);

    auto starved = cli({"oracle", "--input", star_file, "--budget", "2"});
    REQUIRE(starved.code == exit_precondition);
    REQUIRE(starved.out.rfind("inconclusive", 0) == 0);

    auto big_file = dir + "/big.txt";
    spit(big_file, serialize_edge_list(complete_bipartite(3, 4)));
    REQUIRE(cli({"oracle", "--input", big_file}).code == exit_precondition);
}

TEST_CASE("cli orient honors the seed env fallback") {
    auto dir = fresh_dir();
    auto graph_file = dir + "/near.txt";
    REQUIRE(cli({"gen", "--family", "near-regular", "--params", "40", "33", "--seed", "7",
                 "--out", graph_file})
                .code == exit_ok);

    auto out_env = dir + "/env.cert.json";
    auto out_flag = dir + "/flag.cert.json";
    REQUIRE(setenv("ANTIMAGIC_SEED", "123", 1) == 0);
    auto via_env = cli({"orient", "--mode", "mindegree", "--input", graph_file, "--output",
                        out_env});
    REQUIRE(unsetenv("ANTIMAGIC_SEED") == 0);
    REQUIRE(via_env.code == exit_ok);
    auto via_flag = cli({"orient", "--mode", "mindegree", "--input", graph_file, "--seed",
                         "123", "--output", out_flag});
    REQUIRE(via_flag.code == exit_ok);
    REQUIRE(slurp(out_env) == slurp(out_flag));

    REQUIRE(setenv("ANTIMAGIC_SEED", "12x", 1) == 0);
    auto bad = cli({"orient", "--mode", "mindegree", "--input", graph_file});
    REQUIRE(unsetenv("ANTIMAGIC_SEED") == 0);
    REQUIRE(bad.code == exit_malformed);
}

TEST_CASE("cli orient is byte-deterministic for a fixed seed") {
    auto dir = fresh_dir();
    auto graph_file = dir + "/rb.txt";
    REQUIRE(cli({"gen", "--family", "random-bipartite-no-deg-0-or-2", "--params", "5", "9",
                 "3", "--seed", "11", "--out", graph_file})
                .code == exit_ok);
    auto a = cli({"orient", "--mode", "bipartite", "--input", graph_file, "--seed", "4"});
    auto b = cli({"orient", "--mode", "bipartite", "--input", graph_file, "--seed", "4"});
    REQUIRE(a.code == exit_ok);
    REQUIRE(a.out == b.out);
    REQUIRE(parse_certificate(a.out).meta.seed == 4u);
}

TEST_CASE("cli gen covers every advertised family") {
    auto dir = fresh_dir();
    struct Row {
        std::vector<std::string> params;
        const char* family;
    };
    std::vector<Row> rows = {
        {{"6"}, "complete"},
        {{"3", "4"}, "complete-bipartite"},
        {{"5"}, "star"},
        {{"4", "8", "3"}, "random-bipartite-no-deg-0-or-2"},
        {{"40", "34"}, "near-regular"},
        {{"4"}, "hypercube"},
        {{"3", "3", "5"}, "tree-of-stars"},
    };
    int idx = 0;
    for (const auto& row : rows) {
        auto path = dir + "/fam" + std::to_string(idx++) + ".txt";
        std::vector<std::string> args = {"gen", "--family", row.family, "--params"};
        for (const auto& p : row.params) args.push_back(p);
        args.push_back("--out");
        args.push_back(path);
        args.push_back("--seed");
        args.push_back("5");
        auto r = cli(args);
        REQUIRE(r.code == exit_ok);
        auto g = parse_edge_list(slurp(path));
        REQUIRE(g.edge_count() > 0);
    }
    // near-regular postcondition: minimum degree
    auto g = parse_edge_list(slurp(dir + "/fam4.txt"));
    for (int v = 0; v < g.vertex_count; v++) REQUIRE(g.degree(v) >= 34);
}
