#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "antimagic/driver.hpp"
#include "antimagic/generators.hpp"
#include "antimagic/oracle.hpp"
#include "antimagic/selftest.hpp"

namespace antimagic {

// Exit codes, stable across the whole surface.
inline constexpr int exit_ok = 0;           // success / accept / witness exists
inline constexpr int exit_reject = 1;       // verifier reject, counterexample, proven absence
inline constexpr int exit_precondition = 2; // input outside a documented precondition
inline constexpr int exit_malformed = 3;    // bytes that do not parse
inline constexpr int exit_internal = 4;     // invariant broke; always a bug

namespace cli_detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw malformed_input_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << content))
        throw malformed_input_error("cannot write file: " + path);
}

inline std::optional<std::uint64_t> env_seed() {
    const char* env = std::getenv("ANTIMAGIC_SEED");
    if (!env) return std::nullopt;
    std::string text(env);
    size_t pos = 0;
    std::uint64_t value = 0;
    try {
        value = std::stoull(text, &pos);
    } catch (const std::exception&) {
        throw malformed_input_error("ANTIMAGIC_SEED is not an unsigned integer: '" + text +
                                    "'");
    }
    if (pos != text.size())
        throw malformed_input_error("ANTIMAGIC_SEED has trailing characters: '" + text + "'");
    return value;
}

inline long long param_at(const std::vector<long long>& params, size_t i, const char* what) {
    if (i >= params.size())
        throw precondition_error(std::string("family needs parameter: ") + what);
    return params[i];
}

inline void param_count(const std::vector<long long>& params, size_t want,
                        const char* usage) {
    if (params.size() != want)
        throw precondition_error(std::string("family expects --params ") + usage);
}

inline Graph generate(const std::string& family, const std::vector<long long>& params,
                      std::uint64_t seed) {
    auto as_int = [](long long v, const char* what) {
        if (v < 0 || v > 10'000'000)
            throw precondition_error(std::string(what) + " out of range: " +
                                     std::to_string(v));
        return (int)v;
    };
    if (family == "complete") {
        param_count(params, 1, "<n>");
        return complete_graph(as_int(param_at(params, 0, "n"), "n"));
    }
    if (family == "complete-bipartite") {
        param_count(params, 2, "<a> <b>");
        return complete_bipartite(as_int(params[0], "a"), as_int(params[1], "b"));
    }
    if (family == "star") {
        param_count(params, 1, "<t>");
        return star(as_int(params[0], "t"));
    }
    if (family == "random-bipartite-no-deg-0-or-2") {
        param_count(params, 3, "<nx> <ny> <d_min>");
        return random_bipartite_no_deg02(as_int(params[0], "nx"), as_int(params[1], "ny"),
                                         as_int(params[2], "d_min"), seed);
    }
    if (family == "near-regular") {
        param_count(params, 2, "<n> <d>");
        return near_regular(as_int(params[0], "n"), as_int(params[1], "d"), seed);
    }
    if (family == "hypercube") {
        param_count(params, 1, "<k>");
        return hypercube(as_int(params[0], "k"));
    }
    if (family == "tree-of-stars") {
        param_count(params, 3, "<stars> <min_leaves> <max_leaves>");
        return tree_of_stars(as_int(params[0], "stars"), as_int(params[1], "min_leaves"),
                             as_int(params[2], "max_leaves"), seed);
    }
    throw precondition_error("unknown family: " + family);
}

inline void emit(const std::string& content, const std::string& path) {
    if (path.empty())
        std::cout << content;
    else
        write_file(path, content);
}

} // namespace cli_detail

// The whole command surface; args exclude the program name. Returns the
// process exit code instead of calling std::exit so tests can drive it.
inline int run_cli(std::vector<std::string> args) {
    CLI::App app{"antimagic orientation toolkit: construct, verify, generate, cross-check"};
    app.require_subcommand(1);

    auto* orient =
        app.add_subcommand("orient", "construct an orientation + labeling certificate");
    std::string orient_mode, orient_input, orient_output;
    std::uint64_t orient_seed = 0;
    bool orient_unsafe = false;
    orient->add_option("--mode", orient_mode, "bipartite | mindegree")
        ->required()
        ->check(CLI::IsMember({"bipartite", "mindegree"}));
    orient->add_option("--input", orient_input, "edge-list file")->required();
    orient->add_option("--output", orient_output, "certificate file (stdout when omitted)");
    auto* orient_seed_opt = orient->add_option(
        "--seed", orient_seed, "cut-restart seed (falls back to ANTIMAGIC_SEED)");
    orient->add_flag("--unsafe", orient_unsafe,
                     "mindegree only: skip the degree gate; failures become counterexamples");

    auto* verify = app.add_subcommand("verify", "re-check a certificate document");
    std::string verify_file;
    verify->add_option("file", verify_file, "certificate file")->required();

    auto* gen = app.add_subcommand("gen", "write an instance of a graph family");
    std::string gen_family, gen_out;
    std::vector<long long> gen_params;
    std::uint64_t gen_seed = 0;
    gen->add_option("--family", gen_family,
                    "complete | complete-bipartite | star | random-bipartite-no-deg-0-or-2 | "
                    "near-regular | hypercube | tree-of-stars")
        ->required();
    gen->add_option("--params", gen_params, "family parameters, in family order")
        ->expected(-1);
    gen->add_option("--out", gen_out, "edge-list file (stdout when omitted)");
    auto* gen_seed_opt =
        gen->add_option("--seed", gen_seed, "generator seed (falls back to ANTIMAGIC_SEED)");

    auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive ground truth, 10 edges max");
    std::string oracle_input;
    long long oracle_budget = 20'000'000;
    oracle_cmd->add_option("--input", oracle_input, "edge-list file")->required();
    oracle_cmd->add_option("--budget", oracle_budget, "label-assignment step budget");

    auto* selftest_cmd = app.add_subcommand("selftest", "run the full acceptance suite");

    try {
        std::reverse(args.begin(), args.end()); // CLI11 vector parse pops from the back
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_malformed;
    }

    try {
        if (orient->parsed()) {
            auto g = parse_edge_list(cli_detail::read_file(orient_input));
            std::optional<std::uint64_t> seed = orient_seed_opt->count() > 0
                                                    ? std::optional(orient_seed)
                                                    : cli_detail::env_seed();
            OrientMode mode = orient_mode == "bipartite" ? OrientMode::bipartite
                                                         : OrientMode::mindegree;
            std::string doc = orient_document(g, mode, seed, orient_unsafe);
            // gate the exit code on an independent re-parse and re-check
            auto parsed = parse_certificate(doc);
            auto verdict = verify_antimagic(parsed.cert);
            cli_detail::emit(doc, orient_output);
            if (!verdict.accepted()) {
                std::cerr << "reject: " << verdict.message << "\n";
                return exit_reject;
            }
            return exit_ok;
        }
        if (verify->parsed()) {
            auto doc = parse_certificate(cli_detail::read_file(verify_file));
            auto verdict = verify_antimagic(doc.cert);
            if (!verdict.accepted()) {
                std::cout << "reject: " << verdict.message << "\n";
                return exit_reject;
            }
            auto recomputed =
                oriented_vertex_sums(doc.cert.graph, doc.cert.orientation, doc.cert.labeling);
            if (recomputed != doc.cert.sums) {
                std::cout << "reject: declared sums disagree with the arcs\n";
                return exit_reject;
            }
            std::cout << "accept\n";
            return exit_ok;
        }
        if (gen->parsed()) {
            std::uint64_t seed = gen_seed_opt->count() > 0
                                     ? gen_seed
                                     : cli_detail::env_seed().value_or(0);
            auto g = cli_detail::generate(gen_family, gen_params, seed);
            cli_detail::emit(serialize_edge_list(g), gen_out);
            return exit_ok;
        }
        if (oracle_cmd->parsed()) {
            auto g = parse_edge_list(cli_detail::read_file(oracle_input));
            auto res = brute_force_antimagic(g, oracle_budget);
            if (res.status == OracleStatus::Exists) {
                std::cout << "exists explored=" << res.explored << "\n";
                CertificateMeta meta;
                meta.pipeline = "oracle";
                std::cout << serialize_certificate(*res.witness, meta);
                return exit_ok;
            }
            if (res.status == OracleStatus::NotExists) {
                std::cout << "not-exists explored=" << res.explored << "\n";
                return exit_reject;
            }
            std::cout << "inconclusive explored=" << res.explored << "\n";
            return exit_precondition;
        }
        if (selftest_cmd->parsed()) {
            return run_selftest(std::cout) ? exit_ok : exit_reject;
        }
        return exit_internal; // unreachable: require_subcommand(1)
    } catch (const counterexample_error& ex) {
        std::cerr << "counterexample: " << ex.what() << "\n";
        return exit_reject;
    } catch (const precondition_error& ex) {
        std::cerr << "precondition: " << ex.what() << "\n";
        return exit_precondition;
    } catch (const malformed_input_error& ex) {
        std::cerr << "malformed input: " << ex.what() << "\n";
        return exit_malformed;
    } catch (const structural_error& ex) {
        std::cerr << "precondition: " << ex.what() << "\n";
        return exit_precondition;
    } catch (const std::exception& ex) {
        std::cerr << "internal: " << ex.what() << "\n";
        return exit_internal;
    }
}

} // namespace antimagic
