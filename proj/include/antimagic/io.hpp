#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "antimagic/graph.hpp"

// Plain-text edge lists and JSON certificates. Serialization is fully
// deterministic: fixed key order, fixed indentation, no timestamps, so equal
// inputs give byte-identical documents.

namespace antimagic {

namespace io_detail {

inline long long parse_int(const std::string& tok, const char* what) {
    size_t pos = 0;
    long long value = 0;
    try {
        value = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        throw malformed_input_error(std::string(what) + " is not an integer: '" + tok + "'");
    }
    if (pos != tok.size())
        throw malformed_input_error(std::string(what) + " has trailing characters: '" + tok +
                                    "'");
    return value;
}

// Lines starting with '#' (after optional whitespace) are comments; the rest
// is whitespace-separated integer tokens.
inline std::vector<std::string> tokens_without_comments(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream words(line);
        std::string tok;
        while (words >> tok) out.push_back(tok);
    }
    return out;
}

} // namespace io_detail

// Header "n m", then m lines "u v"; '#' comment lines are skipped.
inline Graph parse_edge_list(const std::string& text) {
    auto toks = io_detail::tokens_without_comments(text);
    if (toks.size() < 2) throw malformed_input_error("edge list is missing the 'n m' header");
    long long n = io_detail::parse_int(toks[0], "vertex count");
    long long m = io_detail::parse_int(toks[1], "edge count");
    if (n < 0 || m < 0) throw malformed_input_error("negative count in edge-list header");
    if ((long long)toks.size() != 2 + 2 * m)
        throw malformed_input_error("edge list announces " + std::to_string(m) +
                                    " edges but carries " +
                                    std::to_string(((long long)toks.size() - 2) / 2) +
                                    " endpoint pairs");
    if (n > 100'000'000) throw malformed_input_error("vertex count out of supported range");
    std::vector<std::pair<int, int>> edges;
    edges.reserve((size_t)m);
    for (long long e = 0; e < m; e++) {
        long long u = io_detail::parse_int(toks[(size_t)(2 + 2 * e)], "edge endpoint");
        long long v = io_detail::parse_int(toks[(size_t)(3 + 2 * e)], "edge endpoint");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw malformed_input_error("edge endpoint out of range: " + std::to_string(u) +
                                        " " + std::to_string(v));
        edges.push_back({(int)u, (int)v});
    }
    return Graph::from_edges((int)n, std::move(edges));
}

inline std::string serialize_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges) out << u << " " << v << "\n";
    return out.str();
}

struct CertificateMeta {
    std::string pipeline;              // which construction produced the labeling
    std::string case_tag;              // construction branch, empty when n/a
    std::optional<std::uint64_t> seed; // recorded even when unused by the pipeline
};

struct CertificateDocument {
    Certificate cert;
    CertificateMeta meta;
};

inline constexpr int certificate_format_version = 1;
inline constexpr const char* library_version = "1.0.0";

inline std::string serialize_certificate(const Certificate& cert, const CertificateMeta& meta) {
    nlohmann::ordered_json doc;
    doc["n"] = cert.graph.vertex_count;
    doc["m"] = cert.graph.edge_count();
    auto arcs = nlohmann::ordered_json::array();
    for (int e = 0; e < cert.graph.edge_count(); e++) {
        nlohmann::ordered_json arc;
        arc["tail"] = cert.orientation.tail(cert.graph, e);
        arc["head"] = cert.orientation.head(cert.graph, e);
        arc["label"] = cert.labeling.labels[(size_t)e];
        arcs.push_back(std::move(arc));
    }
    doc["arcs"] = std::move(arcs);
    auto sums = nlohmann::ordered_json::array();
    for (int v = 0; v < cert.graph.vertex_count; v++) {
        nlohmann::ordered_json row;
        row["vertex"] = v;
        row["sum"] = cert.sums[(size_t)v];
        sums.push_back(std::move(row));
    }
    doc["sums"] = std::move(sums);
    nlohmann::ordered_json m;
    m["pipeline"] = meta.pipeline;
    m["case"] = meta.case_tag;
    if (meta.seed)
        m["seed"] = *meta.seed;
    else
        m["seed"] = nullptr;
    m["versions"] = {{"format", certificate_format_version}, {"library", library_version}};
    doc["meta"] = std::move(m);
    return doc.dump(2) + "\n";
}

// Rebuilds the graph with every stored arc as (tail, head), so the parsed
// orientation is all-forward by construction. Declared sums are kept as-is;
// callers cross-check them against a recomputation.
inline CertificateDocument parse_certificate(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw malformed_input_error(std::string("certificate is not valid JSON: ") + ex.what());
    }
    CertificateDocument out;
    try {
        long long n = doc.at("n").get<long long>();
        long long m = doc.at("m").get<long long>();
        const auto& arcs = doc.at("arcs");
        if (!arcs.is_array() || (long long)arcs.size() != m)
            throw malformed_input_error("certificate arc count does not match m");
        std::vector<std::pair<int, int>> edges;
        std::vector<long long> labels;
        edges.reserve((size_t)m);
        labels.reserve((size_t)m);
        for (const auto& arc : arcs) {
            long long tail = arc.at("tail").get<long long>();
            long long head = arc.at("head").get<long long>();
            if (tail < 0 || tail >= n || head < 0 || head >= n)
                throw malformed_input_error("certificate arc endpoint out of range");
            edges.push_back({(int)tail, (int)head});
            labels.push_back(arc.at("label").get<long long>());
        }
        out.cert.graph = Graph::from_edges((int)n, std::move(edges));
        out.cert.orientation.tail_is_first.assign((size_t)m, 1);
        out.cert.labeling.labels = std::move(labels);
        out.cert.labeling.declared_set.resize((size_t)m);
        for (long long l = 0; l < m; l++) out.cert.labeling.declared_set[(size_t)l] = l + 1;
        const auto& sums = doc.at("sums");
        if (!sums.is_array() || (long long)sums.size() != n)
            throw malformed_input_error("certificate sum count does not match n");
        out.cert.sums.assign((size_t)n, 0);
        std::vector<std::uint8_t> seen((size_t)n, 0);
        for (const auto& row : sums) {
            long long v = row.at("vertex").get<long long>();
            if (v < 0 || v >= n || seen[(size_t)v])
                throw malformed_input_error("certificate sums must list each vertex once");
            seen[(size_t)v] = 1;
            out.cert.sums[(size_t)v] = row.at("sum").get<long long>();
        }
        const auto& meta = doc.at("meta");
        out.meta.pipeline = meta.at("pipeline").get<std::string>();
        out.meta.case_tag = meta.at("case").get<std::string>();
        if (!meta.at("seed").is_null())
            out.meta.seed = meta.at("seed").get<std::uint64_t>();
    } catch (const nlohmann::json::exception& ex) {
        throw malformed_input_error(std::string("certificate field missing or mistyped: ") +
                                    ex.what());
    }
    return out;
}

} // namespace antimagic
