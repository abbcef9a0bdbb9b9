#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "antimagic/graph.hpp"

// Brute-force ground truth for desk-scale graphs: enumerate every orientation
// and every arc labeling, with early pruning when two settled vertex sums
// collide. Hard-capped at 10 edges; larger graphs are out of scope here.

namespace antimagic {

enum class OracleStatus { Exists, NotExists, Inconclusive };

struct OracleResult {
    OracleStatus status = OracleStatus::Inconclusive;
    std::optional<Certificate> witness; // present iff status == Exists
    long long explored = 0;             // label-assignment steps spent
};

namespace oracle_detail {

struct Search {
    const Graph& g;
    long long m;
    long long budget;
    long long explored = 0;
    bool out_of_budget = false;

    std::vector<std::uint8_t> tail_is_first;
    std::vector<long long> labels;    // 0 while unassigned
    std::vector<std::uint8_t> used;   // 1-indexed by label
    std::vector<int> remaining;       // unlabeled incident edges per vertex
    std::vector<long long> sums;      // partial oriented sums
    std::vector<long long> settled;   // sums of fully labeled vertices

    explicit Search(const Graph& graph, long long b)
        : g(graph), m(graph.edge_count()), budget(b) {}

    bool collides(long long s) const {
        for (long long t : settled)
            if (t == s) return true;
        return false;
    }

    // Assign ascending labels to edge e and recurse; edges go in id order.
    bool dfs(int e) {
        if (e == m) return true;
        auto [u, w] = g.edges[(size_t)e];
        int tail = tail_is_first[(size_t)e] ? u : w;
        int head = tail_is_first[(size_t)e] ? w : u;
        for (long long l = 1; l <= m; l++) {
            if (used[(size_t)l]) continue;
            if (explored >= budget) {
                out_of_budget = true;
                return false;
            }
            explored++;
            used[(size_t)l] = 1;
            labels[(size_t)e] = l;
            sums[tail] -= l;
            sums[head] += l;
            remaining[u]--;
            remaining[w]--;
            int pushed = 0;
            bool ok = true;
            for (int v : {u, w}) {
                if (remaining[v] != 0) continue;
                if (collides(sums[v])) {
                    ok = false;
                    break;
                }
                settled.push_back(sums[v]);
                pushed++;
            }
            if (ok && dfs(e + 1)) return true;
            while (pushed-- > 0) settled.pop_back();
            remaining[u]++;
            remaining[w]++;
            sums[tail] += l;
            sums[head] -= l;
            labels[(size_t)e] = 0;
            used[(size_t)l] = 0;
            if (out_of_budget) return false;
        }
        return false;
    }

    // Try one fixed orientation; true means a full distinct-sum labeling exists.
    bool try_orientation(std::uint64_t word) {
        tail_is_first.assign((size_t)m, 0);
        for (long long e = 0; e < m; e++)
            tail_is_first[(size_t)e] = (std::uint8_t)((word >> e) & 1);
        labels.assign((size_t)m, 0);
        used.assign((size_t)m + 1, 0);
        sums.assign((size_t)g.vertex_count, 0);
        remaining.assign((size_t)g.vertex_count, 0);
        settled.clear();
        for (auto [u, w] : g.edges) {
            remaining[u]++;
            remaining[w]++;
        }
        // isolated vertices are settled at sum 0 before any assignment
        for (int v = 0; v < g.vertex_count; v++) {
            if (remaining[v] != 0) continue;
            if (collides(sums[v])) return false;
            settled.push_back(sums[v]);
        }
        return dfs(0);
    }
};

} // namespace oracle_detail

inline OracleResult brute_force_antimagic(const Graph& g, long long budget = 20'000'000) {
    if (g.edge_count() > 10)
        throw precondition_error("oracle is capped at 10 edges; got " +
                                 std::to_string(g.edge_count()));
    if (budget <= 0) throw precondition_error("oracle budget must be positive");

    oracle_detail::Search search(g, budget);
    OracleResult result;
    long long m = g.edge_count();
    // Gray-code walk over orientations so successive words differ in one arc.
    for (std::uint64_t i = 0; i < (1ULL << m); i++) {
        std::uint64_t word = i ^ (i >> 1);
        if (search.try_orientation(word)) {
            Certificate cert;
            cert.graph = g;
            cert.orientation.tail_is_first = search.tail_is_first;
            cert.labeling.labels = search.labels;
            cert.labeling.declared_set.resize((size_t)m);
            for (long long l = 0; l < m; l++)
                cert.labeling.declared_set[(size_t)l] = l + 1;
            cert.sums = oriented_vertex_sums(cert.graph, cert.orientation, cert.labeling);
            require(verify_antimagic(cert).accepted(), "oracle witness failed verification");
            result.status = OracleStatus::Exists;
            result.witness = std::move(cert);
            result.explored = search.explored;
            return result;
        }
        if (search.out_of_budget) {
            result.status = OracleStatus::Inconclusive;
            result.explored = search.explored;
            return result;
        }
    }
    // nonexistence is only claimed after the full walk finished within budget
    result.status = OracleStatus::NotExists;
    result.explored = search.explored;
    return result;
}

} // namespace antimagic
