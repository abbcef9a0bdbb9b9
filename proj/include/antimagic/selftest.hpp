#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "antimagic/driver.hpp"
#include "antimagic/generators.hpp"
#include "antimagic/oracle.hpp"

// The acceptance suite: nine criteria, each a pure function returning a
// pass/fail verdict plus a one-line summary. The test binary and the CLI
// `selftest` subcommand both run exactly these.

namespace antimagic {

// Pinned tolerances. A failure against these numbers is a real failure.
inline constexpr int selftest_min_per_case = 50;
inline constexpr double selftest_bipartite_total_seconds = 10.0;
inline constexpr double selftest_mindegree_instance_seconds = 1.0;
inline constexpr double selftest_oracle_instance_seconds = 5.0;
inline constexpr double selftest_scale_construct_seconds = 5.0;
inline constexpr double selftest_scale_verify_seconds = 1.0;

struct CriterionResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

namespace selftest_detail {

inline double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

inline std::string fmt_seconds(double s) {
    std::ostringstream out;
    out.precision(3);
    out << std::fixed << s << "s";
    return out.str();
}

// Erdos-Renyi style draws for the contract criteria; tiny sizes on purpose.
inline Graph er_graph(int n, int percent, SplitMix64& rng) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; u++)
        for (int v = u + 1; v < n; v++)
            if (rng.below(100) < (std::uint64_t)percent) e.push_back({u, v});
    return Graph::from_edges(n, std::move(e));
}

inline Graph er_bipartite(int nx, int ny, int percent, SplitMix64& rng) {
    std::vector<std::pair<int, int>> e;
    for (int x = 0; x < nx; x++)
        for (int y = 0; y < ny; y++)
            if (rng.below(100) < (std::uint64_t)percent) e.push_back({x, nx + y});
    return Graph::from_edges(nx + ny, std::move(e));
}

inline CriterionResult guard(const std::string& name,
                             const std::function<std::string()>& body) {
    CriterionResult r;
    r.name = name;
    try {
        r.detail = body();
        r.pass = true;
    } catch (const std::exception& ex) {
        r.pass = false;
        r.detail = ex.what();
    }
    return r;
}

// Connected bipartite trees with every vertex of degree 1 or >= 3 and at
// most 7 edges: stars, double stars, and the one 3-spine caterpillar.
inline Graph tiny_no_deg02_instance(SplitMix64& rng) {
    Graph g;
    std::uint64_t pick = rng.below(12);
    if (pick < 5) {
        g = star(3 + (int)pick); // K_{1,3} .. K_{1,7}
    } else if (pick < 11) {
        static const std::pair<int, int> ab[6] = {{2, 2}, {2, 3}, {3, 2},
                                                  {3, 3}, {2, 4}, {4, 2}};
        auto [a, b] = ab[pick - 5];
        std::vector<std::pair<int, int>> e = {{0, 1}};
        for (int i = 0; i < a; i++) e.push_back({0, 2 + i});
        for (int j = 0; j < b; j++) e.push_back({1, 2 + a + j});
        g = Graph::from_edges(2 + a + b, std::move(e));
    } else {
        // spine 0-1-2 with leaf counts 2, 1, 2
        g = Graph::from_edges(8, {{0, 1}, {1, 2}, {0, 3}, {0, 4}, {1, 5}, {2, 6}, {2, 7}});
    }
    return permute_vertices(g, rng);
}

} // namespace selftest_detail

// 500 bipartite instances with no degree-0/2 vertex across four generator
// families, one per construction branch; every certificate must verify and
// every branch must appear at least selftest_min_per_case times.
inline CriterionResult criterion_bipartite_end_to_end() {
    using namespace selftest_detail;
    return guard("bipartite-end-to-end", [] {
        auto t0 = std::chrono::steady_clock::now();
        int tags[4] = {0, 0, 0, 0};
        int verified = 0, total = 0, max_n = 0;
        auto run = [&](const Graph& g) {
            total++;
            max_n = std::max(max_n, g.vertex_count);
            auto plan = plan_bipartite(g);
            tags[(int)plan.tag]++;
            auto cert = label_bipartite(plan);
            if (!verify_antimagic(cert).accepted())
                throw counterexample_error("certificate rejected on instance " +
                                           std::to_string(total));
            verified++;
        };
        {
            SplitMix64 rng{101}; // dense side: the saturating branch
            for (int i = 0; i < 125; i++) {
                int nx = 4 + (int)rng.below(16);
                int ny = nx + (int)rng.below(120);
                run(random_bipartite_no_deg02(nx, ny, 3, rng.next()));
            }
        }
        {
            SplitMix64 rng{202}; // stars and trees of stars: no shared hubs
            for (int i = 0; i < 125; i++) {
                run(i % 2 == 0 ? star(3 + (int)rng.below(170))
                               : tree_of_stars(1 + (int)rng.below(10), 3, 7, rng.next()));
            }
        }
        {
            SplitMix64 rng{303}; // leafy, internal hubs of odd degree
            for (int i = 0; i < 125; i++) {
                BipartiteShape shape;
                shape.nx = 5 + (int)rng.below(6);
                shape.ny_internal = 1 + (int)rng.below(3);
                shape.leaves = 3 * shape.nx + 6 + (int)rng.below(30);
                shape.internal_choices = {3, 5};
                run(random_bipartite_shaped(shape, rng.next()));
            }
        }
        {
            SplitMix64 rng{404}; // leafy, internal hubs of even degree
            for (int i = 0; i < 125; i++) {
                BipartiteShape shape;
                shape.nx = 6 + (int)rng.below(6);
                shape.ny_internal = 1 + (int)rng.below(3);
                shape.leaves = 3 * shape.nx + 6 + (int)rng.below(30);
                shape.internal_choices = {4, 6};
                run(random_bipartite_shaped(shape, rng.next()));
            }
        }
        double dt = seconds_since(t0);
        for (int t = 0; t < 4; t++)
            if (tags[t] < selftest_min_per_case)
                throw counterexample_error(std::string("branch ") +
                                           case_name((LabelPlanCase)t) + " only hit " +
                                           std::to_string(tags[t]) + " times");
        if (max_n > 200) throw counterexample_error("instance exceeded 200 vertices");
        if (dt >= selftest_bipartite_total_seconds)
            throw counterexample_error("total runtime " + fmt_seconds(dt) + " over budget");
        std::ostringstream d;
        d << verified << "/" << total << " verified; case1=" << tags[0]
          << " case21=" << tags[1] << " case22=" << tags[2] << " degenerate=" << tags[3]
          << "; max n=" << max_n << "; " << fmt_seconds(dt);
        return d.str();
    });
}

// K34, K35, K40 plus 50 random near-regular graphs with min degree >= 33;
// every certificate verifies and no instance takes a second.
inline CriterionResult criterion_mindegree_end_to_end() {
    using namespace selftest_detail;
    return guard("mindegree-end-to-end", [] {
        std::vector<Graph> instances = {complete_graph(34), complete_graph(35),
                                        complete_graph(40)};
        SplitMix64 rng{515151};
        while (instances.size() < 53) {
            int n = 40 + (int)rng.below(81);
            int d = 33 + (int)rng.below(6);
            instances.push_back(near_regular(n, d, rng.next()));
        }
        double worst = 0.0;
        int verified = 0;
        for (const auto& g : instances) {
            int delta = g.degree(0);
            for (int v = 1; v < g.vertex_count; v++) delta = std::min(delta, g.degree(v));
            if (delta < 33) throw counterexample_error("generator broke the degree floor");
            auto t0 = std::chrono::steady_clock::now();
            auto cert = antimagic_orientation_mindegree(g);
            bool ok = verify_antimagic(cert).accepted();
            worst = std::max(worst, seconds_since(t0));
            if (!ok)
                throw counterexample_error("certificate rejected on n=" +
                                           std::to_string(g.vertex_count));
            verified++;
        }
        if (worst >= selftest_mindegree_instance_seconds)
            throw counterexample_error("slowest instance " + fmt_seconds(worst) +
                                       " over budget");
        std::ostringstream d;
        d << verified << "/53 verified; slowest instance " << fmt_seconds(worst);
        return d.str();
    });
}

// Exhaustive over every part-size multiset (parts >= 2) for n <= 12, plus
// 1000 random instances with n <= 60; the partition checker accepts all.
inline CriterionResult criterion_residue_partition() {
    using namespace selftest_detail;
    return guard("residue-partition", [] {
        long long exhaustive = 0;
        std::vector<long long> cur;
        std::function<void(long long, long long)> rec = [&](long long rem, long long minp) {
            if (rem == 0) {
                if (cur.empty()) return;
                long long n = 0;
                for (long long s : cur) n += s;
                auto rp = residue_partition(n, cur);
                verify_residue_partition(rp, n, cur);
                exhaustive++;
                return;
            }
            for (long long s = minp; s <= rem; s++) {
                if (rem - s == 1) continue; // a trailing 1 can never be a part
                cur.push_back(s);
                rec(rem - s, s);
                cur.pop_back();
            }
        };
        for (long long n = 2; n <= 12; n++) rec(n, 2);
        SplitMix64 rng{606};
        for (int it = 0; it < 1000; it++) {
            long long n = 2 + (long long)rng.below(59);
            std::vector<long long> sizes;
            long long rem = n;
            while (rem >= 2) {
                long long s = 2 + (long long)rng.below(std::min(rem - 1, (long long)8));
                if (rem - s == 1) s++;
                sizes.push_back(s);
                rem -= s;
            }
            auto rp = residue_partition(n, sizes);
            verify_residue_partition(rp, n, sizes);
        }
        std::ostringstream d;
        d << exhaustive << " exhaustive multisets (n<=12) + 1000 random (n<=60) accepted";
        return d.str();
    });
}

// Label set {p+1..p+m}, all sums within floor((d-1)/2) +- (p+m), and exact
// vertices land on d/2, over 200 random graphs with random valid exact sets.
inline CriterionResult criterion_consecutive_contract() {
    using namespace selftest_detail;
    return guard("consecutive-labeling-contract", [] {
        SplitMix64 rng{707};
        int done = 0;
        while (done < 200) {
            int n = 2 + (int)rng.below(9);
            auto g = er_graph(n, 50, rng);
            if (g.edge_count() == 0) continue;
            long long p = (long long)rng.below(20);
            std::vector<char> exact(n, 0);
            for (int v = 0; v < n; v++)
                if (g.degree(v) % 2 == 0 && g.degree(v) > 0 && rng.below(2) == 0)
                    exact[v] = 1;
            // every exact vertex must keep a neighbor outside the set
            bool changed = true;
            while (changed) {
                changed = false;
                for (int v = 0; v < n && !changed; v++) {
                    if (!exact[v]) continue;
                    bool outside = false;
                    for (auto [w, id] : g.adjacency[v]) outside = outside || !exact[w];
                    if (!outside) {
                        exact[v] = 0;
                        changed = true;
                    }
                }
            }
            std::vector<int> exact_list;
            for (int v = 0; v < n; v++)
                if (exact[v]) exact_list.push_back(v);
            auto r = consecutive_labeling(g, p, exact_list);
            long long m = g.edge_count();
            std::vector<long long> sorted = r.labeling.labels;
            std::sort(sorted.begin(), sorted.end());
            for (long long i = 0; i < m; i++)
                require(sorted[(size_t)i] == p + 1 + i, "label set mismatch");
            auto sums = oriented_vertex_sums(g, r.orientation, r.labeling);
            require(sums == r.sums, "reported sums disagree with recomputation");
            for (int v = 0; v < n; v++) {
                long long mid = floordiv(g.degree(v) - 1, 2);
                require(sums[v] >= mid - (p + m) && sums[v] <= mid + (p + m),
                        "sum bound violated");
                if (exact[v]) require(sums[v] == g.degree(v) / 2, "exact sum missed");
            }
            done++;
        }
        return std::string("200/200 random (graph, offset, exact-set) instances conform");
    });
}

// Even-hub labeling: label set {p+1..p+m-1} plus the top label per m mod 4,
// every hub sums to exactly -degree, spoke sums stay within their band.
inline CriterionResult criterion_teven_contract() {
    using namespace selftest_detail;
    return guard("teven-labeling-contract", [] {
        SplitMix64 rng{808};
        int done = 0;
        while (done < 200) {
            int nx = 2 + (int)rng.below(5);
            int ny = 1 + (int)rng.below(5);
            std::vector<std::pair<int, int>> edges;
            for (int y = 0; y < ny; y++) {
                int want = (rng.below(2) == 0) ? 2 : 4;
                if (want > nx) want = 2;
                std::vector<int> xs(nx);
                for (int i = 0; i < nx; i++) xs[i] = i;
                shuffle(xs, rng);
                for (int i = 0; i < want; i++) edges.push_back({xs[i], nx + y});
            }
            auto g = Graph::from_edges(nx + ny, edges);
            std::vector<int> S, T;
            for (int x = 0; x < nx; x++) S.push_back(x);
            for (int y = 0; y < ny; y++) T.push_back(nx + y);
            long long p = (long long)rng.below(15);
            auto r = teven_labeling(g, S, T, p);
            long long m = g.edge_count();
            long long delta = (m % 4 == 0) ? p + m : p + m + 1;
            require(r.delta_m == delta, "top label off");
            std::vector<long long> expect;
            for (long long v = p + 1; v <= p + m - 1; v++) expect.push_back(v);
            expect.push_back(delta);
            std::vector<long long> sorted = r.labeling.labels;
            std::sort(sorted.begin(), sorted.end());
            require(sorted == expect, "label set mismatch");
            auto sums = oriented_vertex_sums(g, r.orientation, r.labeling);
            for (int y : T)
                require(sums[y] == -(long long)g.degree(y), "hub sum is not -degree");
            for (int x : S) {
                long long mid = floordiv(g.degree(x) - 1, 2);
                require(sums[x] >= mid - delta && sums[x] <= mid + delta,
                        "spoke sum out of band");
            }
            done++;
        }
        return std::string("200/200 random even-hub instances conform");
    });
}

// Partition contract on 300 random bipartite graphs, disconnected included:
// T independent, the matching crosses and saturates all of S, and no edge
// joins an alternating layer to the unmatched far side.
inline CriterionResult criterion_st_contract() {
    using namespace selftest_detail;
    return guard("st-partition-contract", [] {
        SplitMix64 rng{909};
        int done = 0, unsaturated = 0;
        while (done < 300) {
            int nx = 1 + (int)rng.below(8);
            int ny = 1 + (int)rng.below(8);
            int percent = 10 + (int)rng.below(81);
            auto g = er_bipartite(nx, ny, percent, rng);
            if (g.edge_count() == 0) continue;
            auto st = st_partition(g);
            std::vector<char> in_s(g.vertex_count, 0);
            for (int v : st.S) in_s[v] = 1;
            for (int v : st.T)
                require(!in_s[v], "S and T overlap");
            require(st.S.size() + st.T.size() == (size_t)g.vertex_count,
                    "S and T miss a vertex");
            for (auto [u, v] : g.edges) require(in_s[u] || in_s[v], "T spans an edge");
            for (int s : st.S) require(st.matching.mate[s] != -1, "S vertex unsaturated");
            require(st.matching.size() == (int)st.S.size(), "matching size != |S|");
            for (int e : st.matching.edge_ids) {
                auto [u, v] = g.edges[(size_t)e];
                require(in_s[u] != in_s[v], "matching edge does not cross");
            }
            std::set<int> d0(st.d0.begin(), st.d0.end());
            for (const auto& layer : st.layers)
                for (int a : layer)
                    for (auto [w, e] : g.adjacency[a])
                        require(d0.count(w) == 0, "layer touches the far unmatched side");
            if (!st.d0.empty()) unsaturated++;
            done++;
        }
        std::ostringstream d;
        d << "300/300 conform (" << unsaturated << " with an unsaturated far side)";
        return d.str();
    });
}

// Brute force agrees with the constructive pipeline on 200 random tiny
// instances (<= 7 edges, no degree-0/2): existence plus a verified witness.
inline CriterionResult criterion_oracle_concordance() {
    using namespace selftest_detail;
    return guard("oracle-concordance", [] {
        SplitMix64 rng{1010};
        double worst = 0.0;
        for (int it = 0; it < 200; it++) {
            auto g = tiny_no_deg02_instance(rng);
            auto t0 = std::chrono::steady_clock::now();
            auto res = brute_force_antimagic(g);
            worst = std::max(worst, seconds_since(t0));
            if (res.status != OracleStatus::Exists)
                throw counterexample_error("oracle missed an instance known to exist");
            require(res.witness && verify_antimagic(*res.witness).accepted(),
                    "oracle witness invalid");
            auto cert = antimagic_orientation_bipartite(g);
            if (!verify_antimagic(cert).accepted())
                throw counterexample_error("pipeline certificate rejected at tiny scale");
        }
        if (worst >= selftest_oracle_instance_seconds)
            throw counterexample_error("slowest oracle run " + fmt_seconds(worst) +
                                       " over budget");
        std::ostringstream d;
        d << "200/200 agree (exists + verified witness); slowest oracle "
          << fmt_seconds(worst);
        return d.str();
    });
}

// Serializing the same instance twice with the same seed gives the same
// bytes, across a 20-instance corpus spanning both pipelines.
inline CriterionResult criterion_determinism() {
    using namespace selftest_detail;
    return guard("certificate-determinism", [] {
        struct Item {
            Graph g;
            OrientMode mode;
            std::optional<std::uint64_t> seed;
        };
        std::vector<Item> corpus;
        SplitMix64 rng{111213};
        for (int i = 0; i < 8; i++) {
            int nx = 4 + (int)rng.below(8);
            corpus.push_back({random_bipartite_no_deg02(nx, nx + (int)rng.below(10), 3,
                                                        rng.next()),
                              OrientMode::bipartite, rng.next()});
        }
        for (int i = 0; i < 8; i++) {
            int n = 40 + (int)rng.below(21);
            corpus.push_back(
                {near_regular(n, 33 + (int)rng.below(3), rng.next()), OrientMode::mindegree,
                 rng.next()});
        }
        corpus.push_back({complete_graph(34), OrientMode::mindegree, std::nullopt});
        corpus.push_back({complete_graph(35), OrientMode::mindegree, std::nullopt});
        corpus.push_back({complete_graph(40), OrientMode::mindegree, 99u});
        corpus.push_back({complete_bipartite(6, 9), OrientMode::bipartite, std::nullopt});
        for (size_t i = 0; i < corpus.size(); i++) {
            const auto& item = corpus[i];
            auto a = orient_document(item.g, item.mode, item.seed);
            auto b = orient_document(item.g, item.mode, item.seed);
            if (a != b)
                throw counterexample_error("bytes diverged on corpus item " +
                                           std::to_string(i));
            auto parsed = parse_certificate(a);
            require(verify_antimagic(parsed.cert).accepted(),
                    "round-tripped certificate rejected");
        }
        return std::string("20/20 corpus items byte-identical across repeat runs");
    });
}

// One instance with 100000 edges: construction under 5s, verification
// under 1s.
inline CriterionResult criterion_scale() {
    using namespace selftest_detail;
    return guard("scale-bound", [] {
        auto g = complete_bipartite(250, 400);
        require(g.edge_count() == 100000, "scale instance is not 100000 edges");
        auto t0 = std::chrono::steady_clock::now();
        auto cert = antimagic_orientation_bipartite(g);
        double construct = seconds_since(t0);
        auto t1 = std::chrono::steady_clock::now();
        bool ok = verify_antimagic(cert).accepted();
        double verify = seconds_since(t1);
        if (!ok) throw counterexample_error("scale certificate rejected");
        if (construct >= selftest_scale_construct_seconds)
            throw counterexample_error("construction took " + fmt_seconds(construct));
        if (verify >= selftest_scale_verify_seconds)
            throw counterexample_error("verification took " + fmt_seconds(verify));
        std::ostringstream d;
        d << "m=100000 constructed in " << fmt_seconds(construct) << ", verified in "
          << fmt_seconds(verify);
        return d.str();
    });
}

inline std::vector<CriterionResult> run_all_criteria() {
    return {
        criterion_bipartite_end_to_end(), criterion_mindegree_end_to_end(),
        criterion_residue_partition(),    criterion_consecutive_contract(),
        criterion_teven_contract(),       criterion_st_contract(),
        criterion_oracle_concordance(),   criterion_determinism(),
        criterion_scale(),
    };
}

inline void print_criterion(std::ostream& out, const CriterionResult& r) {
    out << (r.pass ? "PASS" : "FAIL") << "  " << r.name << ": " << r.detail << "\n";
}

// Runs everything, prints one line per criterion, and reports overall health.
inline bool run_selftest(std::ostream& out) {
    bool all = true;
    for (const auto& r : run_all_criteria()) {
        print_criterion(out, r);
        all = all && r.pass;
    }
    return all;
}

} // namespace antimagic
