#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "antimagic/bipartite_structure.hpp"
#include "antimagic/generators.hpp"

using namespace antimagic;

namespace {

// Exhaustive maximum matching size; keep edge counts <= 16.
int brute_max_matching(const Graph& g) {
    int m = g.edge_count();
    int best = 0;
    for (unsigned mask = 0; mask < (1u << m); mask++) {
        std::vector<char> touched(g.vertex_count, 0);
        bool ok = true;
        int size = 0;
        for (int e = 0; e < m && ok; e++) {
            if (!(mask & (1u << e))) continue;
            auto [u, v] = g.edges[e];
            if (touched[u] || touched[v]) ok = false;
            touched[u] = touched[v] = 1;
            size++;
        }
        if (ok) best = std::max(best, size);
    }
    return best;
}

void check_st(const Graph& g, const STPartition& st) {
    std::vector<char> in_s(g.vertex_count, 0), in_t(g.vertex_count, 0);
    for (int v : st.S) in_s[v] = 1;
    for (int v : st.T) in_t[v] = 1;
    for (int v = 0; v < g.vertex_count; v++) REQUIRE(in_s[v] + in_t[v] == 1);
    for (auto [u, v] : g.edges) REQUIRE((in_s[u] || in_s[v])); // T independent
    for (int s : st.S) REQUIRE(st.matching.mate[s] != -1);
    REQUIRE(st.matching.size() == (int)st.S.size());
    for (int e : st.matching.edge_ids) {
        auto [u, v] = g.edges[e];
        REQUIRE(in_s[u] != in_s[v]);
    }
    REQUIRE(st.S.size() <= st.T.size());
    // no edge joins an alternating layer to the unmatched far side
    std::set<int> d0(st.d0.begin(), st.d0.end());
    for (const auto& layer : st.layers)
        for (int a : layer)
            for (auto [w, e] : g.adjacency[a]) REQUIRE(d0.count(w) == 0);
}

Graph random_bipartite(int nx, int ny, int percent, SplitMix64& rng) {
    std::vector<std::pair<int, int>> e;
    for (int x = 0; x < nx; x++)
        for (int y = 0; y < ny; y++)
            if (rng.below(100) < (std::uint64_t)percent) e.push_back({x, nx + y});
    return Graph::from_edges(nx + ny, e);
}

} // namespace

TEST_CASE("matching sizes on the named examples") {
    auto p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    REQUIRE(maximum_matching(p4, {0, 2}, {1, 3}).size() == 2);
    auto k23 = complete_bipartite(2, 3);
    REQUIRE(maximum_matching(k23, {0, 1}, {2, 3, 4}).size() == 2);
    auto c6 = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
    REQUIRE(maximum_matching(c6, {0, 2, 4}, {1, 3, 5}).size() == 3);
}

TEST_CASE("matching rejects broken bipartitions") {
    auto p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    REQUIRE_THROWS_AS(maximum_matching(p4, {0, 2}, {1}), structural_error);    // missing vertex
    REQUIRE_THROWS_AS(maximum_matching(p4, {0, 1}, {2, 3}), structural_error); // inside edge
    REQUIRE_THROWS_AS(maximum_matching(p4, {0, 2}, {1, 3, 3}), structural_error);
}

TEST_CASE("matching agrees with brute force on random bipartite graphs") {
    SplitMix64 rng{5150};
    for (int it = 0; it < 200; it++) {
        int nx = 1 + (int)rng.below(4), ny = 1 + (int)rng.below(4);
        auto g = random_bipartite(nx, ny, 55, rng);
        if (g.edge_count() > 16) continue;
        std::vector<int> X, Y;
        for (int x = 0; x < nx; x++) X.push_back(x);
        for (int y = 0; y < ny; y++) Y.push_back(nx + y);
        auto m = maximum_matching(g, X, Y);
        REQUIRE(m.size() == brute_max_matching(g));
        // mate maps are mutually consistent
        for (int v = 0; v < g.vertex_count; v++) {
            if (m.mate[v] == -1) continue;
            REQUIRE(m.mate[m.mate[v]] == v);
            auto [a, b] = g.edges[m.mate_edge[v]];
            REQUIRE(((a == v && b == m.mate[v]) || (b == v && a == m.mate[v])));
        }
    }
}

TEST_CASE("star split keeps the center") {
    auto g = star(3);
    auto st = st_partition(g);
    REQUIRE(st.S == std::vector<int>{0});
    REQUIRE(st.T == std::vector<int>{1, 2, 3});
    REQUIRE(st.matching.size() == 1);
    check_st(g, st);
}

TEST_CASE("five-path split swaps to the smaller side") {
    auto g = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    auto st = st_partition(g);
    REQUIRE(st.S == std::vector<int>{1, 3});
    REQUIRE(st.T == std::vector<int>{0, 2, 4});
    check_st(g, st);
}

TEST_CASE("four-path split ties toward the low side") {
    auto g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    auto st = st_partition(g);
    REQUIRE(st.S == std::vector<int>{0, 2});
    REQUIRE(st.T == std::vector<int>{1, 3});
    std::set<std::pair<int, int>> medges;
    for (int e : st.matching.edge_ids) {
        std::pair<int, int> key = std::minmax(g.edges[e].first, g.edges[e].second);
        medges.insert(key);
    }
    REQUIRE(medges == std::set<std::pair<int, int>>{{0, 1}, {2, 3}});
    check_st(g, st);
}

TEST_CASE("split rejects odd cycles") {
    auto tri = Graph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}});
    REQUIRE_THROWS_AS(st_partition(tri), NotBipartiteError);
}

TEST_CASE("deficient side exposes layers and unmatched far vertices") {
    // x0,x1 both lean on y0 alone; x2 joins y0 and fans out to y1..y3, so the
    // smaller side {x0,x1,x2} cannot be saturated
    auto g = Graph::from_edges(7, {{0, 3}, {1, 3}, {2, 3}, {2, 4}, {2, 5}, {2, 6}});
    auto st = st_partition(g);
    check_st(g, st);
    REQUIRE(!st.layers.empty());
    REQUIRE(!st.d0.empty());
    // y0 = vertex 3 must land in S (it carries both x0 and x1)
    REQUIRE(std::find(st.S.begin(), st.S.end(), 3) != st.S.end());
}

TEST_CASE("isolated vertices land in T") {
    auto g = Graph::from_edges(4, {{0, 1}});
    auto st = st_partition(g);
    check_st(g, st);
    for (int v : {2, 3}) REQUIRE(std::find(st.T.begin(), st.T.end(), v) != st.T.end());
}

TEST_CASE("split invariants hold on random graphs including disconnected ones") {
    SplitMix64 rng{61803};
    for (int it = 0; it < 150; it++) {
        int nx = 1 + (int)rng.below(6), ny = 1 + (int)rng.below(6);
        auto g = random_bipartite(nx, ny, 30, rng);
        auto st = st_partition(g);
        check_st(g, st);
    }
}

TEST_CASE("matching extension covers every far vertex exactly once") {
    auto g = star(3);
    auto st = st_partition(g);
    auto mstar = extend_to_mstar(g, st);
    REQUIRE(mstar.size() == 3);
    std::set<int> distinct(mstar.begin(), mstar.end());
    REQUIRE(distinct.size() == 3); // all three edges: two were forced

    auto k33 = complete_bipartite(3, 3);
    auto st33 = st_partition(k33);
    auto m33 = extend_to_mstar(k33, st33);
    REQUIRE(m33.size() == 3);
    std::set<int> asin(m33.begin(), m33.end());
    std::set<int> expected(st33.matching.edge_ids.begin(), st33.matching.edge_ids.end());
    REQUIRE(asin == expected); // perfect matching needs no extension
}

TEST_CASE("matching extension on random graphs touches each far vertex once") {
    SplitMix64 rng{777001};
    for (int it = 0; it < 100; it++) {
        int nx = 1 + (int)rng.below(5), ny = 1 + (int)rng.below(5);
        auto g = random_bipartite(nx, ny, 60, rng);
        // extension needs every T-vertex to reach S; isolated vertices can't
        bool any_isolated = false;
        for (int v = 0; v < g.vertex_count; v++) any_isolated |= g.degree(v) == 0;
        if (any_isolated) continue;
        auto st = st_partition(g);
        auto mstar = extend_to_mstar(g, st);
        std::vector<int> touch(g.vertex_count, 0);
        std::vector<char> in_t(g.vertex_count, 0);
        for (int t : st.T) in_t[t] = 1;
        for (int e : mstar) {
            auto [u, v] = g.edges[e];
            if (in_t[u]) touch[u]++;
            if (in_t[v]) touch[v]++;
        }
        for (int t : st.T) REQUIRE(touch[t] == 1);
    }
}

TEST_CASE("matching extension fails loudly when a far vertex is stranded") {
    auto g = star(3);
    auto st = st_partition(g);
    // host graph that drops every edge except the matched one
    auto host = subgraph_from_edges(g, {st.matching.edge_ids[0]});
    REQUIRE_THROWS_AS(extend_to_mstar(host.graph, st), structural_error);
}
