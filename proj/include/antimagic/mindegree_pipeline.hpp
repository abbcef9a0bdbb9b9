#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "antimagic/bipartite_structure.hpp"
#include "antimagic/generators.hpp"
#include "antimagic/graph.hpp"
#include "antimagic/residue_partition.hpp"
#include "antimagic/trail_labeling.hpp"

namespace antimagic {

// A 2-partition of V where every vertex has at least half its neighbors on
// the other side, together with the spanning bipartite subgraph L of the
// crossing edges (cut.graph shares the parent vertex universe; parent_edge
// maps back to the input graph's edge ids).
struct CutPartition {
    std::vector<int> side; // 0/1 per vertex
    EdgeSubset cut;
};

// Local search: flip any vertex with fewer than half its neighbors across
// (lowest id first). Each flip strictly grows the cut, so at most e(G)
// flips happen. A seed swaps the parity start for a random one.
inline CutPartition max_bipartite_spanning(const Graph& g,
                                           std::optional<std::uint64_t> seed = std::nullopt) {
    int n = g.vertex_count;
    CutPartition cp;
    cp.side.assign(n, 0);
    if (seed) {
        SplitMix64 rng(*seed);
        for (int v = 0; v < n; v++) cp.side[v] = (int)rng.below(2);
    } else {
        for (int v = 0; v < n; v++) cp.side[v] = v % 2;
    }

    std::vector<int> cross(n, 0);
    for (auto [u, v] : g.edges)
        if (cp.side[u] != cp.side[v]) {
            cross[u]++;
            cross[v]++;
        }
    bool moved = true;
    while (moved) {
        moved = false;
        for (int v = 0; v < n && !moved; v++) {
            if (2 * cross[v] >= g.degree(v)) continue;
            cp.side[v] ^= 1;
            cross[v] = 0;
            for (auto [w, e] : g.adjacency[v]) {
                (void)e;
                if (cp.side[w] != cp.side[v]) {
                    cross[v]++;
                    cross[w]++;
                } else {
                    cross[w]--;
                }
            }
            moved = true;
        }
    }

    std::vector<int> cut_edges;
    for (int e = 0; e < g.edge_count(); e++)
        if (cp.side[g.edges[e].first] != cp.side[g.edges[e].second]) cut_edges.push_back(e);
    cp.cut = subgraph_from_edges(g, cut_edges);
    for (int v = 0; v < n; v++)
        require(2 * cp.cut.graph.degree(v) >= g.degree(v),
                "spanning cut: vertex keeps under half its degree");
    return cp;
}

// Derived decomposition for the minimum-degree pipeline. All edge ids are
// ids of the input graph. The classes h1, g2, h2 plus the marked edges
// (one per T-vertex) partition E(G).
struct MindegreePlan {
    Graph graph;
    CutPartition cut;
    STPartition st;               // split of the cut graph L
    std::vector<int> mstar_by_t;  // aligned with st.T
    std::vector<int> h1_edges, g2_edges, h2_edges;
    std::vector<std::vector<int>> a_edges; // H1 edges per T-vertex, aligned with st.T
    long long m1 = 0, m2 = 0, m3 = 0;
};

// Build the plan: cut -> split of L -> one marked edge per T-vertex inside
// L* = L - E(L[S]) -> H = L* minus marked -> G1 = G - E(H) - marked. Then
// per T-vertex v: move 4 - (d_G1(v) mod 4) lowest-id H-edges at v into G1,
// making G2 (T-degrees divisible by 4, each T-vertex keeping an S-neighbor);
// of the H-edges left at v, the lowest d_G2(v)/2 form H2 and the rest H1.
inline MindegreePlan plan_mindegree(const Graph& g, bool enforce_min_degree = true,
                                        std::optional<std::uint64_t> seed = std::nullopt) {
    if ((long long)g.edge_count() > (1LL << 30))
        throw precondition_error("mindegree pipeline: more than 2^30 edges");
    if (enforce_min_degree)
        for (int v = 0; v < g.vertex_count; v++)
            if (g.degree(v) < 33)
                throw precondition_error("vertex " + std::to_string(v) + " has degree " +
                                         std::to_string(g.degree(v)) +
                                         "; the construction needs minimum degree 33");

    MindegreePlan plan;
    plan.graph = g;
    plan.cut = max_bipartite_spanning(g, seed);
    const Graph& L = plan.cut.cut.graph;
    plan.st = st_partition(L);

    std::vector<char> in_s(g.vertex_count, 0), in_t(g.vertex_count, 0);
    for (int x : plan.st.S) in_s[x] = 1;
    for (int y : plan.st.T) in_t[y] = 1;

    // L* = crossing edges of L; marked edges are found inside L* and mapped
    // back to input ids through the two parent layers.
    std::vector<int> lstar_local;
    for (int e = 0; e < L.edge_count(); e++)
        if (in_s[L.edges[e].first] != in_s[L.edges[e].second]) lstar_local.push_back(e);
    EdgeSubset lstar = subgraph_from_edges(L, lstar_local);
    std::vector<int> mstar_local = extend_to_mstar(lstar.graph, plan.st);
    for (int le : mstar_local)
        plan.mstar_by_t.push_back(plan.cut.cut.parent_edge[lstar.parent_edge[le]]);

    std::vector<char> marked(g.edge_count(), 0), in_h(g.edge_count(), 0);
    for (int e : plan.mstar_by_t) marked[e] = 1;
    for (int le : lstar.parent_edge) {
        int e = plan.cut.cut.parent_edge[le];
        if (!marked[e]) in_h[e] = 1;
    }

    // d_G1 = degree in G minus H minus marked; moving edges out of H tracks
    // the two degree arrays in lockstep.
    std::vector<int> d_g1(g.vertex_count, 0);
    std::vector<std::vector<int>> h_at(g.vertex_count);
    for (int e = 0; e < g.edge_count(); e++) {
        auto [u, v] = g.edges[e];
        if (in_h[e]) {
            h_at[u].push_back(e);
            h_at[v].push_back(e);
        } else if (!marked[e]) {
            d_g1[u]++;
            d_g1[v]++;
        }
    }

    std::vector<char> moved(g.edge_count(), 0);
    for (int y : plan.st.T) {
        int c = d_g1[y] % 4;
        int need = 4 - c;
        require((int)h_at[y].size() >= need, "mindegree pipeline: too few H-edges to move");
        for (int k = 0; k < need; k++) moved[h_at[y][k]] = 1; // h_at is ascending by id
    }

    std::vector<std::vector<int>> hprime_at(g.vertex_count);
    for (int e = 0; e < g.edge_count(); e++) {
        if (in_h[e] && !moved[e]) {
            auto [u, v] = g.edges[e];
            hprime_at[u].push_back(e);
            hprime_at[v].push_back(e);
        }
        if ((!in_h[e] && !marked[e]) || (in_h[e] && moved[e])) plan.g2_edges.push_back(e);
    }

    std::vector<int> d_g2(g.vertex_count, 0);
    for (int e : plan.g2_edges) {
        d_g2[g.edges[e].first]++;
        d_g2[g.edges[e].second]++;
    }
    std::vector<char> in_h2(g.edge_count(), 0);
    plan.a_edges.assign(plan.st.T.size(), {});
    for (int i = 0; i < (int)plan.st.T.size(); i++) {
        int y = plan.st.T[i];
        require(d_g2[y] % 4 == 0, "mindegree pipeline: G2 degree not divisible by 4");
        bool s_neighbor = false;
        for (int e : plan.g2_edges)
            if (g.edges[e].first == y || g.edges[e].second == y) {
                int w = g.edges[e].first == y ? g.edges[e].second : g.edges[e].first;
                if (in_s[w]) {
                    s_neighbor = true;
                    break;
                }
            }
        require(s_neighbor, "mindegree pipeline: T-vertex lost all S-neighbors in G2");
        int take = d_g2[y] / 2;
        require((int)hprime_at[y].size() >= take + 2,
                "mindegree pipeline: H' too small to leave two edges per T-vertex");
        for (int k = 0; k < (int)hprime_at[y].size(); k++) {
            int e = hprime_at[y][k];
            if (k < take) {
                in_h2[e] = 1;
            } else {
                plan.a_edges[i].push_back(e);
            }
        }
    }
    for (int e = 0; e < g.edge_count(); e++) {
        if (!in_h[e] || moved[e]) continue;
        if (in_h2[e]) plan.h2_edges.push_back(e);
        else plan.h1_edges.push_back(e);
    }

    plan.m1 = (long long)plan.h1_edges.size();
    plan.m2 = (long long)plan.g2_edges.size();
    plan.m3 = (long long)plan.h2_edges.size();
    require(plan.m1 + plan.m2 + plan.m3 + (long long)plan.st.T.size() ==
                (long long)g.edge_count(),
            "mindegree pipeline: edge classes do not cover the graph");
    require(plan.m3 % 2 == 0, "mindegree pipeline: H2 size not even");
    return plan;
}

// Five labeling steps on the plan. H1 carries a residue partition of
// [1, m1]; G2 carries the consecutive labeling with T exact (T-sum
// d_G2(y)/2); H2 carries the even-T labeling (T-sum -d_H2(y), cancelling
// step 2 on T); the marked edges absorb the top labels, including the value
// m1+m2+m3 that step 3 skips when m3 = 2 (mod 4).
inline Certificate label_mindegree(const MindegreePlan& plan) {
    const Graph& g = plan.graph;
    long long m = g.edge_count();
    long long m1 = plan.m1, m2 = plan.m2, m3 = plan.m3;
    long long ts = (long long)plan.st.T.size(), ss = (long long)plan.st.S.size();

    std::vector<char> in_t(g.vertex_count, 0);
    for (int y : plan.st.T) in_t[y] = 1;
    Orientation o;
    o.tail_is_first.assign((size_t)m, 1);
    for (int e = 0; e < g.edge_count(); e++)
        o.tail_is_first[e] = in_t[g.edges[e].first] ? 1 : 0;
    std::vector<long long> labels((size_t)m, 0);

    // step 1: H1, one residue-partition part per T-vertex
    std::vector<long long> sizes;
    for (auto& a : plan.a_edges) sizes.push_back((long long)a.size());
    ResiduePartition rp = residue_partition(m1, sizes);
    for (int i = 0; i < (int)plan.a_edges.size(); i++) {
        std::vector<int> es = plan.a_edges[i];
        auto s_end = [&](int e) {
            return in_t[g.edges[e].first] ? g.edges[e].second : g.edges[e].first;
        };
        std::sort(es.begin(), es.end(), [&](int a, int b) {
            return std::make_pair(s_end(a), a) < std::make_pair(s_end(b), b);
        });
        for (int j = 0; j < (int)es.size(); j++) labels[es[j]] = rp.parts[i][j];
    }

    // step 2: G2 with every T-vertex exact
    EdgeSubset sub2 = subgraph_from_edges(g, plan.g2_edges);
    ConsecutiveLabeling cl = consecutive_labeling(sub2.graph, m1, plan.st.T);
    for (int j = 0; j < (int)sub2.parent_edge.size(); j++) {
        labels[sub2.parent_edge[j]] = cl.labeling.labels[j];
        o.tail_is_first[sub2.parent_edge[j]] = cl.orientation.tail_is_first[j];
    }

    // step 3: H2 under the even-T labeling
    EdgeSubset sub3 = subgraph_from_edges(g, plan.h2_edges);
    TevenLabeling tl = teven_labeling(sub3.graph, plan.st.S, plan.st.T, m1 + m2);
    for (int j = 0; j < (int)sub3.parent_edge.size(); j++) {
        labels[sub3.parent_edge[j]] = tl.labeling.labels[j];
        o.tail_is_first[sub3.parent_edge[j]] = tl.orientation.tail_is_first[j];
    }
    for (int y : plan.st.T)
        require(cl.sums[y] + tl.sums[y] == 0,
                "mindegree pipeline: G2 and H2 sums do not cancel on T");

    // step 4: marked edges of unmatched T-vertices, ascending id; when
    // m3 = 2 (mod 4) the first one fills the skipped label m1+m2+m3
    std::vector<int> t_pos(g.vertex_count, -1);
    for (int i = 0; i < (int)plan.st.T.size(); i++) t_pos[plan.st.T[i]] = i;
    bool gap = m3 % 4 == 2;
    require(gap || m3 % 4 == 0, "mindegree pipeline: H2 size not 0 or 2 mod 4");
    long long idx = 0;
    for (int y : plan.st.T) {
        if (plan.st.matching.mate[y] >= 0) continue;
        idx++;
        long long lab = m1 + m2 + m3 + idx;
        if (gap && idx == 1) lab = m1 + m2 + m3;
        labels[plan.mstar_by_t[t_pos[y]]] = lab;
    }

    std::vector<long long> partial(g.vertex_count, 0);
    for (int e = 0; e < g.edge_count(); e++) {
        if (labels[e] == 0) continue;
        partial[o.head(g, e)] += labels[e];
        partial[o.tail(g, e)] -= labels[e];
    }
    std::vector<int> xs = plan.st.S;
    std::sort(xs.begin(), xs.end(), [&](int a, int b) {
        return std::make_pair(partial[a], a) < std::make_pair(partial[b], b);
    });

    // step 5: matching edges in sorted-S order. The matching's own edge ids
    // live in the cut subgraph, so the matched partner's marked edge (same
    // edge, input-graph id) stands in for them.
    bool tie_gap = ts == ss && gap;
    for (int i = 1; i <= (int)xs.size(); i++) {
        int y = plan.st.matching.mate[xs[i - 1]];
        require(y >= 0 && t_pos[y] >= 0, "mindegree pipeline: S-vertex without matched partner");
        long long lab = m1 + m2 + m3 + ts - ss + i;
        if (tie_gap) lab = i == 1 ? m1 + m2 + m3 : m1 + m2 + m3 + i;
        labels[plan.mstar_by_t[t_pos[y]]] = lab;
    }

    Certificate cert;
    cert.graph = g;
    cert.orientation = std::move(o);
    cert.labeling.labels = std::move(labels);
    cert.labeling.declared_set.resize((size_t)m);
    for (long long i = 0; i < m; i++) cert.labeling.declared_set[(size_t)i] = i + 1;

    std::vector<long long> sorted_labels = cert.labeling.labels;
    std::sort(sorted_labels.begin(), sorted_labels.end());
    for (long long i = 0; i < m; i++)
        require(sorted_labels[(size_t)i] == i + 1, "mindegree pipeline: labels not [1, m]");

    cert.sums = oriented_vertex_sums(cert.graph, cert.orientation, cert.labeling);
    if (!plan.st.T.empty() && !plan.st.S.empty()) {
        long long max_t = cert.sums[plan.st.T.front()];
        for (int y : plan.st.T) max_t = std::max(max_t, cert.sums[y]);
        long long min_s = cert.sums[plan.st.S.front()];
        for (int x : plan.st.S) min_s = std::min(min_s, cert.sums[x]);
        require(max_t < min_s, "mindegree pipeline: T-sums not below S-sums");
    }
    for (int i = 0; i + 1 < (int)xs.size(); i++)
        require(cert.sums[xs[i]] < cert.sums[xs[i + 1]],
                "mindegree pipeline: S-sums not strictly increasing");

    Verdict v = verify_antimagic(cert);
    require(v.accepted(), "mindegree pipeline: verifier rejected the certificate");
    return cert;
}

// Antimagic orientation for minimum degree >= 33. With unsafe = true the
// degree gate is skipped and any construction failure or verifier rejection
// comes back as counterexample_error instead of an internal assertion.
inline Certificate antimagic_orientation_mindegree(const Graph& g, bool unsafe = false,
                                                   std::optional<std::uint64_t> seed =
                                                       std::nullopt) {
    if (!unsafe) return label_mindegree(plan_mindegree(g, true, seed));
    try {
        return label_mindegree(plan_mindegree(g, false, seed));
    } catch (const counterexample_error&) {
        throw;
    } catch (const std::exception& e) {
        throw counterexample_error(
            std::string("construction failed outside the guaranteed degree range: ") +
            e.what());
    }
}

} // namespace antimagic
