#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "antimagic/bipartite_structure.hpp"
#include "antimagic/graph.hpp"
#include "antimagic/residue_partition.hpp"
#include "antimagic/trail_labeling.hpp"

namespace antimagic {

// Which labeling scheme a plan calls for. Degenerate is the n2 > m2, m2 = 0
// situation (every T-vertex has degree 1); it reuses the Case1 labeler with
// the residue-partition step skipped.
enum class LabelPlanCase { Case1, Case21, Case22, Degenerate };

inline const char* case_name(LabelPlanCase c) {
    switch (c) {
    case LabelPlanCase::Case1: return "case1";
    case LabelPlanCase::Case21: return "case21";
    case LabelPlanCase::Case22: return "case22";
    case LabelPlanCase::Degenerate: return "degenerate";
    }
    return "unknown";
}

// Everything the bipartite labelers need, derived once from the input graph.
//
// Edge classes: gs_edges = edges inside S; one marked edge per T-vertex
// (mstar_by_t); every other edge crosses S/T and belongs to H. t_order lists
// T with degree-1 vertices moved to the back (ascending id within each
// class); a_edges[i] holds the H-edges at t_order[i] for the first
// n2 - t1 positions, in ascending edge-id order.
struct BipartitePlan {
    Graph graph;
    STPartition st;
    std::vector<int> t_order;
    std::vector<int> mstar_by_t;
    std::vector<std::vector<int>> a_edges;
    std::vector<int> gs_edges;
    long long m1 = 0; // e(G[S])
    long long m2 = 0; // e(H)
    int t1 = 0;       // number of degree-1 T-vertices
    long long k = 0;  // number of odd |A_i|
    long long ell = 0; // (m2 - 3k) / 2
    LabelPlanCase tag = LabelPlanCase::Case1;

    int n1() const { return (int)st.S.size(); }
    int n2() const { return (int)st.T.size(); }
};

namespace bipartite_detail {

// Arcs run T -> S everywhere except inside G[S], whose orientation comes
// from the consecutive labeling and overwrites these defaults.
inline Orientation orient_toward_s(const BipartitePlan& plan) {
    const Graph& g = plan.graph;
    std::vector<char> in_t(g.vertex_count, 0);
    for (int y : plan.st.T) in_t[y] = 1;
    Orientation o;
    o.tail_is_first.assign(g.edge_count(), 1);
    for (int e = 0; e < g.edge_count(); e++)
        o.tail_is_first[e] = in_t[g.edges[e].first] ? 1 : 0;
    return o;
}

// Consecutive labeling of G[S] with offset p; copies labels and arc
// directions back into the parent graph's arrays. No-op when m1 = 0.
inline void label_inside_s(const BipartitePlan& plan, long long p, Orientation& o,
                           std::vector<long long>& labels) {
    if (plan.gs_edges.empty()) return;
    EdgeSubset sub = subgraph_from_edges(plan.graph, plan.gs_edges);
    ConsecutiveLabeling cl = consecutive_labeling(sub.graph, p, {});
    for (int j = 0; j < (int)sub.parent_edge.size(); j++) {
        labels[sub.parent_edge[j]] = cl.labeling.labels[j];
        o.tail_is_first[sub.parent_edge[j]] = cl.orientation.tail_is_first[j];
    }
}

// Vertex sums of the partially labeled digraph (label 0 = not yet placed).
inline std::vector<long long> partial_sums(const Graph& g, const Orientation& o,
                                           const std::vector<long long>& labels) {
    std::vector<long long> s(g.vertex_count, 0);
    for (int e = 0; e < g.edge_count(); e++) {
        if (labels[e] == 0) continue;
        s[o.head(g, e)] += labels[e];
        s[o.tail(g, e)] -= labels[e];
    }
    return s;
}

// S sorted by (current sum, id): the strictly increasing matching labels are
// added on top of this order, which keeps the final S-sums strictly
// increasing and pairwise distinct.
inline std::vector<int> sorted_s(const BipartitePlan& plan,
                                 const std::vector<long long>& partial) {
    std::vector<int> xs = plan.st.S;
    std::sort(xs.begin(), xs.end(), [&](int a, int b) {
        return std::make_pair(partial[a], a) < std::make_pair(partial[b], b);
    });
    return xs;
}

// Unmatched T-vertices ascending by id; their marked edges absorb the
// "extension" labels before the matching itself is labeled.
inline std::vector<int> unmatched_t(const BipartitePlan& plan) {
    std::vector<int> ys;
    for (int y : plan.st.T)
        if (plan.st.matching.mate[y] < 0) ys.push_back(y);
    return ys;
}

inline int mstar_edge_of(const BipartitePlan& plan, int y) {
    for (int i = 0; i < (int)plan.t_order.size(); i++)
        if (plan.t_order[i] == y) return plan.mstar_by_t[i];
    throw internal_error("bipartite pipeline: vertex not in T order");
}

// Assemble the certificate and enforce the construction's contract: label
// bijection onto [1, m], negative T-sums, S-sums above every T-sum and
// strictly increasing along the sort order, and verifier acceptance.
inline Certificate finalize(const BipartitePlan& plan, Orientation o,
                            std::vector<long long> labels,
                            const std::vector<int>& s_sorted) {
    const Graph& g = plan.graph;
    long long m = g.edge_count();
    Certificate cert;
    cert.graph = g;
    cert.orientation = std::move(o);
    cert.labeling.labels = std::move(labels);
    cert.labeling.declared_set.resize((size_t)m);
    for (long long i = 0; i < m; i++) cert.labeling.declared_set[(size_t)i] = i + 1;

    std::vector<long long> sorted_labels = cert.labeling.labels;
    std::sort(sorted_labels.begin(), sorted_labels.end());
    for (long long i = 0; i < m; i++)
        require(sorted_labels[(size_t)i] == i + 1, "bipartite pipeline: labels not [1, m]");

    cert.sums = oriented_vertex_sums(cert.graph, cert.orientation, cert.labeling);

    if (!plan.st.T.empty()) {
        long long max_t = cert.sums[plan.st.T.front()];
        for (int y : plan.st.T) {
            require(g.degree(y) == 0 || cert.sums[y] < 0,
                    "bipartite pipeline: T-sum not negative");
            max_t = std::max(max_t, cert.sums[y]);
        }
        for (int x : plan.st.S)
            require(cert.sums[x] > max_t, "bipartite pipeline: S-sum not above T-sums");
    }
    for (int i = 0; i + 1 < (int)s_sorted.size(); i++)
        require(cert.sums[s_sorted[i]] < cert.sums[s_sorted[i + 1]],
                "bipartite pipeline: S-sums not strictly increasing");

    Verdict v = verify_antimagic(cert);
    require(v.accepted(), "bipartite pipeline: verifier rejected the certificate");
    return cert;
}

} // namespace bipartite_detail

// Derive the labeling plan: split the vertices via st_partition, mark one
// edge per T-vertex, classify the remaining edges, and pick the case.
inline BipartitePlan plan_bipartite(const Graph& g) {
    if ((long long)g.edge_count() > (1LL << 30))
        throw precondition_error("bipartite pipeline: more than 2^30 edges");
    for (int v = 0; v < g.vertex_count; v++) {
        int d = g.degree(v);
        if (d == 0 || d == 2)
            throw precondition_error("vertex " + std::to_string(v) + " has degree " +
                                     std::to_string(d) + "; degrees 0 and 2 are not supported");
    }

    BipartitePlan plan;
    plan.graph = g;
    plan.st = st_partition(g);
    std::vector<int> mstar_st = extend_to_mstar(g, plan.st);

    std::vector<int> mstar_of(g.vertex_count, -1);
    for (int i = 0; i < (int)plan.st.T.size(); i++) mstar_of[plan.st.T[i]] = mstar_st[i];

    for (int y : plan.st.T)
        if (g.degree(y) != 1) plan.t_order.push_back(y);
    plan.t1 = (int)(plan.st.T.size() - plan.t_order.size());
    for (int y : plan.st.T)
        if (g.degree(y) == 1) plan.t_order.push_back(y);
    for (int y : plan.t_order) plan.mstar_by_t.push_back(mstar_of[y]);

    std::vector<char> in_t(g.vertex_count, 0);
    std::vector<char> marked(g.edge_count(), 0);
    for (int y : plan.st.T) in_t[y] = 1;
    for (int e : plan.mstar_by_t) marked[e] = 1;

    std::vector<int> t_pos(g.vertex_count, -1);
    for (int i = 0; i < (int)plan.t_order.size(); i++) t_pos[plan.t_order[i]] = i;
    int regular = (int)plan.t_order.size() - plan.t1;
    plan.a_edges.assign(regular, {});

    for (int e = 0; e < g.edge_count(); e++) {
        auto [u, v] = g.edges[e];
        if (!in_t[u] && !in_t[v]) {
            require(!marked[e], "bipartite pipeline: marked edge inside S");
            plan.gs_edges.push_back(e);
            continue;
        }
        require(in_t[u] != in_t[v], "bipartite pipeline: edge inside T");
        if (marked[e]) continue;
        int y = in_t[u] ? u : v;
        require(t_pos[y] < regular, "bipartite pipeline: extra edge at a degree-1 vertex");
        plan.a_edges[t_pos[y]].push_back(e);
    }

    plan.m1 = (long long)plan.gs_edges.size();
    for (auto& a : plan.a_edges) plan.m2 += (long long)a.size();
    require(plan.m1 + plan.m2 + plan.n2() == (long long)g.edge_count(),
            "bipartite pipeline: edge classes do not cover the graph");
    for (int i = 0; i < regular; i++)
        require((long long)plan.a_edges[i].size() == g.degree(plan.t_order[i]) - 1 &&
                    plan.a_edges[i].size() >= 2,
                "bipartite pipeline: unmarked degree at a T-vertex is not d - 1 >= 2");

    for (auto& a : plan.a_edges)
        if (a.size() % 2 == 1) plan.k++;
    require((plan.m2 - 3 * plan.k) % 2 == 0 && plan.m2 >= 3 * plan.k,
            "bipartite pipeline: group sizes violate 3k + 2l");
    plan.ell = (plan.m2 - 3 * plan.k) / 2;

    if (plan.n2() <= plan.m2) plan.tag = LabelPlanCase::Case1;
    else if (plan.k + plan.ell == 0) plan.tag = LabelPlanCase::Degenerate;
    else if (plan.k == 0) plan.tag = LabelPlanCase::Case21;
    else plan.tag = LabelPlanCase::Case22;
    return plan;
}

// n2 <= m2 (and the degenerate m2 = 0 variant). H-groups take a residue
// partition of [1, m2] so each group sum vanishes mod m2 (odd) or m2 + 1
// (even); G[S] sits at offset m2; the marked edges take the top n2 labels,
// matching labels last in sorted-S order.
inline Certificate label_case1(const BipartitePlan& plan) {
    if (plan.tag != LabelPlanCase::Case1 && plan.tag != LabelPlanCase::Degenerate)
        throw precondition_error("label_case1: plan is for a different case");
    const Graph& g = plan.graph;
    long long m = g.edge_count();
    Orientation o = bipartite_detail::orient_toward_s(plan);
    std::vector<long long> labels((size_t)m, 0);

    if (plan.m2 > 0) {
        std::vector<char> in_t(g.vertex_count, 0);
        for (int y : plan.st.T) in_t[y] = 1;
        auto s_end = [&](int e) {
            return in_t[g.edges[e].first] ? g.edges[e].second : g.edges[e].first;
        };
        std::vector<long long> sizes;
        for (auto& a : plan.a_edges) sizes.push_back((long long)a.size());
        ResiduePartition rp = residue_partition(plan.m2, sizes);
        for (int i = 0; i < (int)plan.a_edges.size(); i++) {
            std::vector<int> es = plan.a_edges[i];
            std::sort(es.begin(), es.end(), [&](int a, int b) {
                return std::make_pair(s_end(a), a) < std::make_pair(s_end(b), b);
            });
            for (int j = 0; j < (int)es.size(); j++) labels[es[j]] = rp.parts[i][j];
        }
    }

    bipartite_detail::label_inside_s(plan, plan.m2, o, labels);

    long long cnt = 0;
    for (int y : bipartite_detail::unmatched_t(plan))
        labels[bipartite_detail::mstar_edge_of(plan, y)] = plan.m1 + plan.m2 + (++cnt);

    std::vector<long long> partial = bipartite_detail::partial_sums(g, o, labels);
    std::vector<int> xs = bipartite_detail::sorted_s(plan, partial);
    for (int i = 0; i < (int)xs.size(); i++)
        labels[plan.st.matching.mate_edge[xs[i]]] =
            plan.m1 + plan.m2 + plan.n2() - plan.n1() + (i + 1);

    return bipartite_detail::finalize(plan, std::move(o), std::move(labels), xs);
}

// n2 > m2, every group even. Groups split into pairs; pair i takes
// {m1 + n2 + i, m - (i - 1)}, so every group sum is a positive multiple of
// m + m1 + n2 + 1 and the marked-edge labels separate the T-sums mod that.
inline Certificate label_case21(const BipartitePlan& plan) {
    if (plan.tag != LabelPlanCase::Case21)
        throw precondition_error("label_case21: plan is for a different case");
    const Graph& g = plan.graph;
    long long m = g.edge_count();
    Orientation o = bipartite_detail::orient_toward_s(plan);
    std::vector<long long> labels((size_t)m, 0);

    bipartite_detail::label_inside_s(plan, 0, o, labels);

    long long block = 0;
    long long pair_total = m + plan.m1 + plan.n2() + 1;
    for (auto& a : plan.a_edges) {
        require(a.size() % 2 == 0, "label_case21: odd group");
        for (int j = 0; j + 1 < (int)a.size(); j += 2) {
            block++;
            labels[a[j]] = plan.m1 + plan.n2() + block;
            labels[a[j + 1]] = m - (block - 1);
            require(labels[a[j]] + labels[a[j + 1]] == pair_total,
                    "label_case21: pair sum mismatch");
        }
    }
    require(2 * block == plan.m2, "label_case21: pair count mismatch");

    long long cnt = 0;
    for (int y : bipartite_detail::unmatched_t(plan))
        labels[bipartite_detail::mstar_edge_of(plan, y)] = plan.m1 + (++cnt);

    std::vector<long long> partial = bipartite_detail::partial_sums(g, o, labels);
    std::vector<int> xs = bipartite_detail::sorted_s(plan, partial);
    for (int i = 0; i < (int)xs.size(); i++)
        labels[plan.st.matching.mate_edge[xs[i]]] =
            plan.m1 + plan.n2() - plan.n1() + (i + 1);

    return bipartite_detail::finalize(plan, std::move(o), std::move(labels), xs);
}

// n2 > m2 with k odd groups. Each odd group leads with a 3-block
// {i, m1 + k + i, m - 2i + 2}; every remaining pair i takes
// {m1 + 3k + i, m - 2k + 2 - i}; all blocks sum to m + m1 + k + 2. The
// leftover label set B (|B| = n2) serves the marked edges: its n2 - n1
// smallest go to unmatched T-vertices, the rest ascending in sorted-S order.
inline Certificate label_case22(const BipartitePlan& plan) {
    if (plan.tag != LabelPlanCase::Case22)
        throw precondition_error("label_case22: plan is for a different case");
    const Graph& g = plan.graph;
    long long m = g.edge_count();
    long long k = plan.k, ell = plan.ell, m1 = plan.m1;
    Orientation o = bipartite_detail::orient_toward_s(plan);
    std::vector<long long> labels((size_t)m, 0);

    bipartite_detail::label_inside_s(plan, k, o, labels);

    long long block_total = m + m1 + k + 2;
    long long triples = 0, pairs = 0;
    for (auto& a : plan.a_edges) {
        int start = 0;
        if (a.size() % 2 == 1) {
            triples++;
            labels[a[0]] = triples;
            labels[a[1]] = m1 + k + triples;
            labels[a[2]] = m - 2 * triples + 2;
            require(labels[a[0]] + labels[a[1]] + labels[a[2]] == block_total,
                    "label_case22: triple sum mismatch");
            start = 3;
        }
        for (int j = start; j + 1 < (int)a.size(); j += 2) {
            pairs++;
            labels[a[j]] = m1 + 3 * k + pairs;
            labels[a[j + 1]] = m - 2 * k + 2 - pairs;
            require(labels[a[j]] + labels[a[j + 1]] == block_total,
                    "label_case22: pair sum mismatch");
        }
    }
    require(triples == k && pairs == ell, "label_case22: block count mismatch");

    std::vector<long long> spare;
    for (long long v = m1 + 2 * k + 1; v <= m1 + 3 * k; v++) spare.push_back(v);
    for (long long v = m1 + 3 * k + ell + 1; v <= m - 2 * k - ell + 1; v++) spare.push_back(v);
    for (long long v = m - 2 * k + 3; v <= m - 1; v += 2) spare.push_back(v);
    require((long long)spare.size() == plan.n2(), "label_case22: leftover label set size");
    require(std::is_sorted(spare.begin(), spare.end()), "label_case22: leftover set not sorted");

    size_t next = 0;
    for (int y : bipartite_detail::unmatched_t(plan))
        labels[bipartite_detail::mstar_edge_of(plan, y)] = spare[next++];

    std::vector<long long> partial = bipartite_detail::partial_sums(g, o, labels);
    std::vector<int> xs = bipartite_detail::sorted_s(plan, partial);
    for (int i = 0; i < (int)xs.size(); i++)
        labels[plan.st.matching.mate_edge[xs[i]]] = spare[next++];
    require(next == spare.size(), "label_case22: leftover labels not exhausted");

    return bipartite_detail::finalize(plan, std::move(o), std::move(labels), xs);
}

inline Certificate label_bipartite(const BipartitePlan& plan) {
    switch (plan.tag) {
    case LabelPlanCase::Case1:
    case LabelPlanCase::Degenerate: return label_case1(plan);
    case LabelPlanCase::Case21: return label_case21(plan);
    case LabelPlanCase::Case22: return label_case22(plan);
    }
    throw internal_error("label_bipartite: unreachable");
}

// Antimagic orientation for a bipartite graph with no vertex of degree 0
// or 2.
inline Certificate antimagic_orientation_bipartite(const Graph& g) {
    return label_bipartite(plan_bipartite(g));
}

} // namespace antimagic
