#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "antimagic/graph.hpp"

namespace antimagic {

// A walk that repeats no edge. vertices has one more entry than edge_ids;
// edge_ids[i] joins vertices[i] and vertices[i+1]. Closed trails return to
// their start (vertices.front() == vertices.back()).
struct Trail {
    std::vector<int> vertices;
    std::vector<int> edge_ids;
    bool closed = false;
};

// Edge-disjoint trail cover of g. Odd-degree vertices of each component are
// paired off (ascending, consecutive) through phantom edges; an Euler circuit
// of the augmented component, split at the phantoms, yields one open trail
// per pair, each odd vertex an endpoint of exactly one of them. All-even
// components yield a single closed trail started at their smallest vertex
// outside `avoid`. No endpoint or closed-trail start ever lies in `avoid`.
// Ordering: open trails first (by smaller endpoint id, which is the start),
// then closed trails (by smallest contained vertex id).
inline std::vector<Trail> trail_decomposition(const Graph& g, const std::vector<int>& avoid) {
    int n = g.vertex_count;
    int m = g.edge_count();
    std::vector<char> avoided(n, 0);
    for (int v : avoid) {
        if (v < 0 || v >= n)
            throw structural_error("avoided vertex " + std::to_string(v) + " is out of range");
        avoided[v] = 1;
    }
    for (int v = 0; v < n; v++)
        if (avoided[v] && g.degree(v) % 2 != 0)
            throw structural_error("avoided vertex " + std::to_string(v) + " has odd degree");

    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (int r = 0; r < n; r++) {
        if (comp[r] != -1) continue;
        comp[r] = ncomp;
        std::vector<int> stack{r};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [w, id] : g.adjacency[v])
                if (comp[w] == -1) {
                    comp[w] = ncomp;
                    stack.push_back(w);
                }
        }
        ncomp++;
    }
    std::vector<std::vector<int>> comp_vertices(ncomp); // ascending by scan order
    for (int v = 0; v < n; v++) comp_vertices[comp[v]].push_back(v);

    // Adjacency extended by phantom edges (ids >= m), one per odd pair.
    std::vector<std::vector<std::pair<int, int>>> adj(g.adjacency);
    int phantom_count = 0;
    std::vector<int> start_of(ncomp, -1);
    std::vector<char> has_phantom(ncomp, 0);
    for (int c = 0; c < ncomp; c++) {
        const auto& verts = comp_vertices[c];
        int first_avoided = -1, first_free = -1;
        long long edge_ends = 0;
        std::vector<int> odd;
        for (int v : verts) {
            if (avoided[v] && first_avoided == -1) first_avoided = v;
            if (!avoided[v] && first_free == -1) first_free = v;
            edge_ends += g.degree(v);
            if (g.degree(v) % 2 != 0) odd.push_back(v);
        }
        if (first_avoided != -1 && first_free == -1)
            throw structural_error("component of vertex " + std::to_string(first_avoided) +
                                   " lies entirely inside the avoided set");
        if (edge_ends == 0) continue;
        if (!odd.empty()) {
            has_phantom[c] = 1;
            for (size_t i = 0; i + 1 < odd.size(); i += 2) {
                int id = m + phantom_count++;
                adj[odd[i]].push_back({odd[i + 1], id});
                adj[odd[i + 1]].push_back({odd[i], id});
            }
            start_of[c] = odd[0];
        } else {
            start_of[c] = first_free; // exists: multi-vertex component, check above
        }
    }

    std::vector<char> used(m + phantom_count, 0);
    std::vector<size_t> cursor(n, 0);
    std::vector<Trail> opens, closeds;
    std::vector<char> edge_seen(m, 0);
    for (int c = 0; c < ncomp; c++) {
        if (start_of[c] == -1) continue;
        // Hierholzer with per-vertex cursors; the popped sequence reversed is
        // an Euler circuit of the augmented component.
        std::vector<std::pair<int, int>> stack, circuit; // (vertex, arriving edge)
        stack.push_back({start_of[c], -1});
        while (!stack.empty()) {
            int v = stack.back().first;
            bool advanced = false;
            while (cursor[v] < adj[v].size()) {
                auto [w, id] = adj[v][cursor[v]++];
                if (used[id]) continue;
                used[id] = 1;
                stack.push_back({w, id});
                advanced = true;
                break;
            }
            if (!advanced) {
                circuit.push_back(stack.back());
                stack.pop_back();
            }
        }
        std::reverse(circuit.begin(), circuit.end());
        std::vector<int> cverts, cedges;
        for (auto [v, e] : circuit) {
            cverts.push_back(v);
            if (e != -1) cedges.push_back(e);
        }
        int k = (int)cedges.size();
        require(k >= 1 && cverts.front() == cverts.back(),
                "trail decomposition: walk is not a circuit");

        if (!has_phantom[c]) {
            for (int e : cedges) edge_seen[e] = 1;
            closeds.push_back({std::move(cverts), std::move(cedges), true});
            continue;
        }
        int first_ph = -1;
        for (int j = 0; j < k; j++)
            if (cedges[j] >= m) {
                first_ph = j;
                break;
            }
        require(first_ph != -1, "trail decomposition: phantom component lost its phantoms");
        int r = first_ph + 1; // rotate so the circuit ends with that phantom
        std::vector<int> seg_verts{cverts[r % k]};
        std::vector<int> seg_edges;
        for (int j = 0; j < k; j++) {
            int e = cedges[(r + j) % k];
            int nxt = cverts[(r + j + 1) % k];
            if (e < m) {
                seg_edges.push_back(e);
                edge_seen[e] = 1;
                seg_verts.push_back(nxt);
            } else {
                require(!seg_edges.empty(), "trail decomposition: empty segment");
                if (seg_verts.back() < seg_verts.front()) {
                    std::reverse(seg_verts.begin(), seg_verts.end());
                    std::reverse(seg_edges.begin(), seg_edges.end());
                }
                opens.push_back({std::move(seg_verts), std::move(seg_edges), false});
                seg_verts = {nxt};
                seg_edges.clear();
            }
        }
        require(seg_edges.empty(), "trail decomposition: dangling segment");
    }

    std::sort(opens.begin(), opens.end(), [](const Trail& a, const Trail& b) {
        return a.vertices.front() < b.vertices.front();
    });
    std::sort(closeds.begin(), closeds.end(), [](const Trail& a, const Trail& b) {
        return *std::min_element(a.vertices.begin(), a.vertices.end()) <
               *std::min_element(b.vertices.begin(), b.vertices.end());
    });
    std::vector<Trail> trails = std::move(opens);
    for (auto& t : closeds) trails.push_back(std::move(t));

    long long covered = 0;
    for (auto& t : trails) covered += (long long)t.edge_ids.size();
    bool all = covered == m;
    for (int e = 0; e < m && all; e++) all = edge_seen[e];
    require(all, "trail decomposition: edges not covered exactly once");
    return trails;
}

struct ConsecutiveLabeling {
    Orientation orientation;
    Labeling labeling;
    std::vector<long long> sums;
};

// Label the edges p+1..p+m along the concatenated trail traversal and orient
// every edge against it (edge walked u -> v becomes the arc v -> u). Interior
// passes then contribute +1 each, so a vertex of the exact set, which is
// never a trail endpoint or a closed-trail start, lands on exactly d(v)/2;
// all other vertices stay within floor((d-1)/2) +- (p+m).
inline ConsecutiveLabeling consecutive_labeling(const Graph& g, long long p,
                                                const std::vector<int>& exact_set) {
    if (p < 0) throw precondition_error("consecutive_labeling: negative label offset");
    std::vector<char> exact(g.vertex_count, 0);
    for (int v : exact_set) {
        if (v < 0 || v >= g.vertex_count)
            throw structural_error("exact vertex " + std::to_string(v) + " is out of range");
        exact[v] = 1;
    }
    for (int v : exact_set) {
        if (g.degree(v) % 2 != 0)
            throw structural_error("exact vertex " + std::to_string(v) + " has odd degree");
        bool outside = false;
        for (auto [w, id] : g.adjacency[v]) outside = outside || !exact[w];
        if (!outside)
            throw structural_error("exact vertex " + std::to_string(v) +
                                   " has no neighbor outside the exact set");
    }
    long long m = g.edge_count();
    ConsecutiveLabeling out;
    out.orientation.tail_is_first.assign((size_t)m, 0);
    out.labeling.labels.assign((size_t)m, 0);
    out.sums.assign(g.vertex_count, 0);
    if (m == 0) return out; // nothing to label

    long long next = p + 1;
    for (const auto& t : trail_decomposition(g, exact_set)) {
        for (size_t i = 0; i < t.edge_ids.size(); i++) {
            int e = t.edge_ids[i];
            int to = t.vertices[i + 1];
            out.orientation.tail_is_first[e] = (g.edges[e].first == to) ? 1 : 0;
            out.labeling.labels[e] = next++;
        }
    }
    require(next == p + m + 1, "consecutive labeling: label count drifted");
    out.labeling.declared_set.reserve((size_t)m);
    for (long long v = p + 1; v <= p + m; v++) out.labeling.declared_set.push_back(v);
    out.sums = oriented_vertex_sums(g, out.orientation, out.labeling);
    for (int v = 0; v < g.vertex_count; v++) {
        long long d = g.degree(v);
        long long mid = floordiv(d - 1, 2);
        require(out.sums[v] >= mid - (p + m) && out.sums[v] <= mid + (p + m),
                "consecutive labeling: sum bound violated");
        if (exact[v])
            require(out.sums[v] == d / 2, "consecutive labeling: exact sum violated");
    }
    return out;
}

struct TevenLabeling {
    Orientation orientation;
    Labeling labeling;
    long long delta_m = 0;
    std::vector<long long> sums;
};

// Bipartite labeling with every T-degree even. Labels are
// {p+1..p+m-1} + {delta_m}, delta_m = p+m (m = 0 mod 4) or p+m+1 (m = 2 mod
// 4); every y in T gets s(y) = -d(y) exactly, every x in S stays within
// floor((d-1)/2) +- delta_m.
//
// Trails alternate S,T,...,S, so edges come in pairs (e, f) around a common
// T-vertex; pair k (globally, across the concatenation) is labeled
// p+path(k) on e and p+path(k)+2 on f, path(k) = 2k-1 for odd k and 2k-2 for
// even k, both arcs oriented along the traversal: y collects -2 per visit.
// An open trail whose first pair is k must satisfy
//     path(k) <= delta' - d(start) + 1,      delta' = delta_m - p,
// or the start vertex could undershoot its lower bound; placing trails into
// the concatenation back to front, any unplaced trail with min endpoint
// degree d_i <= m_R + 2 sz_i (m_R = edges already placed or closed, sz_i =
// the trail's pair count) is safe in the last free slot, and such a trail
// always exists: endpoints of distinct open trails are distinct S-vertices,
// so if every unplaced trail overshot, summing the r >= 2 inequalities would
// force the unplaced trails to hold more than m/2 pairs.
inline TevenLabeling teven_labeling(const Graph& g, const std::vector<int>& S,
                                    const std::vector<int>& T, long long p) {
    if (p < 0) throw precondition_error("teven_labeling: negative label offset");
    int n = g.vertex_count;
    std::vector<char> in_s(n, 0), in_t(n, 0);
    for (int v : S) {
        if (v < 0 || v >= n) throw structural_error("S vertex out of range");
        in_s[v] = 1;
    }
    for (int v : T) {
        if (v < 0 || v >= n) throw structural_error("T vertex out of range");
        if (in_s[v]) throw structural_error("vertex " + std::to_string(v) + " in both sides");
        in_t[v] = 1;
    }
    for (auto [u, v] : g.edges)
        if (!((in_s[u] && in_t[v]) || (in_t[u] && in_s[v])))
            throw structural_error("edge " + std::to_string(u) + "-" + std::to_string(v) +
                                   " does not cross the (S, T) split");
    for (int y : T)
        if (g.degree(y) % 2 != 0)
            throw structural_error("vertex " + std::to_string(y) + " in T has odd degree");
    long long m = g.edge_count();
    if (m < 1) throw structural_error("teven_labeling: graph has no edges");
    require(m % 2 == 0, "teven labeling: odd edge count despite even T-degrees");

    long long dprime = (m % 4 == 0) ? m : m + 1;
    long long delta_m = p + dprime;

    auto trails = trail_decomposition(g, T);
    std::vector<Trail*> opens, closeds;
    for (auto& t : trails) (t.closed ? closeds : opens).push_back(&t);
    for (Trail* t : opens) {
        require(t->edge_ids.size() % 2 == 0 && in_s[t->vertices.front()] &&
                    in_s[t->vertices.back()],
                "teven labeling: open trail does not run S to S");
    }

    // back-to-front greedy placement of the open trails
    size_t r = opens.size();
    std::vector<Trail*> slot(r, nullptr);
    std::vector<char> taken(r, 0);
    long long unplaced_pairs = 0;
    for (Trail* t : opens) unplaced_pairs += (long long)t->edge_ids.size() / 2;
    for (size_t s = r; s-- > 0;) {
        long long m_rest = m - 2 * unplaced_pairs;
        int best = -1, best_deg = 0, best_start = 0;
        for (size_t i = 0; i < r; i++) {
            if (taken[i]) continue;
            Trail* t = opens[i];
            int a = t->vertices.front(), b = t->vertices.back();
            int start = a, deg = g.degree(a);
            if (std::pair(g.degree(b), b) < std::pair(deg, start)) {
                start = b;
                deg = g.degree(b);
            }
            long long sz = (long long)t->edge_ids.size() / 2;
            if (deg > m_rest + 2 * sz) continue;
            if (best == -1 || std::pair(deg, start) < std::pair(best_deg, best_start)) {
                best = (int)i;
                best_deg = deg;
                best_start = start;
            }
        }
        require(best != -1, "teven labeling: no placeable trail");
        Trail* t = opens[best];
        taken[best] = 1;
        if (t->vertices.front() != best_start) {
            std::reverse(t->vertices.begin(), t->vertices.end());
            std::reverse(t->edge_ids.begin(), t->edge_ids.end());
        }
        slot[s] = t;
        unplaced_pairs -= (long long)t->edge_ids.size() / 2;
    }
    for (Trail* t : closeds) slot.push_back(t);

    auto path_of = [](long long k) { return (k % 2 == 1) ? 2 * k - 1 : 2 * k - 2; };
    TevenLabeling out;
    out.delta_m = delta_m;
    out.orientation.tail_is_first.assign((size_t)m, 0);
    out.labeling.labels.assign((size_t)m, 0);
    long long k = 0; // global pair index
    for (Trail* t : slot) {
        size_t pairs = t->edge_ids.size() / 2;
        require(t->edge_ids.size() % 2 == 0, "teven labeling: odd trail length");
        if (!t->closed) {
            long long first = path_of(k + 1);
            require(first <= dprime - g.degree(t->vertices.front()) + 1,
                    "teven labeling: start label exceeds its budget");
        }
        for (size_t j = 0; j < pairs; j++) {
            k++;
            int e = t->edge_ids[2 * j], f = t->edge_ids[2 * j + 1];
            int x = t->vertices[2 * j], y = t->vertices[2 * j + 1];
            require(in_s[x] && in_t[y], "teven labeling: trail does not alternate");
            out.orientation.tail_is_first[e] = (g.edges[e].first == x) ? 1 : 0;
            out.orientation.tail_is_first[f] = (g.edges[f].first == y) ? 1 : 0;
            out.labeling.labels[e] = p + path_of(k);
            out.labeling.labels[f] = p + path_of(k) + 2;
        }
    }
    require(k == m / 2, "teven labeling: pair count drifted");

    out.labeling.declared_set.reserve((size_t)m);
    for (long long v = p + 1; v <= p + m - 1; v++) out.labeling.declared_set.push_back(v);
    out.labeling.declared_set.push_back(delta_m);
    std::vector<long long> sorted = out.labeling.labels;
    std::sort(sorted.begin(), sorted.end());
    require(sorted == out.labeling.declared_set, "teven labeling: wrong label set");

    out.sums = oriented_vertex_sums(g, out.orientation, out.labeling);
    for (int y : T)
        require(out.sums[y] == -(long long)g.degree(y), "teven labeling: T sum not -d(y)");
    for (int x : S) {
        long long mid = floordiv((long long)g.degree(x) - 1, 2);
        require(out.sums[x] >= mid - delta_m && out.sums[x] <= mid + delta_m,
                "teven labeling: S sum bound violated");
    }
    return out;
}

} // namespace antimagic
