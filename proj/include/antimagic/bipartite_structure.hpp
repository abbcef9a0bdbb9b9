#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <string>
#include <vector>

#include "antimagic/graph.hpp"

namespace antimagic {

struct Matching {
    std::vector<int> edge_ids;  // ascending
    std::vector<int> mate;      // per vertex: matched partner, -1 if unsaturated
    std::vector<int> mate_edge; // per vertex: the matched edge id, -1 if unsaturated

    int size() const { return (int)edge_ids.size(); }
};

// Hopcroft-Karp. Deterministic: adjacency order drives both the layering and
// the augmenting search, so identical inputs give identical matchings.
inline Matching maximum_matching(const Graph& g, const std::vector<int>& X,
                                 const std::vector<int>& Y) {
    int n = g.vertex_count;
    std::vector<int> side(n, -1);
    for (int v : X) {
        if (v < 0 || v >= n || side[v] != -1)
            throw structural_error("bipartition side X is not a set of fresh vertices");
        side[v] = 0;
    }
    for (int v : Y) {
        if (v < 0 || v >= n || side[v] != -1)
            throw structural_error("bipartition side Y is not a set of fresh vertices");
        side[v] = 1;
    }
    for (int v = 0; v < n; v++)
        if (side[v] == -1)
            throw structural_error("vertex " + std::to_string(v) + " missing from the bipartition");
    for (auto [u, v] : g.edges)
        if (side[u] == side[v])
            throw structural_error("edge " + std::to_string(u) + "-" + std::to_string(v) +
                                   " lies inside one bipartition side");

    std::vector<int> mate(n, -1), mate_edge(n, -1), dist(n, -1);
    // dist is defined on X-side vertices; -1 doubles as "not in this phase".
    auto bfs = [&]() -> bool {
        std::deque<int> queue;
        for (int x : X) {
            if (mate[x] == -1) {
                dist[x] = 0;
                queue.push_back(x);
            } else {
                dist[x] = -1;
            }
        }
        bool free_y_reachable = false;
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (auto [y, e] : g.adjacency[x]) {
                int z = mate[y];
                if (z == -1) free_y_reachable = true;
                else if (dist[z] == -1) {
                    dist[z] = dist[x] + 1;
                    queue.push_back(z);
                }
            }
        }
        return free_y_reachable;
    };

    std::vector<size_t> cur(n, 0);
    struct Frame {
        int x, y = -1, e = -1;
    };
    auto augment = [&](int x0) -> bool {
        std::vector<Frame> path{{x0}};
        while (!path.empty()) {
            int x = path.back().x;
            bool advanced = false;
            while (cur[x] < g.adjacency[x].size()) {
                auto [y, e] = g.adjacency[x][cur[x]++];
                int z = mate[y];
                if (z != -1 && dist[z] != dist[x] + 1) continue;
                path.back().y = y;
                path.back().e = e;
                if (z == -1) {
                    for (auto& f : path) {
                        mate[f.x] = f.y;
                        mate[f.y] = f.x;
                        mate_edge[f.x] = f.e;
                        mate_edge[f.y] = f.e;
                    }
                    return true;
                }
                path.push_back({z});
                advanced = true;
                break;
            }
            if (!advanced) {
                dist[x] = -1; // dead for this phase
                path.pop_back();
            }
        }
        return false;
    };

    while (bfs()) {
        std::fill(cur.begin(), cur.end(), 0);
        for (int x : X)
            if (mate[x] == -1) augment(x);
    }
    require(!bfs(), "maximum matching still admits an augmenting path");

    Matching m;
    m.mate = std::move(mate);
    m.mate_edge = std::move(mate_edge);
    for (int e = 0; e < g.edge_count(); e++) {
        auto [u, v] = g.edges[e];
        if (m.mate_edge[u] == e && m.mate_edge[v] == e) m.edge_ids.push_back(e);
    }
    return m;
}

// The structural split V = S + T: T independent, and the matching saturates
// S entirely with edges into T. layers and d0 expose the alternating-layer
// construction below for property checks: layers[i] is the i-th matched
// X-side layer reached from the unsaturated X-side vertices, d0 the
// unmatched Y-side vertices; no edge ever joins a layer to d0.
struct STPartition {
    std::vector<int> S, T; // ascending; S + T = V
    Matching matching;
    std::vector<std::vector<int>> layers;
    std::vector<int> d0;
};

// Per component, let X be the smaller bipartition side (ties: the side of the
// lowest vertex id) and take a maximum matching. If X is saturated, (S, T) =
// (X, Y). Otherwise grow from the unsaturated X0: B_0 = N(X0), A_i =
// M(B_i), B_i = N(A_{i-1}) minus earlier B's, until no new B-vertices; every
// B-vertex is matched (otherwise the matching would admit an augmenting
// path). Then S = B + X_r and T = A + Y_r + X0 + Y0, where X_r, Y_r are the
// matched vertices outside the layers. All components are processed in one
// pass since layers never cross components.
inline STPartition st_partition(const Graph& g) {
    auto bp = bipartition(g); // throws NotBipartiteError on odd cycles
    int n = g.vertex_count;

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
    std::vector<int> count0(ncomp, 0), count1(ncomp, 0);
    for (int v = 0; v < n; v++) (bp.side[v] == 0 ? count0 : count1)[comp[v]]++;
    // side 0 holds each component's smallest id, so ties resolve to side 0
    std::vector<int> xside(ncomp);
    for (int c = 0; c < ncomp; c++) xside[c] = (count1[c] < count0[c]) ? 1 : 0;
    std::vector<int> X, Y;
    std::vector<char> in_x(n, 0);
    for (int v = 0; v < n; v++) {
        if (bp.side[v] == xside[comp[v]]) {
            X.push_back(v);
            in_x[v] = 1;
        } else {
            Y.push_back(v);
        }
    }

    STPartition st;
    st.matching = maximum_matching(g, X, Y);

    std::vector<char> in_b(n, 0), in_a(n, 0);
    std::vector<int> frontier;
    for (int x : X)
        if (st.matching.mate[x] == -1) frontier.push_back(x);
    while (!frontier.empty()) {
        std::vector<int> layer_b;
        for (int v : frontier)
            for (auto [w, id] : g.adjacency[v])
                if (!in_b[w]) {
                    in_b[w] = 1;
                    layer_b.push_back(w);
                }
        if (layer_b.empty()) break;
        std::sort(layer_b.begin(), layer_b.end());
        std::vector<int> layer_a;
        for (int b : layer_b) {
            int z = st.matching.mate[b];
            require(z != -1, "structural split: unmatched neighbor implies an augmenting path");
            require(!in_a[z], "structural split: matched partner repeated across layers");
            in_a[z] = 1;
            layer_a.push_back(z);
        }
        std::sort(layer_a.begin(), layer_a.end());
        st.layers.push_back(layer_a);
        frontier = st.layers.back();
    }
    for (int y : Y)
        if (st.matching.mate[y] == -1) st.d0.push_back(y);

    std::vector<char> in_s(n, 0);
    for (int v = 0; v < n; v++) {
        bool s = in_b[v] || (in_x[v] && st.matching.mate[v] != -1 && !in_a[v]);
        in_s[v] = s ? 1 : 0;
        (s ? st.S : st.T).push_back(v);
    }

    // always-on invariant checks
    for (auto [u, v] : g.edges)
        require(in_s[u] || in_s[v], "structural split: T is not independent");
    long long crossing = 0;
    for (int e : st.matching.edge_ids) {
        auto [u, v] = g.edges[e];
        require(in_s[u] != in_s[v], "structural split: matching edge fails to cross");
        crossing++;
    }
    for (int s : st.S)
        require(st.matching.mate[s] != -1, "structural split: S vertex unsaturated");
    require(crossing == (long long)st.S.size(), "structural split: |M| != |S|");
    require(st.S.size() <= st.T.size(), "structural split: S larger than T");
    return st;
}

// One edge of h per T-vertex: the matched edge where the matching reaches the
// vertex, else the h-edge toward the smallest S-endpoint. Returned edge ids
// are h's, aligned with st.T. The result need not be a matching: chosen
// edges may share S-endpoints, but each T-vertex meets exactly one.
inline std::vector<int> extend_to_mstar(const Graph& h, const STPartition& st) {
    require((int)st.matching.mate.size() == h.vertex_count,
            "matching extension: vertex universe mismatch");
    std::map<std::pair<int, int>, int> edge_of;
    for (int e = 0; e < h.edge_count(); e++) {
        std::pair<int, int> key = std::minmax(h.edges[e].first, h.edges[e].second);
        edge_of[key] = e;
    }
    std::vector<char> in_s(h.vertex_count, 0);
    for (int s : st.S) in_s[s] = 1;
    std::vector<int> chosen;
    chosen.reserve(st.T.size());
    for (int y : st.T) {
        int partner = st.matching.mate[y];
        if (partner != -1) {
            std::pair<int, int> key = std::minmax(y, partner);
            auto it = edge_of.find(key);
            require(it != edge_of.end(), "matching extension: matched edge missing from host");
            chosen.push_back(it->second);
            continue;
        }
        int best_edge = -1, best_s = -1;
        for (auto [w, e] : h.adjacency[y])
            if (in_s[w] && (best_s == -1 || w < best_s)) {
                best_s = w;
                best_edge = e;
            }
        if (best_edge == -1)
            throw structural_error("vertex " + std::to_string(y) +
                                   " has no edge into S to cover it");
        chosen.push_back(best_edge);
    }
    return chosen;
}

} // namespace antimagic
