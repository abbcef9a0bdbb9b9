#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "antimagic/graph.hpp"

namespace antimagic {

// All randomness in the project flows through this generator from an explicit
// 64-bit seed. std::random distributions are unspecified across platforms and
// would break the byte-identical-certificate contract.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, n), unbiased via rejection
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw internal_error("below(0)");
        std::uint64_t limit = ~0ULL - (~0ULL % n + 1) % n; // last multiple of n - 1
        std::uint64_t x;
        do {
            x = next();
        } while (x > limit);
        return x % n;
    }

    long long range(long long lo, long long hi) { // inclusive
        return lo + (long long)below((std::uint64_t)(hi - lo + 1));
    }
};

template <class T>
void shuffle(std::vector<T>& v, SplitMix64& rng) {
    for (size_t i = v.size(); i > 1; i--) std::swap(v[i - 1], v[rng.below(i)]);
}

inline Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; u++)
        for (int v = u + 1; v < n; v++) e.push_back({u, v});
    return Graph::from_edges(n, std::move(e));
}

inline Graph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < a; u++)
        for (int v = 0; v < b; v++) e.push_back({u, a + v});
    return Graph::from_edges(a + b, std::move(e));
}

inline Graph star(int t) { return complete_bipartite(1, t); }

inline Graph hypercube(int k) {
    if (k < 0 || k > 20) throw precondition_error("hypercube dimension out of range");
    int n = 1 << k;
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; u++)
        for (int bit = 0; bit < k; bit++)
            if (!(u & (1 << bit))) e.push_back({u, u | (1 << bit)});
    return Graph::from_edges(n, std::move(e));
}

// Relabel vertices by a random permutation; exercises id-dependent tie-breaks.
inline Graph permute_vertices(const Graph& g, SplitMix64& rng) {
    std::vector<int> perm(g.vertex_count);
    std::iota(perm.begin(), perm.end(), 0);
    shuffle(perm, rng);
    std::vector<std::pair<int, int>> e;
    e.reserve(g.edges.size());
    for (auto [u, v] : g.edges) e.push_back({perm[u], perm[v]});
    return Graph::from_edges(g.vertex_count, std::move(e));
}

namespace detail {

// Realize exact bipartite degree sequences. Greedy Gale-Ryser first: serve Y
// vertices by descending degree, wiring each to the X vertices with the most
// remaining demand (so any realizable sequence succeeds, dense ones
// included), then mix with degree-preserving 2-switches for randomness.
inline bool pair_bipartite_stubs(const std::vector<int>& xdeg, const std::vector<int>& ydeg,
                                 int x_base, int y_base, SplitMix64& rng,
                                 std::vector<std::pair<int, int>>& out) {
    long long xs = 0, ys = 0;
    for (int d : xdeg) xs += d;
    for (int d : ydeg) ys += d;
    if (xs != ys) throw internal_error("stub count mismatch");

    std::vector<int> need = xdeg;
    std::vector<int> yorder(ydeg.size());
    for (int j = 0; j < (int)ydeg.size(); j++) yorder[j] = j;
    std::stable_sort(yorder.begin(), yorder.end(),
                     [&](int a, int b) { return ydeg[a] > ydeg[b]; });

    out.clear();
    std::vector<int> xorder(xdeg.size());
    for (int j : yorder) {
        for (int i = 0; i < (int)xdeg.size(); i++) xorder[i] = i;
        std::stable_sort(xorder.begin(), xorder.end(),
                         [&](int a, int b) { return need[a] > need[b]; });
        if (ydeg[j] > (int)xorder.size()) return false;
        for (int t = 0; t < ydeg[j]; t++) {
            if (need[xorder[t]] == 0) return false;
            need[xorder[t]]--;
            out.push_back({x_base + xorder[t], y_base + j});
        }
    }

    std::set<std::pair<int, int>> present(out.begin(), out.end());
    std::uint64_t m = out.size();
    for (std::uint64_t attempt = 0; m >= 2 && attempt < 10 * m; attempt++) {
        std::uint64_t a = rng.below(m), b = rng.below(m);
        auto [x1, y1] = out[a];
        auto [x2, y2] = out[b];
        if (x1 == x2 || y1 == y2) continue;
        if (present.count({x1, y2}) || present.count({x2, y1})) continue;
        present.erase({x1, y1});
        present.erase({x2, y2});
        present.insert({x1, y2});
        present.insert({x2, y1});
        out[a] = {x1, y2};
        out[b] = {x2, y1};
    }
    return true;
}

} // namespace detail

// Shape knobs for the bipartite family: X-side vertices all get degree >= 3;
// the Y side mixes "internal" vertices (degree drawn from internal_choices,
// all >= 3) with degree-1 leaves. Leaves steer the bipartite construction
// toward its sparse cases, internal degree parity steers block shapes.
struct BipartiteShape {
    int nx = 4;
    int ny_internal = 4;
    int leaves = 0;
    std::vector<int> internal_choices = {3, 4, 5};
};

inline Graph random_bipartite_shaped(const BipartiteShape& shape, std::uint64_t seed) {
    if (shape.nx < 1 || shape.ny_internal + shape.leaves < 1)
        throw precondition_error("bipartite shape needs vertices on both sides");
    for (int d : shape.internal_choices)
        if (d < 3 || d > shape.nx)
            throw precondition_error("internal degree choice " + std::to_string(d) +
                                     " impossible for nx=" + std::to_string(shape.nx));
    SplitMix64 rng(seed);
    int ny = shape.ny_internal + shape.leaves;
    for (int resample = 0; resample < 50; resample++) {
        std::vector<int> ydeg(ny, 1);
        long long total = shape.leaves;
        for (int j = 0; j < shape.ny_internal; j++) {
            ydeg[j] = shape.internal_choices[rng.below(shape.internal_choices.size())];
            total += ydeg[j];
        }
        if (total < 3LL * shape.nx) continue; // X side cannot reach degree 3
        // spread the total over X as evenly as possible: degrees base or base+1
        long long base = total / shape.nx, extra = total % shape.nx;
        std::vector<int> xdeg(shape.nx, (int)base);
        std::vector<int> bump(shape.nx, 0);
        for (int i = 0; i < (int)extra; i++) bump[i] = 1;
        shuffle(bump, rng);
        bool fits = true;
        for (int i = 0; i < shape.nx; i++) {
            xdeg[i] += bump[i];
            if (xdeg[i] > ny) fits = false; // simple graph cannot host this degree
        }
        if (!fits) continue;
        std::vector<std::pair<int, int>> edges;
        if (!detail::pair_bipartite_stubs(xdeg, ydeg, 0, shape.nx, rng, edges)) continue;
        Graph g = Graph::from_edges(shape.nx + ny, std::move(edges));
        for (int v = 0; v < g.vertex_count; v++)
            require(g.degree(v) != 0 && g.degree(v) != 2, "generator degree postcondition");
        return g;
    }
    throw structural_error("could not realize bipartite shape after 50 resamples");
}

// Public family: bipartite with no degree-0/2 vertex. Y-degrees are drawn
// from {1} union [max(3, d_min), d_max]; d_min <= 1 admits leaves.
inline Graph random_bipartite_no_deg02(int nx, int ny, int d_min, std::uint64_t seed) {
    SplitMix64 pre(seed ^ 0xb1a5edULL);
    int lo = std::max(3, d_min), hi = std::min(nx, lo + 3);
    if (lo > nx)
        throw precondition_error("d_min exceeds the opposite side size");
    BipartiteShape shape;
    shape.nx = nx;
    shape.internal_choices.clear();
    for (int d = lo; d <= hi; d++) shape.internal_choices.push_back(d);
    if (d_min <= 1) {
        shape.leaves = (int)pre.below((std::uint64_t)ny / 2 + 1);
        shape.ny_internal = ny - shape.leaves;
    } else {
        shape.leaves = 0;
        shape.ny_internal = ny;
    }
    return random_bipartite_shaped(shape, seed);
}

// Degrees d everywhere, except one vertex gets d+1 when n*d is odd.
// Havel-Hakimi realization (serve the highest-demand vertex by wiring it to
// the next-highest-demand vertices; succeeds for every graphical sequence,
// dense ones included) followed by degree-preserving 2-switches.
inline Graph near_regular(int n, int d, std::uint64_t seed) {
    if (n < 2 || d < 1 || d >= n) throw precondition_error("near_regular out of range");
    SplitMix64 rng(seed);
    std::vector<int> deg(n, d);
    if ((long long)n * d % 2 != 0) deg[0] = d + 1; // n, d both odd, so d + 1 <= n - 1

    std::vector<std::pair<int, int>> edges;
    std::vector<int> order(n);
    while (true) {
        int v = 0;
        for (int u = 1; u < n; u++)
            if (deg[u] > deg[v]) v = u;
        if (deg[v] == 0) break;
        int want = deg[v];
        deg[v] = 0;
        for (int u = 0; u < n; u++) order[u] = u;
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return deg[a] > deg[b]; });
        for (int t = 0; t < want; t++) {
            require(t < n && deg[order[t]] > 0, "near_regular: sequence not graphical");
            deg[order[t]]--;
            edges.push_back({v, order[t]});
        }
    }

    std::set<std::pair<int, int>> present;
    for (auto& e : edges) present.insert(std::minmax(e.first, e.second));
    std::uint64_t m = edges.size();
    for (std::uint64_t attempt = 0; m >= 2 && attempt < 10 * m; attempt++) {
        std::uint64_t i = rng.below(m), j = rng.below(m);
        auto [a, b] = edges[i];
        auto [c, e] = edges[j];
        if (a == c || a == e || b == c || b == e) continue;
        if (present.count(std::minmax(a, e)) || present.count(std::minmax(c, b))) continue;
        present.erase(std::minmax(a, b));
        present.erase(std::minmax(c, e));
        present.insert(std::minmax(a, e));
        present.insert(std::minmax(c, b));
        edges[i] = {a, e};
        edges[j] = {c, b};
    }
    return Graph::from_edges(n, std::move(edges));
}

// Stars whose centers are joined by a random recursive tree; every center
// keeps >= 3 leaves so no degree ever lands on 0 or 2. Trees are bipartite.
inline Graph tree_of_stars(int stars, int min_leaves, int max_leaves, std::uint64_t seed) {
    if (stars < 1 || min_leaves < 3 || max_leaves < min_leaves)
        throw precondition_error("tree_of_stars needs stars >= 1 and leaves >= 3");
    SplitMix64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int c = 1; c < stars; c++) edges.push_back({(int)rng.below((std::uint64_t)c), c});
    int next_id = stars;
    for (int c = 0; c < stars; c++) {
        int leaves = (int)rng.range(min_leaves, max_leaves);
        for (int k = 0; k < leaves; k++) edges.push_back({c, next_id++});
    }
    return Graph::from_edges(next_id, std::move(edges));
}

} // namespace antimagic
