#pragma once

#include <string>
#include <vector>

#include "antimagic/graph.hpp"

namespace antimagic {

// Partitions of an initial integer segment into additive triples, used by the
// residue partition to mint odd-cardinality zero-sum units.
//
//   skolem_triple_system(q):  [1, 3q] into q triples {a, b, a+b}
//                             (exists iff q = 0, 1 mod 4)
//   hooked_skolem_triple_system(q): [1, 3q+1] minus {3q} likewise
//                             (exists iff q = 2, 3 mod 4)
//   heffter_triple_system(q): [1, 3q] into q triples, exactly one satisfying
//                             a+b+c = 6q+1, the rest a+b = c (q = 2, 3 mod 4)
//
// Construction is a doubling recursion: pair the odd values of the footprint
// so that each pair also consumes one even value (a "difference" pair (o,o')
// consumes o'-o, a "sum" pair consumes o+o'); the evens left over are twice a
// q/4-scale footprint, solved recursively and scaled by 2. With odds
// reindexed o = 2u-1, the pairing must consume a prescribed window of even
// halves; emit_window_pairs below produces those pairings in closed form.
// Every returned system is validated before use; O(q) overall.

struct ValueTriple {
    long long a, b, c; // a < b < c
};

namespace triple_detail {

struct WindowPair {
    long long u, v;   // 1 <= u < v <= 2B
    bool sum_pair;    // consumes u+v-1-B, else v-u-B
};

// Pair [1, 2B] into B pairs whose consumed values r (diff pair: r = v-u-B,
// sum pair: r = u+v-1-B) exactly cover the window [c, B+c-1], or with `hook`
// the set {c-1} union [c+1, B+c-1]. The window offset c is fixed per family:
// window 1: c=1, window 2: c=0, window 3: c=-1, window 4: c=2.
// Emitters were found by exhaustive search on small B and verified en masse;
// each branch covers one residue of B mod 4 as needed by the recursion.
inline bool emit_window_pairs(int window, bool hook, long long B,
                              std::vector<WindowPair>& out) {
    out.clear();
    auto D = [&](long long u, long long v) { out.push_back({u, v, false}); };
    auto S = [&](long long u, long long v) { out.push_back({u, v, true}); };
    long long b4 = B % 4;
    if (window == 1 && !hook) {
        long long ch = (B + 1) / 2, p = (B % 2 == 0) ? 1 : 2;
        for (long long k = 0; k < ch; k++) S(B - 2 * k, B + 1 + k);
        for (long long k = 0; k < B / 2; k++) D(p + 2 * k, B + ch + 1 + k);
        return B >= 3;
    }
    if (window == 2 && !hook) {
        long long ch = B / 2, p = (B % 2 == 0) ? 2 : 1;
        for (long long k = 0; k < ch; k++) S(B - 1 - 2 * k, B + 1 + k);
        for (long long k = 0; k < B - ch; k++) D(p + 2 * k, B + ch + 1 + k);
        return B >= 4;
    }
    if (window == 3 && !hook) {
        if (b4 == 2) {
            for (long long k = 0; k < B / 2; k++) D(3 + 2 * k, 3 * B / 2 + 1 + k);
            S(1, 3 * B / 2 - 1);
            for (long long k = 0; k < (B - 2) / 4; k++) S(B - 4 - 4 * k, B + 3 + 2 * k);
            for (long long k = 0; k < (B - 2) / 4; k++) S(B - 2 - 4 * k, B + 2 * k);
            return B >= 14;
        }
        if (b4 == 1) {
            D(1, (3 * B + 1) / 2);
            D(3, (3 * B + 3) / 2);
            D(2, (3 * B - 1) / 2);
            for (long long k = 0; k < (B - 3) / 2; k++) D(6 + 2 * k, (3 * B + 5) / 2 + k);
            for (long long k = 0; k < (B - 5) / 4; k++) S(B - 4 - 4 * k, B + 3 + 2 * k);
            for (long long k = 0; k < (B - 5) / 4; k++) S(B - 2 - 4 * k, B + 2 * k);
            S(4, (3 * B - 5) / 2);
            return B >= 5;
        }
        return false;
    }
    if (window == 4 && !hook) {
        if (b4 == 2) {
            for (long long k = 0; k < (B - 2) / 4; k++) S(B - 1 - 4 * k, B + 3 + 2 * k);
            S(B, B + 1);
            for (long long k = 0; k < (B - 6) / 4; k++) S(B - 3 - 4 * k, B + 2 + 2 * k);
            S(4, 3 * B / 2 - 1);
            D(1, 3 * B / 2 + 2);
            D(3, 3 * B / 2 + 3);
            D(2, 3 * B / 2 + 1);
            for (long long k = 0; k < B / 2 - 3; k++) D(6 + 2 * k, 3 * B / 2 + 4 + k);
            return B >= 14;
        }
        if (b4 == 3) {
            for (long long k = 0; k < (B + 1) / 4; k++) S(B - 1 - 4 * k, B + 3 + 2 * k);
            S(B, B + 1);
            for (long long k = 0; k < (B - 3) / 4; k++) S(B - 3 - 4 * k, B + 2 + 2 * k);
            S(1, (3 * B + 1) / 2);
            for (long long k = 0; k < (B - 3) / 2; k++) D(3 + 2 * k, (3 * B + 5) / 2 + k);
            return B >= 11;
        }
        return false;
    }
    if (window == 1 && hook) {
        if (b4 == 2) {
            S(B - 1, B + 2);
            for (long long k = 0; k < (B - 2) / 4; k++) S(B - 4 - 4 * k, B + 4 + 2 * k);
            for (long long k = 0; k < (B - 2) / 4; k++) S(B - 2 - 4 * k, B + 1 + 2 * k);
            S(1, 3 * B / 2);
            for (long long k = 0; k < B / 2 - 2; k++) D(3 + 2 * k, 3 * B / 2 + 2 + k);
            D(B, 2 * B);
            return B >= 6;
        }
        if (b4 == 1) {
            S(B - 1, B + 2);
            for (long long k = 0; k < (B - 5) / 4; k++) S(B - 4 - 4 * k, B + 4 + 2 * k);
            for (long long k = 0; k < (B - 5) / 4; k++) S(B - 2 - 4 * k, B + 1 + 2 * k);
            S(4, (3 * B - 3) / 2);
            D(1, (3 * B + 3) / 2);
            D(3, (3 * B + 5) / 2);
            D(2, (3 * B + 1) / 2);
            for (long long k = 0; k < (B - 7) / 2; k++) D(6 + 2 * k, (3 * B + 7) / 2 + k);
            D(B, 2 * B);
            return B >= 9;
        }
        return false;
    }
    if (window == 2 && hook) {
        if (b4 == 3) {
            for (long long k = 0; k < (B - 3) / 4; k++) S(B - 3 - 4 * k, B + 3 + 2 * k);
            for (long long k = 0; k < (B - 3) / 4; k++) S(B - 1 - 4 * k, B + 2 * k);
            S(1, (3 * B + 1) / 2);
            S(2, (3 * B - 3) / 2);
            for (long long k = 0; k < (B - 3) / 2; k++) D(3 + 2 * k, (3 * B + 3) / 2 + k);
            D(B + 1, 2 * B);
            return B >= 7;
        }
        if (b4 == 2) {
            for (long long k = 0; k < (B - 6) / 4; k++) S(B - 3 - 4 * k, B + 3 + 2 * k);
            for (long long k = 0; k < (B - 6) / 4; k++) S(B - 1 - 4 * k, B + 2 * k);
            S(4, (3 * B - 2) / 2);
            S(5, (3 * B - 6) / 2);
            D(1, 3 * B / 2 + 1);
            D(3, 3 * B / 2 + 2);
            D(2, 3 * B / 2);
            for (long long k = 0; k < B / 2 - 3; k++) D(6 + 2 * k, 3 * B / 2 + 3 + k);
            D(B + 1, 2 * B);
            return B >= 10;
        }
        return false;
    }
    if (window == 3 && hook) {
        if (b4 == 0) {
            for (long long k = 0; k < 3; k++) S(B - 2 - 4 * k, B + 1 + 3 * k);
            for (long long k = 0; k < 2; k++) S(B - 4 - 4 * k, B + 3 * k);
            long long T = (B - 14) / 6;
            for (long long t = 0; t < T; t++) S(4 + 6 * t, 3 * B / 2 - 3 * t);
            for (long long t = 0; t < T; t++) S(6 + 6 * t, 3 * B / 2 - 4 - 3 * t);
            for (long long t = 0; t < T; t++) S(8 + 6 * t, 3 * B / 2 - 5 - 3 * t);
            S(3, 3 * B / 2 - 2);
            D(2, 3 * B / 2 + 1);
            D(1, 3 * B / 2 - 1);
            for (long long k = 0; k < B / 2 - 2; k++) D(5 + 2 * k, 3 * B / 2 + 2 + k);
            D(B + 2, 2 * B);
            return B >= 20;
        }
        if (b4 == 3) {
            long long T = (B - 5) / 6;
            for (long long t = 0; t < T; t++) S(5 + 6 * t, (3 * B - 1) / 2 - 3 * t);
            for (long long t = 0; t < T; t++) S(7 + 6 * t, (3 * B - 9) / 2 - 3 * t);
            for (long long t = 0; t < T; t++) S(9 + 6 * t, (3 * B - 11) / 2 - 3 * t);
            S(3, (3 * B - 3) / 2);
            S(2, (3 * B - 5) / 2);
            D(1, (3 * B + 1) / 2);
            for (long long k = 0; k < (B - 3) / 2; k++) D(4 + 2 * k, (3 * B + 3) / 2 + k);
            D(B + 2, 2 * B);
            return B >= 11;
        }
        return false;
    }
    if (window == 4 && hook) {
        if (b4 == 1) {
            S(B - 2, B + 4);
            S(B, B + 1);
            long long T = (B - 5) / 6;
            for (long long t = 0; t < T; t++) S(4 + 6 * t, (3 * B + 3) / 2 - 3 * t);
            for (long long t = 0; t < T; t++) S(6 + 6 * t, (3 * B - 5) / 2 - 3 * t);
            for (long long t = 0; t < T; t++) S(8 + 6 * t, (3 * B - 7) / 2 - 3 * t);
            S(3, (3 * B - 1) / 2);
            D(2, (3 * B + 5) / 2);
            D(1, (3 * B + 1) / 2);
            for (long long k = 0; k < (B - 7) / 2; k++) D(5 + 2 * k, (3 * B + 7) / 2 + k);
            D(B - 1, 2 * B);
            return B >= 17;
        }
        if (b4 == 0) {
            S(B - 3, B + 5);
            S(B, B + 1);
            S(B - 2, B + 2);
            long long T = (B - 8) / 6;
            for (long long t = 0; t < T; t++) S(5 + 6 * t, (3 * B + 2) / 2 - 3 * t);
            for (long long t = 0; t < T; t++) S(7 + 6 * t, (3 * B - 6) / 2 - 3 * t);
            for (long long t = 0; t < T; t++) S(9 + 6 * t, (3 * B - 8) / 2 - 3 * t);
            S(3, 3 * B / 2);
            S(2, (3 * B - 2) / 2);
            D(1, (3 * B + 4) / 2);
            for (long long k = 0; k < B / 2 - 3; k++) D(4 + 2 * k, (3 * B + 6) / 2 + k);
            D(B - 1, 2 * B);
            return B >= 8;
        }
        return false;
    }
    return false;
}

inline void build_triples(long long q, std::vector<ValueTriple>& out) {
    out.clear();
    if (q == 0) return;
    // base systems below the closed-form validity thresholds
    if (q == 1) { out = {{1, 2, 3}}; return; }
    if (q == 2) { out = {{1, 3, 4}, {2, 5, 7}}; return; }
    if (q == 3) { out = {{1, 5, 6}, {3, 4, 7}, {2, 8, 10}}; return; }
    if (q == 7) {
        out = {{4, 9, 13}, {3, 11, 14}, {7, 8, 15}, {6, 10, 16},
               {5, 12, 17}, {1, 18, 19}, {2, 20, 22}};
        return;
    }
    if (q == 10) {
        out = {{5, 12, 17}, {4, 15, 19}, {6, 14, 20}, {10, 11, 21},
               {9, 13, 22}, {8, 16, 24}, {7, 18, 25}, {3, 23, 26},
               {1, 27, 28}, {2, 29, 31}};
        return;
    }
    long long M, B;
    int window;
    long long r4 = q % 4;
    if (r4 == 0) { M = q / 4; B = 3 * M; window = 1; }
    else if (r4 == 1) { M = (q - 1) / 4; B = 3 * M + 1; window = 2; }
    else if (r4 == 2) { M = (q - 2) / 4; B = 3 * M + 2; window = 3; }
    else { M = (q - 3) / 4; B = 3 * M + 2; window = 4; }
    long long sub = (window == 4) ? M + 1 : M;
    bool hook = (sub % 4 == 2) || (sub % 4 == 3);
    std::vector<WindowPair> pairs;
    if (!emit_window_pairs(window, hook, B, pairs))
        throw internal_error("no window pairing for q=" + std::to_string(q));
    out.reserve((size_t)q);
    for (auto& p : pairs) {
        long long o1 = 2 * p.u - 1, o2 = 2 * p.v - 1;
        if (p.sum_pair) {
            out.push_back({o1, o2, o1 + o2});
        } else {
            long long e = o2 - o1;
            if (e < o1) out.push_back({e, o1, o2});
            else out.push_back({o1, e, o2});
        }
    }
    std::vector<ValueTriple> subtris;
    build_triples(sub, subtris);
    for (auto& t : subtris) out.push_back({2 * t.a, 2 * t.b, 2 * t.c});
}

// Exact check of the documented postconditions; cheap (linear) and always on,
// because everything downstream trusts the footprint.
inline void validate_triples(long long q, const std::vector<ValueTriple>& tris,
                             bool hooked, bool heffter) {
    long long top = hooked ? 3 * q + 1 : 3 * q;
    require((long long)tris.size() == q, "triple system: wrong triple count");
    std::vector<char> seen((size_t)top + 1, 0);
    long long special = 0;
    for (auto& t : tris) {
        for (long long x : {t.a, t.b, t.c}) {
            require(x >= 1 && x <= top && !(hooked && x == 3 * q),
                    "triple system: value outside footprint");
            require(!seen[(size_t)x], "triple system: duplicated value");
            seen[(size_t)x] = 1;
        }
        require(t.a < t.b && t.b < t.c, "triple system: unsorted triple");
        if (t.a + t.b == t.c) continue;
        if (heffter && t.a + t.b + t.c == 6 * q + 1) {
            special++;
            continue;
        }
        throw internal_error("triple system: triple is neither a+b=c nor the tight form");
    }
    if (heffter) require(special == 1, "triple system: tight triple count != 1");
}

} // namespace triple_detail

inline std::vector<ValueTriple> skolem_triple_system(long long q) {
    if (q < 0 || (q % 4 != 0 && q % 4 != 1))
        throw precondition_error("skolem_triple_system needs q = 0,1 mod 4");
    std::vector<ValueTriple> tris;
    triple_detail::build_triples(q, tris);
    triple_detail::validate_triples(q, tris, false, false);
    return tris;
}

inline std::vector<ValueTriple> hooked_skolem_triple_system(long long q) {
    if (q < 2 || (q % 4 != 2 && q % 4 != 3))
        throw precondition_error("hooked_skolem_triple_system needs q = 2,3 mod 4");
    std::vector<ValueTriple> tris;
    triple_detail::build_triples(q, tris);
    triple_detail::validate_triples(q, tris, true, false);
    return tris;
}

// The hooked system's triple containing 3q+1 is always {a, b, 3q+1} with
// a+b = 3q+1 (the maximum footprint value must be a sum element); replacing
// that element by the unused 3q turns it into the unique a+b+c = 6q+1 triple.
inline std::vector<ValueTriple> heffter_triple_system(long long q) {
    if (q < 2 || (q % 4 != 2 && q % 4 != 3))
        throw precondition_error("heffter_triple_system needs q = 2,3 mod 4");
    std::vector<ValueTriple> tris;
    triple_detail::build_triples(q, tris);
    bool swapped = false;
    for (auto& t : tris)
        if (t.c == 3 * q + 1) {
            t.c = 3 * q;
            swapped = true;
            break;
        }
    require(swapped, "heffter swap found no triple containing 3q+1");
    triple_detail::validate_triples(q, tris, false, true);
    return tris;
}

} // namespace antimagic
