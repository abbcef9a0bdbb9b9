#pragma once

#include <algorithm>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "antimagic/graph.hpp"
#include "antimagic/triple_systems.hpp"

namespace antimagic {

// Partition {1..n} into parts of prescribed sizes (each >= 2, summing to n)
// so that every part's sum is divisible by the modulus
//   M = n+1 (n even) or n (n odd), odd in both cases.
//
// Construction works "units first". With P = floor(n/2), each absolute value
// j in [1,P] stands for the pair {j, M-j}, whose sum is M; for odd n the
// value n alone is a unit (n = M). Even-size parts are unions of pair units.
// Each odd-size part needs exactly one odd-cardinality unit: the singleton
// covers one odd part when n is odd, and every remaining pair of odd parts
// is served by one triple of absolute values (a,b,c), a<b<c, which yields
// two disjoint zero-sum 3-units:
//   a+b = c     ->  {a, b, M-c}        and {M-a, M-b, c}
//   a+b+c = M   ->  {a, b, c}          and {M-a, M-b, M-c}
// With q odd parts, Q = (q - [n odd])/2 disjoint triples are needed inside
// [1,P]. Odd parts have size >= 3, so P >= 3Q always; a Skolem system covers
// Q = 0,1 mod 4, a hooked system covers Q = 2,3 mod 4 when P >= 3Q+1, and in
// the tight case P = 3Q (forcing M = 6Q+1) the Heffter variant's single
// a+b+c = 6Q+1 triple is exactly the second form above.

struct ResiduePartition {
    long long n = 0;
    long long modulus = 1;
    std::vector<std::vector<long long>> parts;
};

// Throws internal_error unless `rp` is a valid result for (n, sizes):
// modulus as specified, part sizes matching in order, values exactly {1..n}
// without repetition, every part sum divisible by the modulus.
inline void verify_residue_partition(const ResiduePartition& rp, long long n,
                                     const std::vector<long long>& sizes) {
    long long M = (n % 2 == 0) ? n + 1 : n;
    require(rp.n == n, "residue partition: wrong n");
    require(rp.modulus == M, "residue partition: wrong modulus");
    require(rp.parts.size() == sizes.size(), "residue partition: wrong part count");
    std::vector<char> seen((size_t)n + 1, 0);
    for (size_t i = 0; i < sizes.size(); i++) {
        require((long long)rp.parts[i].size() == sizes[i],
                "residue partition: part size mismatch");
        long long sum = 0;
        for (long long v : rp.parts[i]) {
            require(v >= 1 && v <= n, "residue partition: value out of range");
            require(!seen[(size_t)v], "residue partition: value repeated");
            seen[(size_t)v] = 1;
            sum += v;
        }
        require(sum % M == 0, "residue partition: part sum not divisible");
    }
}

namespace residue_detail {

// Backtracking assignment of 1..n to the parts, pruning a part the moment it
// closes on a nonzero residue. Parts in identical states (same remaining
// capacity and partial sum) are interchangeable, so only the first is tried.
// Safety net for small n; the closed form above makes it unreachable.
inline std::optional<ResiduePartition> exhaustive_search(
    long long n, const std::vector<long long>& sizes) {
    long long M = (n % 2 == 0) ? n + 1 : n;
    size_t k = sizes.size();
    std::vector<std::vector<long long>> parts(k);
    std::vector<long long> sum(k, 0);
    std::function<bool(long long)> place = [&](long long v) -> bool {
        if (v > n) return true;
        std::set<std::pair<long long, long long>> tried;
        for (size_t i = 0; i < k; i++) {
            long long room = sizes[i] - (long long)parts[i].size();
            if (room == 0) continue;
            if (!tried.insert({room, sum[i] % M}).second) continue;
            parts[i].push_back(v);
            sum[i] += v;
            bool viable = room > 1 || sum[i] % M == 0;
            if (viable && place(v + 1)) return true;
            parts[i].pop_back();
            sum[i] -= v;
        }
        return false;
    };
    if (!place(1)) return std::nullopt;
    ResiduePartition rp;
    rp.n = n;
    rp.modulus = M;
    rp.parts = std::move(parts);
    return rp;
}

inline ResiduePartition closed_form(long long n, const std::vector<long long>& sizes) {
    long long M = (n % 2 == 0) ? n + 1 : n;
    long long P = n / 2;
    ResiduePartition rp;
    rp.n = n;
    rp.modulus = M;
    rp.parts.resize(sizes.size());

    std::vector<size_t> odd_parts;
    for (size_t i = 0; i < sizes.size(); i++)
        if (sizes[i] % 2 == 1) odd_parts.push_back(i);
    long long q = (long long)odd_parts.size();
    require(q % 2 == n % 2, "residue partition: odd-part parity drifted from n");
    long long Q = (q - (n % 2)) / 2;

    std::vector<ValueTriple> tris;
    if (Q > 0) {
        require(P >= 3 * Q, "residue partition: too few absolute values");
        long long r = Q % 4;
        if (r == 0 || r == 1) tris = skolem_triple_system(Q);
        else if (P >= 3 * Q + 1) tris = hooked_skolem_triple_system(Q);
        else tris = heffter_triple_system(Q); // P = 3Q, so M = 6Q+1
    }
    std::sort(tris.begin(), tris.end(), [](const ValueTriple& x, const ValueTriple& y) {
        return std::tie(x.a, x.b, x.c) < std::tie(y.a, y.b, y.c);
    });

    std::vector<char> absval_used((size_t)P + 1, 0);
    size_t cursor = 0; // next odd part (input order) awaiting its odd unit
    if (n % 2 == 1) rp.parts[odd_parts[cursor++]].push_back(n);
    for (const auto& t : tris) {
        for (long long x : {t.a, t.b, t.c}) {
            require(x >= 1 && x <= P && !absval_used[(size_t)x],
                    "residue partition: triple outside free absolute values");
            absval_used[(size_t)x] = 1;
        }
        std::vector<long long> first, second;
        if (t.a + t.b == t.c) {
            first = {t.a, t.b, M - t.c};
            second = {M - t.a, M - t.b, t.c};
        } else {
            require(t.a + t.b + t.c == M, "residue partition: unusable triple form");
            first = {t.a, t.b, t.c};
            second = {M - t.a, M - t.b, M - t.c};
        }
        for (long long v : first) rp.parts[odd_parts[cursor]].push_back(v);
        cursor++;
        for (long long v : second) rp.parts[odd_parts[cursor]].push_back(v);
        cursor++;
    }
    require(cursor == odd_parts.size(), "residue partition: odd unit count drifted");

    std::vector<long long> leftovers;
    for (long long j = 1; j <= P; j++)
        if (!absval_used[(size_t)j]) leftovers.push_back(j);
    size_t li = 0;
    for (size_t i = 0; i < sizes.size(); i++) {
        long long gap = sizes[i] - (long long)rp.parts[i].size();
        require(gap >= 0 && gap % 2 == 0, "residue partition: part gap not even");
        for (long long k = 0; k < gap / 2; k++) {
            require(li < leftovers.size(), "residue partition: ran out of pair units");
            long long j = leftovers[li++];
            rp.parts[i].push_back(j);
            rp.parts[i].push_back(M - j);
        }
    }
    require(li == leftovers.size(), "residue partition: unused pair units remain");
    for (auto& part : rp.parts) std::sort(part.begin(), part.end());
    return rp;
}

} // namespace residue_detail

inline ResiduePartition residue_partition(long long n, const std::vector<long long>& sizes) {
    long long total = 0;
    for (long long s : sizes) {
        if (s < 2) throw precondition_error("residue_partition: every part size must be >= 2");
        total += s;
    }
    if (total != n)
        throw precondition_error("residue_partition: part sizes must sum to n");

    ResiduePartition rp;
    bool closed_form_ok = true;
    try {
        rp = residue_detail::closed_form(n, sizes);
        verify_residue_partition(rp, n, sizes);
    } catch (const internal_error&) {
        closed_form_ok = false;
    }
    if (!closed_form_ok) {
        if (n > 14) throw internal_error("residue_partition: closed form failed for n > 14");
        std::cerr << "residue_partition: closed form failed for n=" << n
                  << ", falling back to exhaustive search\n";
        auto found = residue_detail::exhaustive_search(n, sizes);
        if (!found)
            throw internal_error("residue_partition: no partition exists (exhaustive)");
        rp = *found;
        for (auto& part : rp.parts) std::sort(part.begin(), part.end());
    }
    verify_residue_partition(rp, n, sizes);
    return rp;
}

} // namespace antimagic
