#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <vector>

#include "antimagic/generators.hpp"
#include "antimagic/residue_partition.hpp"

using namespace antimagic;

namespace {

// Independent contract check, sharing no code with the library verifier.
void check(const ResiduePartition& rp, long long n, const std::vector<long long>& sizes) {
    long long M = (n % 2 == 0) ? n + 1 : n;
    REQUIRE(rp.n == n);
    REQUIRE(rp.modulus == M);
    REQUIRE(rp.parts.size() == sizes.size());
    std::set<long long> seen;
    for (size_t i = 0; i < sizes.size(); i++) {
        REQUIRE((long long)rp.parts[i].size() == sizes[i]);
        long long sum = 0;
        for (long long v : rp.parts[i]) {
            REQUIRE(v >= 1);
            REQUIRE(v <= n);
            REQUIRE(seen.insert(v).second);
            sum += v;
        }
        REQUIRE(sum % M == 0);
    }
    REQUIRE((long long)seen.size() == n);
}

// All partitions of n into parts >= 2, descending, visiting `fn` on each.
void each_size_multiset(long long n, std::vector<long long>& acc,
                        long long maxpart,
                        const std::function<void(const std::vector<long long>&)>& fn) {
    if (n == 0) {
        fn(acc);
        return;
    }
    for (long long p = std::min(n, maxpart); p >= 2; p--) {
        if (n - p == 1) continue; // a trailing 1 can never be a part
        acc.push_back(p);
        each_size_multiset(n - p, acc, p, fn);
        acc.pop_back();
    }
}

} // namespace

TEST_CASE("three pairs from six values") {
    auto rp = residue_partition(6, {2, 2, 2});
    check(rp, 6, {2, 2, 2});
    REQUIRE(rp.parts[0] == std::vector<long long>{1, 6});
    REQUIRE(rp.parts[1] == std::vector<long long>{2, 5});
    REQUIRE(rp.parts[2] == std::vector<long long>{3, 4});
}

TEST_CASE("odd total routes the self-divisible value to the odd part") {
    auto rp = residue_partition(5, {2, 3});
    check(rp, 5, {2, 3});
    REQUIRE(rp.parts[0] == std::vector<long long>{1, 4});
    REQUIRE(rp.parts[1] == std::vector<long long>{2, 3, 5});
}

TEST_CASE("three odd parts use one triple plus the singleton") {
    auto rp = residue_partition(9, {3, 3, 3});
    check(rp, 9, {3, 3, 3});
    REQUIRE(rp.parts[0] == std::vector<long long>{4, 5, 9});
    REQUIRE(rp.parts[1] == std::vector<long long>{1, 2, 6});
    REQUIRE(rp.parts[2] == std::vector<long long>{3, 7, 8});
}

TEST_CASE("bad inputs are rejected up front") {
    REQUIRE_THROWS_AS(residue_partition(4, {1, 3}), precondition_error);
    REQUIRE_THROWS_AS(residue_partition(6, {2, 2}), precondition_error);
    REQUIRE_THROWS_AS(residue_partition(5, {2, 2, 2}), precondition_error);
    REQUIRE_THROWS_AS(residue_partition(-1, {}), precondition_error);
    REQUIRE_THROWS_AS(residue_partition(3, {0, 3}), precondition_error);
}

TEST_CASE("degenerate empty instance") {
    auto rp = residue_partition(0, {});
    check(rp, 0, {});
}

TEST_CASE("tight instances that need the heffter variant") {
    // Every absolute value sits in a triple; one triple must sum to the modulus.
    auto rp12 = residue_partition(12, {3, 3, 3, 3});
    check(rp12, 12, {3, 3, 3, 3});
    auto rp18 = residue_partition(18, {3, 3, 3, 3, 3, 3});
    check(rp18, 18, {3, 3, 3, 3, 3, 3});
}

TEST_CASE("hooked instances with one spare absolute value") {
    auto rp14 = residue_partition(14, {3, 3, 3, 3, 2});
    check(rp14, 14, {3, 3, 3, 3, 2});
    auto rp15 = residue_partition(15, {3, 3, 3, 3, 3});
    check(rp15, 15, {3, 3, 3, 3, 3});
}

TEST_CASE("mixed large odd parts") {
    auto rp = residue_partition(12, {5, 7});
    check(rp, 12, {5, 7});
    auto rp2 = residue_partition(30, {3, 3, 3, 3, 3, 3, 3, 3, 3, 3});
    check(rp2, 30, {3, 3, 3, 3, 3, 3, 3, 3, 3, 3});
    auto rp3 = residue_partition(29, {9, 7, 5, 3, 3, 2});
    check(rp3, 29, {9, 7, 5, 3, 3, 2});
}

TEST_CASE("exhaustive size multisets up to n = 12") {
    for (long long n = 2; n <= 12; n++) {
        std::vector<long long> acc;
        each_size_multiset(n, acc, n, [&](const std::vector<long long>& sizes) {
            check(residue_partition(n, sizes), n, sizes);
        });
    }
}

TEST_CASE("shuffled part orders are honored in order") {
    SplitMix64 rng{777};
    for (int it = 0; it < 200; it++) {
        std::vector<long long> sizes{3, 2, 5, 3, 4, 3, 3, 2};
        shuffle(sizes, rng);
        long long n = 0;
        for (long long s : sizes) n += s;
        check(residue_partition(n, sizes), n, sizes);
    }
}

TEST_CASE("random instances up to n = 60") {
    SplitMix64 rng{20260815};
    for (int it = 0; it < 1000; it++) {
        long long n = 0;
        std::vector<long long> sizes;
        long long target = rng.range(2, 60);
        while (n < target) {
            long long rest = target - n;
            long long s;
            if (rest < 4) s = rest;
            else s = rng.range(2, std::min<long long>(rest - 2, 9));
            sizes.push_back(s);
            n += s;
        }
        check(residue_partition(n, sizes), n, sizes);
    }
}

TEST_CASE("verifier rejects tampered partitions") {
    auto rp = residue_partition(6, {2, 2, 2});
    auto bad = rp;
    std::swap(bad.parts[0][1], bad.parts[1][1]); // breaks both sums
    REQUIRE_THROWS_AS(verify_residue_partition(bad, 6, {2, 2, 2}), internal_error);
    bad = rp;
    bad.parts[2][0] = bad.parts[2][1]; // repeats a value
    REQUIRE_THROWS_AS(verify_residue_partition(bad, 6, {2, 2, 2}), internal_error);
    bad = rp;
    bad.modulus = 6;
    REQUIRE_THROWS_AS(verify_residue_partition(bad, 6, {2, 2, 2}), internal_error);
}

TEST_CASE("exhaustive fallback finds small partitions on its own") {
    auto found = residue_detail::exhaustive_search(9, {3, 3, 3});
    REQUIRE(found.has_value());
    for (auto& part : found->parts) std::sort(part.begin(), part.end());
    check(*found, 9, {3, 3, 3});
    // sizes {2,2} with n=4: parts {1,4},{2,3} wanted; search must find them
    auto f2 = residue_detail::exhaustive_search(4, {2, 2});
    REQUIRE(f2.has_value());
}
