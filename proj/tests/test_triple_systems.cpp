#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <vector>

#include "antimagic/triple_systems.hpp"

using namespace antimagic;

// Independent re-check, written against the documented contract only (does
// not share code with the library's internal validator).
namespace {

void check_plain(long long q, const std::vector<ValueTriple>& tris) {
    REQUIRE((long long)tris.size() == q);
    std::set<long long> used;
    for (auto& t : tris) {
        REQUIRE(t.a + t.b == t.c);
        for (long long x : {t.a, t.b, t.c}) {
            REQUIRE(x >= 1);
            REQUIRE(x <= 3 * q);
            REQUIRE(used.insert(x).second);
        }
    }
    REQUIRE((long long)used.size() == 3 * q);
}

void check_hooked(long long q, const std::vector<ValueTriple>& tris) {
    REQUIRE((long long)tris.size() == q);
    std::set<long long> used;
    for (auto& t : tris) {
        REQUIRE(t.a + t.b == t.c);
        for (long long x : {t.a, t.b, t.c}) {
            REQUIRE(x >= 1);
            REQUIRE(x <= 3 * q + 1);
            REQUIRE(x != 3 * q);
            REQUIRE(used.insert(x).second);
        }
    }
    REQUIRE((long long)used.size() == 3 * q);
}

void check_heffter(long long q, const std::vector<ValueTriple>& tris) {
    REQUIRE((long long)tris.size() == q);
    std::set<long long> used;
    int tight = 0;
    for (auto& t : tris) {
        if (t.a + t.b + t.c == 6 * q + 1 && t.a + t.b != t.c) tight++;
        else REQUIRE(t.a + t.b == t.c);
        for (long long x : {t.a, t.b, t.c}) {
            REQUIRE(x >= 1);
            REQUIRE(x <= 3 * q);
            REQUIRE(used.insert(x).second);
        }
    }
    REQUIRE(tight == 1);
    REQUIRE((long long)used.size() == 3 * q);
}

} // namespace

TEST_CASE("smallest systems match frozen values") {
    auto s1 = skolem_triple_system(1);
    REQUIRE(s1.size() == 1);
    REQUIRE(s1[0].a == 1);
    REQUIRE(s1[0].b == 2);
    REQUIRE(s1[0].c == 3);

    auto h2 = hooked_skolem_triple_system(2);
    REQUIRE(h2.size() == 2);
    REQUIRE(h2[0].a == 1);
    REQUIRE(h2[0].b == 3);
    REQUIRE(h2[0].c == 4);
    REQUIRE(h2[1].a == 2);
    REQUIRE(h2[1].b == 5);
    REQUIRE(h2[1].c == 7);

    auto f2 = heffter_triple_system(2);
    check_heffter(2, f2);
    // the {2,5,7} triple becomes the tight one: 2+5+6 = 13 = 6*2+1
    bool found = false;
    for (auto& t : f2) found = found || (t.a == 2 && t.b == 5 && t.c == 6);
    REQUIRE(found);
}

TEST_CASE("empty system for q=0") {
    REQUIRE(skolem_triple_system(0).empty());
}

TEST_CASE("residues outside each family's domain are rejected") {
    REQUIRE_THROWS_AS(skolem_triple_system(2), precondition_error);
    REQUIRE_THROWS_AS(skolem_triple_system(3), precondition_error);
    REQUIRE_THROWS_AS(skolem_triple_system(-1), precondition_error);
    REQUIRE_THROWS_AS(hooked_skolem_triple_system(1), precondition_error);
    REQUIRE_THROWS_AS(hooked_skolem_triple_system(4), precondition_error);
    REQUIRE_THROWS_AS(heffter_triple_system(5), precondition_error);
    REQUIRE_THROWS_AS(heffter_triple_system(0), precondition_error);
}

TEST_CASE("every q up to 2000 yields a valid system") {
    for (long long q = 1; q <= 2000; q++) {
        long long r = q % 4;
        if (r == 0 || r == 1) {
            check_plain(q, skolem_triple_system(q));
        } else {
            check_hooked(q, hooked_skolem_triple_system(q));
            check_heffter(q, heffter_triple_system(q));
        }
    }
}

TEST_CASE("large systems build fast and validate") {
    check_plain(100000, skolem_triple_system(100000));
    check_hooked(100002, hooked_skolem_triple_system(100002));
    check_heffter(99999, heffter_triple_system(99999));
}
