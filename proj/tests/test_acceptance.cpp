#include <catch2/catch_amalgamated.hpp>

#include <iostream>

#include "antimagic/selftest.hpp"

using namespace antimagic;

// One criterion per line; CHECK keeps going so every line prints even when
// something is red, and the final REQUIRE makes the binary's verdict match.
TEST_CASE("acceptance criteria") {
    auto results = run_all_criteria();
    REQUIRE(results.size() == 9);
    bool all = true;
    for (const auto& r : results) {
        print_criterion(std::cout, r);
        INFO(r.name << ": " << r.detail);
        CHECK(r.pass);
        all = all && r.pass;
    }
    REQUIRE(all);
}
