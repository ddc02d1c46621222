#include <doctest.h>

#include <cstdlib>
#include <set>

#include "sle/errors.hpp"
#include "sle/geometry.hpp"
#include "sle/io.hpp"
#include "sle/oracle.hpp"
#include "support.hpp"

using namespace sle;

TEST_CASE("no new edges returns layoutH") {
    Instance inst = test::make(2, 4, {{0, 2, 1}, {1, 3, 2}}, 0, {});
    auto L = solve_exhaustive(inst);
    REQUIRE(L);
    CHECK(L->spine.sequence() == inst.layoutH.spine.sequence());
    CHECK(L->pages == inst.layoutH.pages);
    CHECK(enumerate_solutions(inst, [](const Layout&) { return true; }) == 1);
}

TEST_CASE("single new vertex next to a single old one") {
    Instance inst = test::make(1, 1, {}, 1, {{0, 1}});
    auto L = solve_exhaustive(inst);
    REQUIRE(L);
    CHECK(L->page_of(Edge(0, 1)) == 1);
    CHECK(verify_solution(inst, *L) == "");
}

TEST_CASE("unsatisfiable instance yields an empty stream") {
    // o0-o2 and o1-o3 must cross on the only page
    Instance inst = test::make(1, 4, {{0, 2, 1}}, 0, {{1, 3}});
    CHECK_FALSE(solve_exhaustive(inst));
    CHECK(enumerate_solutions(inst, [](const Layout&) { return true; }) == 0);
}

TEST_CASE("capacity guard") {
    Instance inst = test::make(2, 6, {}, 3, {{0, 6}, {1, 7}, {2, 8}, {6, 7}});
    SolveOptions opts;
    opts.oracle_cap = 10;
    CHECK_THROWS_AS(solve_exhaustive(inst, opts), CapacityError);
    CHECK_THROWS_AS(enumerate_solutions(inst, [](const Layout&) { return true; }, opts), CapacityError);
    CHECK(oracle_search_space(inst) == doctest::Approx(7.0 * 8 * 9 * 16));

    setenv("SLE_ORACLE_CAP", "12345", 1);
    CHECK(default_oracle_cap() == 12345);
    unsetenv("SLE_ORACLE_CAP");
    CHECK(default_oracle_cap() == 100000000ULL);
}

TEST_CASE("enumeration emits valid distinct layouts deterministically") {
    std::mt19937_64 rng(5);
    for (int round = 0; round < 40; ++round) {
        Instance inst = test::random_instance(rng, 3, 2, 2, 2, 3);
        std::set<std::string> seen;
        std::vector<std::string> first, second;
        enumerate_solutions(inst, [&](const Layout& L) {
            CHECK(verify_solution(inst, L) == "");
            std::string key = emit_solution(inst, L);
            CHECK(seen.insert(key).second);
            first.push_back(key);
            return true;
        });
        enumerate_solutions(inst, [&](const Layout& L) {
            second.push_back(emit_solution(inst, L));
            return true;
        });
        CHECK(first == second);
        CHECK(solve_exhaustive(inst).has_value() == !first.empty());
    }
}

TEST_CASE("oracle agrees with the independent brute force") {
    std::mt19937_64 rng(2024);
    int positives = 0;
    for (int round = 0; round < 400; ++round) {
        int ell = 1 + int(rng() % 3);
        int n_new = int(rng() % 3);
        int n_old = 1 + int(rng() % (7 - n_new));
        Instance inst = test::random_instance(rng, n_old, ell, n_new, int(rng() % 5), int(rng() % 4));
        test::Brute brute(inst);
        std::uint64_t want = brute.count();
        std::uint64_t got = enumerate_solutions(inst, [](const Layout&) { return true; });
        CHECK(got == want);
        auto L = solve_exhaustive(inst);
        CHECK(L.has_value() == (want > 0));
        if (L) {
            ++positives;
            CHECK(verify_solution(inst, *L) == "");
        }
    }
    CHECK(positives > 50);
}
