#include <doctest.h>

#include "sle/classical.hpp"
#include "sle/errors.hpp"
#include "sle/geometry.hpp"
#include "sle/io.hpp"
#include "sle/oracle.hpp"
#include "sle/reductions.hpp"
#include "support.hpp"

using namespace sle;

namespace {

Instance random_edges_only(std::mt19937_64& rng, int max_old, int max_ell, int max_m) {
    int n = 2 + int(rng() % (max_old - 1));
    return test::random_instance(rng, n, 1 + int(rng() % max_ell), 0, int(rng() % (n + 1)), 1 + int(rng() % max_m));
}

}  // namespace

TEST_CASE("candidate_pages") {
    Instance free = test::make(3, 4, {}, 0, {{0, 2}});
    CHECK(candidate_pages(free, Edge(0, 2)) == std::vector<int>{1, 2, 3});
    Instance blocked = test::make(2, 4, {{1, 3, 1}}, 0, {{0, 2}});
    CHECK(candidate_pages(blocked, Edge(0, 2)) == std::vector<int>{2});
    Instance with_new = test::make(2, 2, {}, 1, {{0, 2}});
    CHECK_THROWS_AS(candidate_pages(with_new, Edge(0, 2)), InputError);
}

TEST_CASE("candidate_pages matches adding the edge to H") {
    std::mt19937_64 rng(8);
    for (int round = 0; round < 200; ++round) {
        Instance inst = random_edges_only(rng, 6, 3, 3);
        for (const Edge& e : inst.new_edges()) {
            auto S = candidate_pages(inst, e);
            for (int p = 1; p <= inst.ell; ++p) {
                Graph g = inst.H;
                g.add_edge(e);
                Layout L = inst.layoutH;
                L.pages[e] = p;
                bool in = std::find(S.begin(), S.end(), p) != S.end();
                CHECK(in == is_valid(g, L));
            }
        }
    }
}

TEST_CASE("reduce_safe_edges") {
    Instance single = test::make(1, 3, {}, 0, {{0, 2}});
    auto [r1, gone1] = reduce_safe_edges(single);
    CHECK(r1.m_add() == 0);
    CHECK(gone1.size() == 1);

    // both new edges only fit page 1 (|S| = 1 < m_add = 2): nothing to remove
    Instance tight = test::make(2, 7, {{1, 3, 2}, {4, 6, 2}}, 0, {{0, 2}, {3, 5}});
    auto [r2, gone2] = reduce_safe_edges(tight);
    CHECK(gone2.empty());
    CHECK(r2.m_add() == 2);

    CHECK_THROWS_AS(reduce_safe_edges(test::make(1, 2, {}, 1, {})), PreconditionError);

    std::mt19937_64 rng(21);
    for (int round = 0; round < 300; ++round) {
        Instance inst = random_edges_only(rng, 6, 3, 4);
        auto [red, gone] = reduce_safe_edges(inst);
        CHECK(solve_exhaustive(inst).has_value() == solve_exhaustive(red).has_value());
        for (const Edge& e : red.new_edges()) CHECK(int(candidate_pages(red, e).size()) < red.m_add());
    }
}

TEST_CASE("solve_edges_only") {
    Instance none = test::make(2, 3, {{0, 2, 1}}, 0, {});
    auto L = solve_edges_only(none);
    REQUIRE(L);
    CHECK(L->pages == none.layoutH.pages);

    // o0-o2 and o1-o3 cross, page 2 is blocked for both
    Instance clash = test::make(2, 6, {{0, 5, 2}, {1, 4, 2}, {2, 3, 2}, {2, 4, 2}}, 0, {{0, 2}, {1, 3}});
    CHECK(candidate_pages(clash, Edge(0, 2)) == std::vector<int>{1});
    CHECK_FALSE(solve_edges_only(clash));

    CHECK_THROWS_AS(solve_edges_only(test::make(1, 2, {}, 1, {})), PreconditionError);

    std::mt19937_64 rng(99);
    for (int round = 0; round < 500; ++round) {
        Instance inst = random_edges_only(rng, 6, 3, 4);
        auto got = solve_edges_only(inst);
        CHECK(got.has_value() == test::Brute(inst).extendable());
        if (got) CHECK(verify_solution(inst, *got) == "");
    }
}

TEST_CASE("solve_one_vertex") {
    Instance isolated = test::make(2, 3, {{0, 2, 1}}, 1, {});
    auto L = solve_one_vertex(isolated);
    REQUIRE(L);
    CHECK(L->spine.sequence().front() == VertexId(3));

    // o0-o2 on the only page separates o1 from o3 in every interval
    Instance dead = test::make(1, 4, {{0, 2, 1}}, 1, {{1, 4}, {3, 4}});
    CHECK_FALSE(test::Brute(dead).extendable());
    CHECK_FALSE(solve_one_vertex(dead));

    CHECK_THROWS_AS(solve_one_vertex(test::make(1, 2, {}, 2, {})), PreconditionError);
    CHECK_THROWS_AS(solve_one_vertex(test::make(1, 3, {}, 1, {{0, 2}})), PreconditionError);

    std::mt19937_64 rng(77);
    int negatives = 0;
    for (int round = 0; round < 500; ++round) {
        int n = 1 + int(rng() % 6);
        Instance inst = test::random_instance(rng, n, 1 + int(rng() % 3), 1, int(rng() % (2 * n)), 8);
        std::vector<Edge> keep;
        for (const Edge& e : inst.new_edges())
            if (!inst.is_old(e.u) || !inst.is_old(e.v)) keep.push_back(e);
        inst = with_new_edges(inst, keep);
        auto got = solve_one_vertex(inst);
        bool want = test::Brute(inst).extendable();
        negatives += !want;
        CHECK(got.has_value() == want);
        if (got) CHECK(verify_solution(inst, *got) == "");
    }
    CHECK(negatives > 10);
}

TEST_CASE("solve_xp agrees with brute force and respects its bound") {
    Instance none = test::make(2, 3, {{0, 2, 1}}, 0, {});
    REQUIRE(solve_xp(none));

    std::mt19937_64 rng(4242);
    int negatives = 0;
    for (int round = 0; round < 500; ++round) {
        int ell = 1 + int(rng() % 3);
        int n_new = int(rng() % 3);
        int n_old = 1 + int(rng() % (7 - n_new));
        Instance inst = test::random_instance(rng, n_old, ell, n_new, int(rng() % 6), int(rng() % 5));
        SolveStats st;
        auto got = solve_xp(inst, {}, &st);
        bool want = test::Brute(inst).extendable();
        CHECK(got.has_value() == want);
        if (got) CHECK(verify_solution(inst, *got) == "");
        CHECK(double(st.branches) <= xp_branch_bound(inst));
        if (!want) {
            ++negatives;
            CHECK(double(st.branches) == xp_branch_bound(inst));
        }

        SolveOptions par;
        par.exec = Execution::Parallel;
        auto again = solve_xp(inst, par);
        CHECK(again.has_value() == got.has_value());
        if (got && again) CHECK(emit_solution(inst, *got) == emit_solution(inst, *again));
    }
    CHECK(negatives > 20);
}

TEST_CASE("solve_xp on a one-clause 3-SAT reduction") {
    CnfFormula phi;
    phi.num_vars = 3;
    phi.clauses.push_back({Literal{1, false}, Literal{2, true}, Literal{3, false}});
    auto [inst, cert] = reduce_3sat(phi);
    auto L = solve_xp(inst);
    REQUIRE(L);
    CHECK(verify_solution(inst, *L) == "");
    CHECK(phi.satisfied_by(extract_certificate(inst, *L, cert).assignment));
}
