#include <doctest.h>

#include "graverpath/engine.hpp"
#include "graverpath/lab.hpp"
#include "helpers.hpp"

using namespace graverpath;
using testing::rv;

namespace {

Instance tiny(Domain domain = Domain::integer) {
    return Instance("tiny", IntegerMatrix{{1, 1, 1}}, {3}, {1, 2, 3}, {3, 3, 3}, domain);
}

Instance two_box(IntVector u, Domain domain) {
    return Instance("box", IntegerMatrix{{1, 1}}, {0}, {0, 0}, std::move(u), domain);
}

}  // namespace

TEST_CASE("instance validation") {
    CHECK_THROWS_AS(Instance("x", IntegerMatrix{{1, 1}}, {1, 2}, {0, 0}, {1, 1}, Domain::integer),
                    InputError);
    CHECK_THROWS_AS(Instance("x", IntegerMatrix{{1, 1}}, {1}, {0}, {1, 1}, Domain::integer),
                    InputError);
    CHECK_THROWS_AS(Instance("x", IntegerMatrix{{1, 1}}, {1}, {0, 0}, {1, -1}, Domain::integer),
                    InputError);
    CHECK(parse_rule("dantzig") == Rule::dantzig);
    CHECK_THROWS_AS(parse_rule("bland"), InputError);
    CHECK_THROWS_AS(parse_domain("mixed"), InputError);
}

TEST_CASE("feasibility") {
    CHECK(is_feasible(rv({3, 0, 0}), tiny()));
    CHECK_FALSE(is_feasible(rv({4, -1, 0}), tiny()));
    RationalVector half{Rational(1, 2), Rational(1, 2), Rational(2)};
    CHECK_FALSE(is_feasible(half, tiny()));
    CHECK(is_feasible(half, tiny(Domain::real)));
    CHECK_FALSE(is_feasible(rv({1, 1, 0}), tiny()));
}

TEST_CASE("maximal step length") {
    CHECK(max_step(rv({0, 3}), IntVector{1, -1}, two_box({3, 3}, Domain::integer)) == 3);
    CHECK(max_step(rv({0, 0}), IntVector{1, -1}, two_box({3, 3}, Domain::integer)) == 0);
    Instance real("r", IntegerMatrix{{1, 2}}, {4}, {0, 0}, {3, 5}, Domain::real);
    CHECK(max_step(rv({0, 2}), IntVector{2, -1}, real) == Rational(3, 2));
    CHECK(max_step(rv({0, 2}), IntVector{2, -1}, real.with_domain(Domain::integer)) == 1);
    CHECK_THROWS_AS(max_step(rv({0, 2}), IntVector{0, 0}, real), InputError);
}

TEST_CASE("direction choice per rule") {
    Instance inst = tiny();
    TestSet g = graver_basis(inst.a);
    auto steep = pick_direction(rv({0, 0, 3}), inst, g, Rule::steepest);
    REQUIRE(steep);
    CHECK(steep->direction == IntVector{1, 0, -1});
    CHECK(steep->alpha == 3);
    auto dantzig = pick_direction(rv({0, 0, 3}), inst, g, Rule::dantzig);
    REQUIRE(dantzig);
    CHECK(dantzig->direction == IntVector{1, 0, -1});
    CHECK(dantzig->alpha == 3);
    for (Rule r : {Rule::deepest, Rule::dantzig, Rule::steepest})
        CHECK_FALSE(pick_direction(rv({3, 0, 0}), inst, g, r));
}

TEST_CASE("ties go to the lexicographically smallest direction") {
    Instance inst("tie", IntegerMatrix{{1, 1, 1}}, {2}, {0, 1, 1}, {2, 2, 2}, Domain::integer);
    TestSet g = graver_basis(inst.a);
    // (1,-1,0) and (1,0,-1) improve equally from (0,1,1).
    auto aug = pick_direction(rv({0, 1, 1}), inst, g, Rule::steepest);
    REQUIRE(aug);
    CHECK(aug->direction == IntVector{1, -1, 0});
}

TEST_CASE("optimality certificate") {
    Instance inst = tiny();
    TestSet g = graver_basis(inst.a);
    CHECK(is_optimal(rv({3, 0, 0}), inst, g));
    CHECK_FALSE(is_optimal(rv({0, 0, 3}), inst, g));
    Instance flat = inst.with_cost({0, 0, 0});
    CHECK(is_optimal(rv({1, 1, 1}), flat, g));
}

TEST_CASE("augmenting to optimality") {
    Instance inst = tiny();
    SolveResult r = augment_to_optimality(inst, rv({0, 0, 3}), Rule::steepest);
    CHECK(r.x == rv({3, 0, 0}));
    CHECK(r.trace.steps.size() == 1);
    CHECK(r.trace.start_objective == 9);
    CHECK(r.trace.steps[0].objective == 3);
    CHECK(r.trace.steps[0].steepness == 1);

    CHECK(augment_to_optimality(inst, rv({3, 0, 0}), Rule::deepest).trace.steps.empty());
    CHECK_THROWS_AS(augment_to_optimality(inst, rv({1, 1, 0}), Rule::steepest), InputError);
}

TEST_CASE("every rule reaches the brute-force optimum") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        for (Domain dom : {Domain::integer, Domain::real}) {
            GeneratedInstance gi = random_instance(seed, 1 + seed % 2, 3 + seed % 3, 3, 3, dom);
            OracleResult best = brute_force_optimum(gi.instance);
            REQUIRE(best.feasible);
            TestSet tests = default_test_set(gi.instance);
            for (Rule r : {Rule::deepest, Rule::dantzig, Rule::steepest}) {
                SolveResult res = augment_to_optimality(gi.instance, gi.x0, r, tests);
                CHECK(is_feasible(res.x, gi.instance));
                CHECK_MESSAGE(objective(gi.instance, res.x) == best.objective, "seed ", seed);
                Rational prev = res.trace.start_objective;
                for (const auto& s : res.trace.steps) {
                    if (s.cleanup)
                        CHECK(s.objective <= prev);
                    else
                        CHECK(s.objective < prev);
                    prev = s.objective;
                }
            }
        }
    }
}

TEST_CASE("LP deepest and Dantzig end at an optimal vertex") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        GeneratedInstance gi = random_instance(seed, 2, 4, 3, 3, Domain::real);
        TestSet c = circuits(gi.instance.a);
        for (Rule r : {Rule::deepest, Rule::dantzig}) {
            SolveResult res = augment_to_optimality(gi.instance, gi.x0, r, c);
            CHECK(is_vertex(res.x, gi.instance));
            CHECK(is_optimal(res.x, gi.instance, c));
        }
    }
}

TEST_CASE("vertex cleanup") {
    Instance lp = tiny(Domain::real);
    TestSet c = circuits(lp.a);
    CleanupResult r = vertex_cleanup(rv({1, 1, 1}), lp, c);
    CHECK(r.x == rv({3, 0, 0}));
    CHECK(r.steps.size() <= 3);
    for (const auto& s : r.steps) CHECK(s.cleanup);

    CleanupResult same = vertex_cleanup(rv({3, 0, 0}), lp, c);
    CHECK(same.steps.empty());
    CHECK(same.x == rv({3, 0, 0}));

    RationalVector mid{Rational(3, 2), Rational(3, 2), Rational(0)};
    CleanupResult m = vertex_cleanup(mid, lp, c);
    CHECK(is_vertex(m.x, lp));
    CHECK(objective(lp, m.x) <= Rational(9, 2));
}

TEST_CASE("vertex test") {
    Instance lp = tiny(Domain::real);
    CHECK(is_vertex(rv({3, 0, 0}), lp));
    CHECK_FALSE(is_vertex(rv({1, 1, 1}), lp));
}

TEST_CASE("circuit distance") {
    Instance lp = tiny(Domain::real);
    TestSet c = circuits(lp.a);
    CHECK(circuit_distance(lp, rv({3, 0, 0}), rv({3, 0, 0}), c).steps == 0);
    CircuitDistance d = circuit_distance(lp, rv({0, 0, 3}), rv({3, 0, 0}), c);
    CHECK(d.reached_target);
    CHECK(d.steps <= 12);
    CHECK(vertex_cost(rv({3, 0, 0}), lp) == IntVector{-1, 1, 1});
    CHECK_THROWS_AS(circuit_distance(lp, rv({1, 1, 1}), rv({3, 0, 0}), c), InputError);
}

TEST_CASE("trace step accounting") {
    AugmentationTrace t;
    t.steps.push_back(TraceStep{{1}, 1, 0, 0, false});
    t.steps.push_back(TraceStep{{1}, 1, 0, 0, true});
    t.steps.push_back(TraceStep{{1}, 1, 0, 0, true});
    CHECK(t.rule_steps() == 1);
    CHECK(t.cleanup_steps() == 2);
}
