#include <doctest.h>

#include "graverpath/verify.hpp"
#include "helpers.hpp"

using namespace graverpath;
using testing::rv;

namespace {

Instance tiny(Domain domain = Domain::integer) {
    return Instance("tiny", IntegerMatrix{{1, 1, 1}}, {3}, {1, 2, 3}, {3, 3, 3}, domain);
}

bool has_group(const VerificationReport& r, std::string_view group) {
    return std::any_of(r.checks.begin(), r.checks.end(),
                       [&](const BoundCheck& c) { return c.group == group; });
}

}  // namespace

TEST_CASE("verification of the small integer instance") {
    VerificationReport r = verify_instance(tiny(), rv({0, 0, 3}));
    CHECK(r.passed());
    CHECK(r.first_failure() == nullptr);
    for (auto g : {"graver", "circuits", "tu", "decomposition", "ilp-steepest",
                   "ilp-overall-steepest", "ilp-tu", "ilp-deepest", "ilp-dantzig"})
        CHECK_MESSAGE(has_group(r, g), g);
    CHECK_FALSE(has_group(r, "lp-steepest"));
}

TEST_CASE("verification of the small real instance") {
    VerificationReport r = verify_instance(tiny(Domain::real), rv({1, 1, 1}));
    CHECK(r.passed());
    for (auto g : {"lp-steepest", "lp-tu", "lp-deepest", "lp-dantzig"}) CHECK_MESSAGE(has_group(r, g), g);
}

TEST_CASE("verification rejects an infeasible start") {
    CHECK_THROWS_AS(verify_instance(tiny(), rv({1, 1, 0})), InputError);
}

TEST_CASE("a too-small oracle box is reported as a failure") {
    Instance inst("skew", IntegerMatrix{{1, 1, -2}}, {0}, {1, 1, 1}, {2, 2, 1}, Domain::integer);
    VerifyOptions options;
    options.box_bound = 1;
    VerificationReport r = verify_instance(inst, rv({0, 0, 0}), options);
    REQUIRE(r.first_failure() != nullptr);
    CHECK(r.first_failure()->group == "graver");
}

TEST_CASE("trace replay catches tampering") {
    Instance inst = tiny();
    SolveResult r = augment_to_optimality(inst, rv({0, 0, 3}), Rule::steepest);
    auto clean = check_trace_shape("t", inst, rv({0, 0, 3}), r);
    CHECK(std::all_of(clean.begin(), clean.end(), [](const BoundCheck& c) { return c.passed; }));

    SolveResult short_step = r;
    short_step.trace.steps[0].alpha = 2;
    short_step.trace.steps[0].objective = 5;
    short_step.x = rv({2, 0, 1});
    auto rows = check_trace_shape("t", inst, rv({0, 0, 3}), short_step);
    auto maximal = std::find_if(rows.begin(), rows.end(),
                                [](const BoundCheck& c) { return c.name == "every step is maximal"; });
    REQUIRE(maximal != rows.end());
    CHECK_FALSE(maximal->passed);
}

TEST_CASE("minimal conformal decompositions") {
    TestSet g = graver_basis(IntegerMatrix{{1, 1, -2}});
    CHECK(minimal_conformal_terms(IntVector{1, 1, 1}, g, 4) == 1u);
    CHECK(minimal_conformal_terms(IntVector{3, 1, 2}, g, 4) == 2u);
    CHECK(minimal_conformal_terms(IntVector{0, 0, 0}, g, 4) == 0u);
    CHECK_FALSE(minimal_conformal_terms(IntVector{3, 1, 2}, g, 1));
    CHECK(decomposition_length(1) == 1);
    CHECK(decomposition_length(4) == 6);
}

TEST_CASE("delta") {
    CHECK(delta(IntegerMatrix{{1, 2}}) == 2);
    CHECK(delta(IntegerMatrix{{0, 0}}) == 1);
}

TEST_CASE("default starting points") {
    CHECK(default_start(tiny()) == rv({0, 0, 3}));
    CHECK(default_start(tiny(Domain::real)) == rv({0, 0, 3}));
    Instance none("none", IntegerMatrix{{1, 1, 1}}, {10}, {1, 2, 3}, {1, 1, 1}, Domain::integer);
    CHECK_FALSE(default_start(none));
}

TEST_CASE("circuit diameter of a simplex") {
    DiameterReport d = circuit_diameter(tiny());
    CHECK(d.vertices.size() == 3);
    CHECK(d.pairs.size() == 6);
    CHECK(d.totally_unimodular);
    CHECK(d.bound == 12);
    CHECK(d.max_steps == 1);
    CHECK(d.max_round_trip == 2);
    CHECK(std::all_of(d.checks.begin(), d.checks.end(), [](const BoundCheck& c) { return c.passed; }));
}

TEST_CASE("circuit diameter of an empty polytope") {
    Instance none("none", IntegerMatrix{{1, 1, 1}}, {10}, {1, 2, 3}, {1, 1, 1}, Domain::real);
    CHECK_THROWS_AS(circuit_diameter(none), InputError);
}
