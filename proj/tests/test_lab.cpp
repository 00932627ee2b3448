#include <doctest.h>

#include "graverpath/lab.hpp"
#include "helpers.hpp"

using namespace graverpath;
using testing::rv;

namespace {

Instance tiny(Domain domain = Domain::integer) {
    return Instance("tiny", IntegerMatrix{{1, 1, 1}}, {3}, {1, 2, 3}, {3, 3, 3}, domain);
}

}  // namespace

TEST_CASE("max-flow model") {
    std::vector<Arc> arcs{{"s", "a", 2}, {"a", "t", 1}, {"s", "t", 1}};
    FlowModel m = maxflow_instance(arcs, "s", "t");
    CHECK(m.nodes == std::vector<std::string>{"s", "a", "t"});
    CHECK(m.instance.rows() == 2);
    CHECK(m.instance.cols() == 4);
    CHECK(m.auxiliary_arc == 3);
    CHECK(m.instance.c == IntVector{0, 0, 0, -1});
    CHECK(m.instance.u == IntVector{2, 1, 1, 4});
    CHECK(is_totally_unimodular(m.instance.a));
    CHECK(augmenting_path_max_flow(arcs, "s", "t") == 2);
    SolveResult r = augment_to_optimality(m.instance, RationalVector(4, Rational(0)), Rule::steepest);
    CHECK(-objective(m.instance, r.x) == 2);
    // n (d+1) ||c||_1 = |E| |V| with the auxiliary arc counted in E.
    CHECK(m.instance.cols() * (m.instance.rows() + 1) == 4 * 3);
    CHECK(r.trace.steps.size() <= 12);
}

TEST_CASE("single-arc network") {
    std::vector<Arc> arcs{{"s", "t", 5}};
    FlowModel m = maxflow_instance(arcs, "s", "t");
    SolveResult r = augment_to_optimality(m.instance, RationalVector(2, Rational(0)), Rule::steepest);
    CHECK(-objective(m.instance, r.x) == 5);
    CHECK(r.trace.steps.size() == 1);
}

TEST_CASE("max-flow input errors") {
    CHECK_THROWS_AS(maxflow_instance({{"s", "a", 1}, {"b", "t", 1}}, "s", "t"), InputError);
    CHECK_THROWS_AS(maxflow_instance({{"s", "t", -1}}, "s", "t"), InputError);
    CHECK_THROWS_AS(maxflow_instance({{"s", "t", 1}}, "s", "s"), InputError);
}

TEST_CASE("steepest descent matches augmenting paths on random networks") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        auto arcs = random_network(seed, 3 + seed % 4, 1 + seed % 3, 3);
        FlowModel m = maxflow_instance(arcs, "s", "t");
        SolveResult r = augment_to_optimality(m.instance, RationalVector(m.instance.cols(), Rational(0)),
                                              Rule::steepest);
        CHECK(-objective(m.instance, r.x) == augmenting_path_max_flow(arcs, "s", "t"));
        CHECK(r.trace.steps.size() <= m.instance.cols() * m.nodes.size());
    }
}

TEST_CASE("random networks are deterministic and connected") {
    auto a = random_network(7, 5, 2, 4);
    CHECK(a.size() == 6);
    auto b = random_network(7, 5, 2, 4);
    CHECK(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].tail == b[i].tail);
        CHECK(a[i].head == b[i].head);
        CHECK(a[i].capacity == b[i].capacity);
    }
    CHECK_NOTHROW(maxflow_instance(a, "s", "t"));
}

TEST_CASE("transportation instances") {
    IntVector s{2, 2}, d{1, 1, 2};
    Instance t = transportation_instance(s, d);
    CHECK(t.rows() == 4);
    CHECK(t.cols() == 6);
    CHECK(rank(t.a) == 4);
    CHECK(t.u == IntVector{1, 1, 2, 1, 1, 2});
    CHECK(is_totally_unimodular(t.a));
    CHECK(is_feasible(northwest_corner(s, d), t));

    IntVector one{1};
    Instance fixed = transportation_instance(one, one);
    CHECK(fixed.cols() == 1);
    CHECK(feasible_lattice_points(fixed) == std::vector<IntVector>{{1}});

    IntVector bad{3};
    CHECK_THROWS_AS(transportation_instance(s, bad), InputError);
    CHECK_THROWS_AS(transportation_instance(s, d, IntVector{1, 2}), InputError);
}

TEST_CASE("brute-force optima") {
    OracleResult i = brute_force_optimum(tiny());
    CHECK(i.feasible);
    CHECK(i.x == rv({3, 0, 0}));
    CHECK(i.objective == 3);
    OracleResult l = brute_force_optimum(tiny(Domain::real));
    CHECK(l.x == rv({3, 0, 0}));
    CHECK(l.objective == 3);
    Instance none("none", IntegerMatrix{{1, 1, 1}}, {10}, {1, 2, 3}, {1, 1, 1}, Domain::integer);
    CHECK_FALSE(brute_force_optimum(none).feasible);
    CHECK_FALSE(brute_force_optimum(none.with_domain(Domain::real)).feasible);
}

TEST_CASE("lexicographically smallest minimizer") {
    Instance flat("flat", IntegerMatrix{{1, 1}}, {1}, {0, 0}, {1, 1}, Domain::integer);
    CHECK(brute_force_optimum(flat).x == rv({0, 1}));
}

TEST_CASE("vertex enumeration") {
    auto v = enumerate_vertices(tiny(Domain::real));
    CHECK(v == std::vector<RationalVector>{rv({0, 0, 3}), rv({0, 3, 0}), rv({3, 0, 0})});
    Instance half("half", IntegerMatrix{{2, 2}}, {1}, {0, 0}, {1, 1}, Domain::real);
    auto hv = enumerate_vertices(half);
    REQUIRE(hv.size() == 2);
    CHECK(hv[0] == RationalVector{Rational(0), Rational(1, 2)});
}

TEST_CASE("gamma") {
    CHECK(gamma(tiny()) == 3);
    Instance binary("binary", IntegerMatrix{{1, 1, 1}}, {2}, {0, 0, 0}, {1, 1, 1}, Domain::integer);
    CHECK(gamma(binary) == 1);
    Instance fixed("fixed", IntegerMatrix{{1}}, {1}, {0}, {1}, Domain::integer);
    CHECK(gamma(fixed) == 1);
    Instance none("none", IntegerMatrix{{1, 1, 1}}, {10}, {1, 2, 3}, {1, 1, 1}, Domain::integer);
    CHECK_THROWS_AS(gamma(none), InputError);
}

TEST_CASE("enumeration cap") {
    Instance big("big", IntegerMatrix{{1, 1, 1, 1}}, {2}, {0, 0, 0, 0}, {99, 99, 99, 99},
                 Domain::integer);
    CHECK_THROWS_AS(feasible_lattice_points(big, 1000), ResourceError);
}

TEST_CASE("random instances") {
    GeneratedInstance a = random_instance(42, 2, 4, 3, 3);
    GeneratedInstance b = random_instance(42, 2, 4, 3, 3);
    CHECK(a.instance.a == b.instance.a);
    CHECK(a.instance.b == b.instance.b);
    CHECK(a.instance.c == b.instance.c);
    CHECK(a.instance.u == b.instance.u);
    CHECK(a.x0 == b.x0);
    CHECK(is_feasible(a.x0, a.instance));
    for (Int v : a.instance.u) CHECK((v >= 1 && v <= 3));
    CHECK_THROWS_AS(random_instance(1, 0, 3, 3, 3), InputError);
    CHECK_FALSE(random_instance(43, 2, 4, 3, 3).instance.a == a.instance.a);
}

TEST_CASE("LP optimum never exceeds the ILP optimum") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        GeneratedInstance g = random_instance(seed, 1 + seed % 3, 4, 3, 3);
        Rational ilp = brute_force_optimum(g.instance).objective;
        Rational lp = brute_force_optimum(g.instance.with_domain(Domain::real)).objective;
        CHECK(lp <= ilp);
    }
}

TEST_CASE("incidence matrices") {
    IntegerMatrix m = random_incidence_matrix(3, 4, 2);
    CHECK(m.rows() == 4);
    for (std::size_t j = 0; j < m.cols(); ++j) {
        IntVector col = m.column(j);
        CHECK(std::count(col.begin(), col.end(), 1) == 1);
        CHECK(std::count(col.begin(), col.end(), -1) == 1);
    }
}
