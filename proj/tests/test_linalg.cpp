#include <doctest.h>

#include "graverpath/lab.hpp"
#include "graverpath/testsets.hpp"
#include "helpers.hpp"

using namespace graverpath;
using testing::in_lattice;

TEST_CASE("checked arithmetic refuses to wrap") {
    const Int big = std::numeric_limits<Int>::max();
    CHECK(checked_add(2, 3) == 5);
    CHECK_THROWS_AS(checked_add(big, 1), ResourceError);
    CHECK_THROWS_AS(checked_mul(big, 2), ResourceError);
    CHECK_THROWS_AS(checked_neg(std::numeric_limits<Int>::min()), ResourceError);
    CHECK_THROWS_AS(to_int(mpz_class("100000000000000000000")), ResourceError);
}

TEST_CASE("rational strings and log ceilings") {
    CHECK(to_string(Rational(6, 4)) == "3/2");
    CHECK(to_string(Rational(-4, 2)) == "-2");
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK(parse_rational("7") == Rational(7));
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
    CHECK_THROWS_AS(parse_rational("abc"), InputError);
    CHECK(ceil_log2(Rational(1)) == 0);
    CHECK(ceil_log2(Rational(2)) == 1);
    CHECK(ceil_log2(Rational(5)) == 3);
    CHECK(ceil_log2(Rational(8)) == 3);
    CHECK(ceil_log2(Rational(9, 2)) == 3);
    CHECK(ceil_log2(Rational(1, 2)) == 0);
}

TEST_CASE("canonical forms") {
    CHECK(primitive_canonical(IntVector{0, -4, 6}) == IntVector{0, 2, -3});
    CHECK(canonical_sign(IntVector{-1, 2}) == IntVector{1, -2});
    CHECK(gcd_of(IntVector{0, 6, -9}) == 3);
}

TEST_CASE("matrix construction") {
    CHECK_THROWS_AS(IntegerMatrix(0, 3), InputError);
    CHECK_THROWS_AS(IntegerMatrix::from_rows({{1, 2}, {3}}), InputError);
    IntegerMatrix m{{1, 2}, {3, 4}};
    CHECK(m.column(1) == IntVector{2, 4});
    CHECK(m.apply(IntVector{1, 1}) == IntVector{3, 7});
    CHECK(IntegerMatrix::from_columns({{1, 3}, {2, 4}}) == m);
}

TEST_CASE("rank") {
    CHECK(rank(IntegerMatrix::identity(3)) == 3);
    CHECK(rank(IntegerMatrix{{1, 1, 1}}) == 1);
    CHECK(rank(IntegerMatrix{{1, 2}, {2, 4}}) == 1);
    CHECK(rank(IntegerMatrix{{0, 0}}) == 0);
}

TEST_CASE("determinant") {
    CHECK(determinant(IntegerMatrix{{1, 2}, {3, 4}}) == -2);
    CHECK(determinant(IntegerMatrix{{2, 0, 1}, {1, 3, 2}, {1, 1, 2}}) == 6);
    CHECK(determinant(IntegerMatrix{{1, 2}, {2, 4}}) == 0);
}

TEST_CASE("kernel lattice basis examples") {
    CHECK(kernel_lattice_basis(IntegerMatrix::identity(2)).empty());

    auto one = kernel_lattice_basis(IntegerMatrix{{1, -1}});
    REQUIRE(one.size() == 1);
    CHECK(one[0] == IntVector{1, 1});

    IntegerMatrix a{{1, 1, 1}};
    auto basis = kernel_lattice_basis(a);
    REQUIRE(basis.size() == 2);
    for (const auto& v : basis) CHECK(is_zero(a.apply(v)));
    CHECK(in_lattice(basis, IntVector{1, -1, 0}));
    CHECK(in_lattice(basis, IntVector{0, 1, -1}));
}

TEST_CASE("kernel lattice basis generates every small kernel vector") {
    // A lattice that is not spanned by the obvious rational basis.
    IntegerMatrix tricky{{2, 4, 6}, {1, 3, 5}};
    auto tb = kernel_lattice_basis(tricky);
    REQUIRE(tb.size() == 1);
    CHECK(gcd_of(tb[0]) == 1);

    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        std::size_t d = 1 + seed % 3, n = 2 + seed % 4;
        IntegerMatrix a = random_matrix(seed, d, n, 3);
        auto basis = kernel_lattice_basis(a);
        CHECK(basis.size() == n - rank(a));
        for (const auto& v : basis) CHECK(is_zero(a.apply(v)));
        bool all = true;
        for_each_kernel_point_in_box(a, 3, [&](std::span<const Int> z) {
            all = all && in_lattice(basis, z);
        });
        CHECK_MESSAGE(all, "seed ", seed);
    }
}

TEST_CASE("subdeterminant lcm") {
    CHECK(subdeterminant_lcm(IntegerMatrix::identity(2)) == 1);
    CHECK(subdeterminant_lcm(IntegerMatrix{{1, 2}}) == 2);
    CHECK(subdeterminant_lcm(IntegerMatrix{{1, 2}, {0, 2}}) == 2);
    CHECK(subdeterminant_lcm(IntegerMatrix{{2, 3}}) == 6);
    CHECK_THROWS_AS(subdeterminant_lcm(IntegerMatrix{{0, 0}, {0, 0}}), InputError);
    CHECK(max_abs_subdeterminant(IntegerMatrix{{1, 2}, {3, 4}}) == 4);
}

TEST_CASE("subdeterminant lcm is divisible by every nonzero minor") {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        IntegerMatrix a = random_matrix(seed, 1 + seed % 3, 2 + seed % 3, 3);
        if (a.is_zero()) continue;
        mpz_class l = subdeterminant_lcm(a);
        bool ok = true;
        for_each_subdeterminant(a, kDefaultSubdeterminantCap,
                                [&](auto rows, auto cols, const mpz_class& det) {
                                    if (det != 0) {
                                        IntegerMatrix s(rows.size(), cols.size());
                                        for (std::size_t i = 0; i < rows.size(); ++i)
                                            for (std::size_t j = 0; j < cols.size(); ++j)
                                                s(i, j) = a(rows[i], cols[j]);
                                        mpz_class again = abs(determinant(s));
                                        ok = ok && again == abs(det) && l % again == 0;
                                    }
                                    return true;
                                });
        CHECK_MESSAGE(ok, "seed ", seed);
    }
}

TEST_CASE("total unimodularity") {
    CHECK(is_totally_unimodular(IntegerMatrix{{1, 1, 1}}));
    CHECK_FALSE(is_totally_unimodular(IntegerMatrix{{2}}));
    CHECK_FALSE(is_totally_unimodular(IntegerMatrix{{1, 1}, {-1, 1}}));
    for (std::uint64_t seed = 1; seed <= 10; ++seed)
        CHECK(is_totally_unimodular(random_incidence_matrix(seed, 3 + seed % 3, seed % 3)));
}

TEST_CASE("subdeterminant enumeration refuses oversized inputs") {
    IntegerMatrix big = IntegerMatrix::identity(9);
    CHECK_THROWS_AS(is_totally_unimodular(big), ResourceError);
    CHECK_THROWS_AS(subdeterminant_lcm(IntegerMatrix::identity(3), 2), ResourceError);
}

TEST_CASE("reduced row echelon and linear solves") {
    RowEchelon e = reduced_row_echelon(IntegerMatrix{{2, 4}, {1, 3}});
    CHECK(e.pivots == std::vector<std::size_t>{0, 1});
    auto y = solve_full_column_rank(IntegerMatrix{{1, 0}, {0, 2}, {1, 1}},
                                    testing::rv({1, 4, 3}));
    REQUIRE(y);
    CHECK((*y)[1] == Rational(2));
    CHECK_FALSE(solve_full_column_rank(IntegerMatrix{{1, 1}, {1, 1}}, testing::rv({1, 1})));
    CHECK_FALSE(solve_full_column_rank(IntegerMatrix{{1}, {1}}, testing::rv({1, 2})));
}

TEST_CASE("subsets in lexicographic order") {
    auto s = subsets_of_size(4, 2);
    REQUIRE(s.size() == 6);
    CHECK(s.front() == std::vector<std::size_t>{0, 1});
    CHECK(s.back() == std::vector<std::size_t>{2, 3});
    CHECK(subsets_of_size(3, 0).size() == 1);
}
