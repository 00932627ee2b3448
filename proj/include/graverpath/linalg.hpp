#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <vector>

#include "graverpath/types.hpp"

namespace graverpath {

/// Dense d x n integer matrix, row-major. Always at least 1 x 1.
class IntegerMatrix {
public:
    IntegerMatrix(std::size_t rows, std::size_t cols);
    IntegerMatrix(std::initializer_list<std::initializer_list<Int>> rows);
    static IntegerMatrix from_rows(const std::vector<IntVector>& rows);
    static IntegerMatrix from_columns(const std::vector<IntVector>& columns);
    static IntegerMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntVector row(std::size_t r) const;
    IntVector column(std::size_t c) const;
    std::vector<IntVector> row_list() const;

    IntVector apply(std::span<const Int> x) const;
    RationalVector apply(std::span<const Rational> x) const;

    /// Submatrix on the given column subset, all rows kept.
    IntegerMatrix select_columns(std::span<const std::size_t> cols) const;

    bool is_zero() const;

    friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    IntVector data_;
};

/// Default cap on min(d, n) for the exponential subdeterminant enumerations.
inline constexpr std::size_t kDefaultSubdeterminantCap = 8;

std::size_t rank(const IntegerMatrix& a);

/// Rank of the submatrix on a column subset.
std::size_t column_rank(const IntegerMatrix& a, std::span<const std::size_t> cols);

/// Exact determinant of a square matrix (fraction-free Bareiss elimination).
mpz_class determinant(const IntegerMatrix& a);

/// A lattice basis of ker(A) ∩ Z^n with n - rank(A) vectors.
std::vector<IntVector> kernel_lattice_basis(const IntegerMatrix& a);

/// lcm of |det S| over all square submatrices S with det S != 0.
mpz_class subdeterminant_lcm(const IntegerMatrix& a,
                             std::size_t cap = kDefaultSubdeterminantCap);

/// Largest |det S| over all square submatrices.
mpz_class max_abs_subdeterminant(const IntegerMatrix& a,
                                 std::size_t cap = kDefaultSubdeterminantCap);

bool is_totally_unimodular(const IntegerMatrix& a,
                           std::size_t cap = kDefaultSubdeterminantCap);

/// Calls visit(rows, cols, det) for every square submatrix, sizes 1..min(d, n).
/// Enumeration stops early when visit returns false.
void for_each_subdeterminant(
    const IntegerMatrix& a, std::size_t cap,
    const std::function<bool(std::span<const std::size_t>, std::span<const std::size_t>,
                             const mpz_class&)>& visit);

/// Solution of the consistent system M y = rhs when M has full column rank,
/// empty optional otherwise (rank-deficient or inconsistent).
std::optional<RationalVector> solve_full_column_rank(const IntegerMatrix& m,
                                                     std::span<const Rational> rhs);

/// Reduced row echelon form over the rationals; `rows` holds only the
/// nonzero rows, each scaled so its pivot entry is 1.
struct RowEchelon {
    std::vector<std::size_t> pivots;
    std::vector<RationalVector> rows;
};
RowEchelon reduced_row_echelon(const IntegerMatrix& a);

/// Lexicographically ordered k-subsets of {0, ..., n-1}.
std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t k);

}  // namespace graverpath
