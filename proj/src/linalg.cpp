#include "graverpath/linalg.hpp"

#include <algorithm>
#include <utility>

namespace graverpath {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0) {
    if (rows == 0 || cols == 0) throw InputError("matrix must be at least 1x1");
}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<Int>> rows)
    : IntegerMatrix(rows.size(), rows.size() ? rows.begin()->size() : 0) {
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != cols_) throw InputError("ragged matrix rows");
        std::size_t c = 0;
        for (Int v : row) (*this)(r, c++) = v;
        ++r;
    }
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<IntVector>& rows) {
    if (rows.empty() || rows.front().empty()) throw InputError("matrix must be at least 1x1");
    IntegerMatrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_) throw InputError("ragged matrix rows");
        std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + r * m.cols_);
    }
    return m;
}

IntegerMatrix IntegerMatrix::from_columns(const std::vector<IntVector>& columns) {
    if (columns.empty() || columns.front().empty())
        throw InputError("matrix must be at least 1x1");
    IntegerMatrix m(columns.front().size(), columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != m.rows_) throw InputError("ragged matrix columns");
        for (std::size_t r = 0; r < m.rows_; ++r) m(r, c) = columns[c][r];
    }
    return m;
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntVector IntegerMatrix::row(std::size_t r) const {
    return IntVector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

IntVector IntegerMatrix::column(std::size_t c) const {
    IntVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

std::vector<IntVector> IntegerMatrix::row_list() const {
    std::vector<IntVector> out;
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
    return out;
}

IntVector IntegerMatrix::apply(std::span<const Int> x) const {
    if (x.size() != cols_) throw InputError("matrix-vector dimension mismatch");
    IntVector y(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            y[r] = checked_add(y[r], checked_mul((*this)(r, c), x[c]));
    return y;
}

RationalVector IntegerMatrix::apply(std::span<const Rational> x) const {
    if (x.size() != cols_) throw InputError("matrix-vector dimension mismatch");
    RationalVector y(rows_, Rational(0));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if ((*this)(r, c) != 0) y[r] += Rational(static_cast<long>((*this)(r, c))) * x[c];
    return y;
}

IntegerMatrix IntegerMatrix::select_columns(std::span<const std::size_t> cols) const {
    IntegerMatrix m(rows_, cols.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t j = 0; j < cols.size(); ++j) m(r, j) = (*this)(r, cols[j]);
    return m;
}

bool IntegerMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Int v) { return v == 0; });
}

namespace {

using RationalRows = std::vector<RationalVector>;

RationalRows to_rational_rows(const IntegerMatrix& a) {
    RationalRows m(a.rows(), RationalVector(a.cols()));
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) m[r][c] = static_cast<long>(a(r, c));
    return m;
}

// Reduces m in place to row echelon form over the first `width` columns;
// returns the pivot columns.
std::vector<std::size_t> echelonize(RationalRows& m, std::size_t width) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < width && row < m.size(); ++col) {
        std::size_t p = row;
        while (p < m.size() && m[p][col] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[row]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rational f = m[r][col] / m[row][col];
            for (std::size_t c = col; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

// Reduces b against a to a shorter 1-norm when possible; true if b changed.
bool reduce_pair(IntVector& b, const IntVector& a) {
    Int best = norm1(b);
    Int best_q = 0;
    mpz_class num = 0, den = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        num += mpz_class(static_cast<long>(a[i])) * b[i];
        den += mpz_class(static_cast<long>(a[i])) * a[i];
    }
    if (den == 0) return false;
    mpz_class center;
    mpz_fdiv_q(center.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    Int q0 = to_int(center);
    for (Int q = q0 - 1; q <= q0 + 2; ++q) {
        if (q == 0) continue;
        Int candidate = norm1(sub(b, scale(a, q)));
        if (candidate < best) {
            best = candidate;
            best_q = q;
        }
    }
    if (best_q == 0) return false;
    b = sub(b, scale(a, best_q));
    return true;
}

}  // namespace

std::size_t rank(const IntegerMatrix& a) {
    RationalRows m = to_rational_rows(a);
    return echelonize(m, a.cols()).size();
}

RowEchelon reduced_row_echelon(const IntegerMatrix& a) {
    RationalRows m = to_rational_rows(a);
    RowEchelon out;
    out.pivots = echelonize(m, a.cols());
    for (std::size_t i = 0; i < out.pivots.size(); ++i) {
        Rational p = m[i][out.pivots[i]];
        for (auto& v : m[i]) v /= p;
        out.rows.push_back(std::move(m[i]));
    }
    return out;
}

std::size_t column_rank(const IntegerMatrix& a, std::span<const std::size_t> cols) {
    if (cols.empty()) return 0;
    return rank(a.select_columns(cols));
}

mpz_class determinant(const IntegerMatrix& a) {
    if (a.rows() != a.cols()) throw InputError("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m[r][c] = static_cast<long>(a(r, c));
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[p], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

std::vector<IntVector> kernel_lattice_basis(const IntegerMatrix& a) {
    const std::size_t d = a.rows(), n = a.cols();
    std::vector<std::vector<mpz_class>> w(d, std::vector<mpz_class>(n));
    std::vector<std::vector<mpz_class>> u(n, std::vector<mpz_class>(n, 0));  // u[row][col]
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < n; ++c) w[r][c] = static_cast<long>(a(r, c));
    for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;

    auto swap_cols = [&](std::size_t i, std::size_t j) {
        for (auto& row : w) std::swap(row[i], row[j]);
        for (auto& row : u) std::swap(row[i], row[j]);
    };
    auto axpy_col = [&](std::size_t target, std::size_t source, const mpz_class& q) {
        for (auto& row : w) row[target] -= q * row[source];
        for (auto& row : u) row[target] -= q * row[source];
    };

    // Unimodular column operations bring A to lower echelon form A U = [H 0].
    std::size_t pivot = 0;
    for (std::size_t r = 0; r < d && pivot < n; ++r) {
        while (true) {
            std::size_t best = n;
            for (std::size_t c = pivot; c < n; ++c)
                if (w[r][c] != 0 && (best == n || abs(w[r][c]) < abs(w[r][best]))) best = c;
            if (best == n) break;
            swap_cols(pivot, best);
            bool done = true;
            for (std::size_t c = pivot + 1; c < n; ++c) {
                if (w[r][c] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), w[r][c].get_mpz_t(), w[r][pivot].get_mpz_t());
                axpy_col(c, pivot, q);
                if (w[r][c] != 0) done = false;
            }
            if (done) {
                ++pivot;
                break;
            }
        }
    }

    std::vector<IntVector> basis;
    for (std::size_t c = pivot; c < n; ++c) {
        IntVector v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = to_int(u[i][c]);
        basis.push_back(std::move(v));
    }

    // Pairwise 1-norm reduction keeps the completion seeds short.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = 0; j < basis.size(); ++j)
                if (i != j && reduce_pair(basis[i], basis[j])) changed = true;
    }
    for (auto& v : basis) v = canonical_sign(v);
    std::sort(basis.begin(), basis.end());
    return basis;
}

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        out.push_back(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

void for_each_subdeterminant(
    const IntegerMatrix& a, std::size_t cap,
    const std::function<bool(std::span<const std::size_t>, std::span<const std::size_t>,
                             const mpz_class&)>& visit) {
    const std::size_t size_limit = std::min(a.rows(), a.cols());
    if (size_limit > cap)
        throw ResourceError("subdeterminant enumeration refused: min(d, n) = " +
                            std::to_string(size_limit) + " exceeds cap " + std::to_string(cap));
    for (std::size_t k = 1; k <= size_limit; ++k) {
        auto row_sets = subsets_of_size(a.rows(), k);
        auto col_sets = subsets_of_size(a.cols(), k);
        for (const auto& rs : row_sets) {
            for (const auto& cs : col_sets) {
                IntegerMatrix sub(k, k);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) sub(i, j) = a(rs[i], cs[j]);
                if (!visit(rs, cs, determinant(sub))) return;
            }
        }
    }
}

mpz_class subdeterminant_lcm(const IntegerMatrix& a, std::size_t cap) {
    if (a.is_zero()) throw InputError("subdeterminant lcm undefined for the zero matrix");
    mpz_class l = 1;
    for_each_subdeterminant(a, cap, [&](auto, auto, const mpz_class& det) {
        if (det != 0) {
            mpz_class ad = abs(det);
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), ad.get_mpz_t());
        }
        return true;
    });
    return l;
}

mpz_class max_abs_subdeterminant(const IntegerMatrix& a, std::size_t cap) {
    mpz_class best = 0;
    for_each_subdeterminant(a, cap, [&](auto, auto, const mpz_class& det) {
        if (abs(det) > best) best = abs(det);
        return true;
    });
    return best;
}

bool is_totally_unimodular(const IntegerMatrix& a, std::size_t cap) {
    bool tu = true;
    for_each_subdeterminant(a, cap, [&](auto, auto, const mpz_class& det) {
        if (det < -1 || det > 1) tu = false;
        return tu;
    });
    return tu;
}

std::optional<RationalVector> solve_full_column_rank(const IntegerMatrix& m,
                                                     std::span<const Rational> rhs) {
    if (rhs.size() != m.rows()) throw InputError("right-hand side length mismatch");
    const std::size_t k = m.cols();
    RationalRows aug = to_rational_rows(m);
    for (std::size_t r = 0; r < m.rows(); ++r) aug[r].push_back(rhs[r]);
    auto pivots = echelonize(aug, k);
    if (pivots.size() < k) return std::nullopt;
    for (std::size_t r = k; r < aug.size(); ++r)
        if (aug[r][k] != 0) return std::nullopt;
    RationalVector y(k);
    for (std::size_t i = 0; i < k; ++i) y[i] = aug[i][k] / aug[i][pivots[i]];
    return y;
}

}  // namespace graverpath
