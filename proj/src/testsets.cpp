#include "graverpath/testsets.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>

namespace graverpath {

std::string_view to_string(TestSetKind kind) {
    return kind == TestSetKind::graver ? "graver" : "circuits";
}

TestSetKind parse_test_set_kind(std::string_view text) {
    if (text == "graver") return TestSetKind::graver;
    if (text == "circuits") return TestSetKind::circuits;
    throw InputError("unknown test set kind: " + std::string(text));
}

bool TestSet::contains(std::span<const Int> v) const {
    return std::binary_search(elements.begin(), elements.end(), IntVector(v.begin(), v.end()));
}

Int TestSet::max_norm_inf() const {
    Int m = 0;
    for (const auto& g : elements) m = std::max(m, norm_inf(g));
    return m;
}

bool conforms(std::span<const Int> u, std::span<const Int> v) {
    if (u.size() != v.size()) throw InputError("conformal order: length mismatch");
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == 0) continue;
        if (u[i] > 0 ? (v[i] < u[i]) : (v[i] > u[i])) return false;
    }
    return true;
}

namespace {

// Sign bitmasks give a cheap necessary test for u ⊑ v.
struct Signed {
    IntVector v;
    std::uint64_t pos = 0;
    std::uint64_t neg = 0;
    Int norm = 0;

    explicit Signed(IntVector vec) : v(std::move(vec)) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] > 0) pos |= std::uint64_t{1} << i;
            if (v[i] < 0) neg |= std::uint64_t{1} << i;
        }
        norm = norm1(v);
    }
};

bool signed_conforms(const Signed& u, const Signed& v) {
    if ((u.pos & ~v.pos) || (u.neg & ~v.neg) || u.norm > v.norm) return false;
    return conforms(u.v, v.v);
}

bool sign_compatible(const Signed& a, const Signed& b) {
    return !(a.pos & b.neg) && !(a.neg & b.pos);
}

IntVector normal_form(IntVector s, const std::vector<Signed>& reducers) {
    while (true) {
        if (is_zero(s)) return s;
        Signed cur(s);
        const Signed* hit = nullptr;
        for (const auto& g : reducers) {
            if (signed_conforms(g, cur)) {
                hit = &g;
                break;
            }
        }
        if (!hit) return s;
        s = sub(s, hit->v);
    }
}

std::vector<IntVector> minimal_elements(std::vector<Signed> set) {
    std::sort(set.begin(), set.end(), [](const Signed& a, const Signed& b) {
        return a.norm != b.norm ? a.norm < b.norm : a.v < b.v;
    });
    std::vector<Signed> kept;
    for (auto& s : set) {
        if (s.norm == 0) continue;
        if (!kept.empty() && kept.back().v == s.v) continue;
        bool reducible = std::any_of(kept.begin(), kept.end(),
                                     [&](const Signed& g) { return signed_conforms(g, s); });
        if (!reducible) kept.push_back(std::move(s));
    }
    std::vector<IntVector> out;
    out.reserve(kept.size());
    for (auto& s : kept) out.push_back(std::move(s.v));
    std::sort(out.begin(), out.end());
    return out;
}

void require_mask_width(const IntegerMatrix& a) {
    if (a.cols() > 64) throw ResourceError("test sets support at most 64 columns");
}

}  // namespace

TestSet graver_basis(const IntegerMatrix& a, std::size_t cap) {
    require_mask_width(a);
    std::vector<Signed> g;
    for (const auto& b : kernel_lattice_basis(a)) {
        g.emplace_back(b);
        g.emplace_back(negate(b));
    }
    if (g.size() > cap)
        throw ResourceError("Graver completion exceeded cap of " + std::to_string(cap) + " vectors");
    // Completion: every sum of a critical pair must reduce to zero.
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (sign_compatible(g[i], g[j])) continue;
            IntVector s = add(g[i].v, g[j].v);
            if (is_zero(s)) continue;
            IntVector r = normal_form(std::move(s), g);
            if (is_zero(r)) continue;
            if (g.size() >= cap)
                throw ResourceError("Graver completion exceeded cap of " + std::to_string(cap) +
                                    " vectors");
            g.emplace_back(std::move(r));
        }
    }
    return TestSet{a, TestSetKind::graver, minimal_elements(std::move(g))};
}

void for_each_kernel_point_in_box(const IntegerMatrix& a, Int bound,
                                  const std::function<void(std::span<const Int>)>& visit) {
    if (bound < 0) throw InputError("box bound must be nonnegative");
    const std::size_t n = a.cols();
    RowEchelon rref = reduced_row_echelon(a);
    std::vector<bool> is_pivot(n, false);
    for (auto p : rref.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    // Pivot row i reads den_i * x_{p_i} = -sum_f num_if x_f with integer data.
    struct PivotRow {
        std::size_t col;
        Int den;
        IntVector num;  // indexed like free_cols
    };
    std::vector<PivotRow> rows;
    for (std::size_t i = 0; i < rref.pivots.size(); ++i) {
        mpz_class l = 1;
        for (auto f : free_cols) {
            mpz_class den = rref.rows[i][f].get_den();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
        }
        PivotRow row{rref.pivots[i], to_int(l), {}};
        for (auto f : free_cols) {
            Rational scaled = rref.rows[i][f] * Rational(l);
            row.num.push_back(to_int(scaled.get_num()));
        }
        rows.push_back(std::move(row));
    }

    IntVector z(n, 0);
    IntVector free_vals(free_cols.size(), -bound);
    while (true) {
        for (std::size_t k = 0; k < free_cols.size(); ++k) z[free_cols[k]] = free_vals[k];
        bool ok = true;
        for (const auto& row : rows) {
            Int s = 0;
            for (std::size_t k = 0; k < free_cols.size(); ++k)
                s = checked_sub(s, checked_mul(row.num[k], free_vals[k]));
            if (s % row.den != 0) {
                ok = false;
                break;
            }
            Int x = s / row.den;
            if (x > bound || x < -bound) {
                ok = false;
                break;
            }
            z[row.col] = x;
        }
        if (ok) visit(z);
        std::size_t k = 0;
        while (k < free_vals.size() && free_vals[k] == bound) free_vals[k++] = -bound;
        if (k == free_vals.size()) break;
        ++free_vals[k];
    }
}

TestSet graver_oracle(const IntegerMatrix& a, Int bound) {
    require_mask_width(a);
    std::vector<Signed> points;
    for_each_kernel_point_in_box(a, bound, [&](std::span<const Int> z) {
        if (!is_zero(z)) points.emplace_back(IntVector(z.begin(), z.end()));
    });
    // Every ⊑-smaller kernel vector lies in the same box, so minimality
    // within the box is minimality in the lattice.
    return TestSet{a, TestSetKind::graver, minimal_elements(std::move(points))};
}

TestSet circuits(const IntegerMatrix& a) {
    const std::size_t n = a.cols();
    const std::size_t max_size = std::min(n, rank(a) + 1);
    std::set<IntVector> found;
    for (std::size_t k = 1; k <= max_size; ++k) {
        for (const auto& cols : subsets_of_size(n, k)) {
            IntegerMatrix sub = a.select_columns(cols);
            if (rank(sub) != k - 1) continue;
            auto kernel = kernel_lattice_basis(sub);
            const IntVector& local = kernel.front();
            if (std::any_of(local.begin(), local.end(), [](Int v) { return v == 0; })) continue;
            IntVector full(n, 0);
            for (std::size_t j = 0; j < k; ++j) full[cols[j]] = local[j];
            full = primitive_canonical(full);
            found.insert(negate(full));
            found.insert(std::move(full));
        }
    }
    return TestSet{a, TestSetKind::circuits, std::vector<IntVector>(found.begin(), found.end())};
}

std::vector<IntegerTerm> decompose_integer_conformal(std::span<const Int> z,
                                                     const TestSet& graver) {
    if (z.size() != graver.matrix.cols()) throw InputError("vector length mismatch");
    if (is_zero(z)) throw InputError("cannot decompose the zero vector");
    if (!is_zero(graver.matrix.apply(z))) throw InputError("vector is not in ker(A)");

    std::vector<IntegerTerm> terms;
    IntVector residual(z.begin(), z.end());
    while (!is_zero(residual)) {
        auto it = std::find_if(graver.elements.begin(), graver.elements.end(),
                               [&](const IntVector& g) { return conforms(g, residual); });
        if (it == graver.elements.end())
            throw InputError("test set has no element conforming to the residual");
        const IntVector& g = *it;
        Int alpha = 0;
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (g[i] == 0) continue;
            Int ratio = residual[i] / g[i];
            alpha = alpha == 0 ? ratio : std::min(alpha, ratio);
        }
        residual = sub(residual, scale(g, alpha));
        terms.push_back({alpha, g});
    }
    return terms;
}

std::vector<RationalTerm> decompose_real_conformal(std::span<const Rational> z,
                                                   const TestSet& circuits) {
    const std::size_t n = circuits.matrix.cols();
    if (z.size() != n) throw InputError("vector length mismatch");
    if (std::all_of(z.begin(), z.end(), [](const Rational& q) { return q == 0; }))
        throw InputError("cannot decompose the zero vector");
    for (const auto& v : circuits.matrix.apply(z))
        if (v != 0) throw InputError("vector is not in ker(A)");

    std::vector<RationalTerm> terms;
    RationalVector residual(z.begin(), z.end());
    auto within = [&](const IntVector& g) {
        for (std::size_t i = 0; i < n; ++i) {
            if (g[i] == 0) continue;
            if (residual[i] == 0 || (g[i] > 0) != (residual[i] > 0)) return false;
        }
        return true;
    };
    while (std::any_of(residual.begin(), residual.end(), [](const Rational& q) { return q != 0; })) {
        auto it = std::find_if(circuits.elements.begin(), circuits.elements.end(), within);
        if (it == circuits.elements.end())
            throw InputError("circuit set has no element conforming to the residual");
        const IntVector& g = *it;
        Rational alpha = -1;
        for (std::size_t i = 0; i < n; ++i) {
            if (g[i] == 0) continue;
            Rational ratio = residual[i] / Rational(static_cast<long>(g[i]));
            if (alpha < 0 || ratio < alpha) alpha = ratio;
        }
        for (std::size_t i = 0; i < n; ++i)
            if (g[i] != 0) residual[i] -= alpha * Rational(static_cast<long>(g[i]));
        terms.push_back({alpha, g});
    }
    return terms;
}

Int graver_complexity(const IntegerMatrix& a, const IntegerMatrix& b, std::size_t cap) {
    if (a.cols() != b.cols()) throw InputError("A and B must have the same column count");
    TestSet ga = graver_basis(a, cap);
    if (ga.elements.empty()) return 0;
    std::vector<IntVector> columns;
    for (const auto& g : ga.elements) columns.push_back(b.apply(g));
    TestSet lifted = graver_basis(IntegerMatrix::from_columns(columns), cap);
    Int best = 0;
    for (const auto& g : lifted.elements) best = std::max(best, norm1(g));
    return best;
}

}  // namespace graverpath
