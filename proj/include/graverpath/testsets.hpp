#pragma once

#include <cstddef>
#include <functional>
#include <string_view>
#include <vector>

#include "graverpath/linalg.hpp"
#include "graverpath/types.hpp"

namespace graverpath {

enum class TestSetKind { graver, circuits };

std::string_view to_string(TestSetKind kind);
TestSetKind parse_test_set_kind(std::string_view text);

/// A finite symmetric set of primitive kernel directions of `matrix`.
/// Elements are kept sorted lexicographically and contain both g and -g.
struct TestSet {
    IntegerMatrix matrix;
    TestSetKind kind;
    std::vector<IntVector> elements;

    std::size_t size() const { return elements.size(); }
    bool contains(std::span<const Int> v) const;
    Int max_norm_inf() const;
};

inline constexpr std::size_t kDefaultGraverCap = 200000;

/// u ⊑ v: same sign componentwise and |u_i| <= |v_i|.
bool conforms(std::span<const Int> u, std::span<const Int> v);

/// ⊑-minimal nonzero elements of ker(A) ∩ Z^n by Pottier-style completion
/// from a kernel lattice basis. Throws ResourceError once more than `cap`
/// vectors are held during completion.
TestSet graver_basis(const IntegerMatrix& a, std::size_t cap = kDefaultGraverCap);

/// Visits every z in ker(A) ∩ Z^n with ||z||_inf <= bound, zero included.
/// Walks the free coordinates of the reduced row echelon form, so the cost is
/// (2 bound + 1)^(n - rank A).
void for_each_kernel_point_in_box(const IntegerMatrix& a, Int bound,
                                  const std::function<void(std::span<const Int>)>& visit);

/// Brute-force Graver basis restricted to the box ||z||_inf <= bound.
TestSet graver_oracle(const IntegerMatrix& a, Int bound);

/// Primitive integer kernel vectors on every minimal dependent column set.
TestSet circuits(const IntegerMatrix& a);

struct IntegerTerm {
    Int multiplier;
    IntVector direction;
};

struct RationalTerm {
    Rational multiplier;
    IntVector direction;
};

/// Greedy sign-compatible decomposition z = sum alpha_i g_i with alpha_i g_i ⊑ z.
std::vector<IntegerTerm> decompose_integer_conformal(std::span<const Int> z,
                                                     const TestSet& graver);

/// Sign-compatible circuit decomposition over the rationals, at most |supp z| terms.
std::vector<RationalTerm> decompose_real_conformal(std::span<const Rational> z,
                                                   const TestSet& circuits);

/// max ||g||_1 over the Graver basis of the matrix with columns B g, g in G(A).
Int graver_complexity(const IntegerMatrix& a, const IntegerMatrix& b,
                      std::size_t cap = kDefaultGraverCap);

}  // namespace graverpath
