#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace graverpath {

// Matrix entries and test-set directions are 64-bit integers. Every
// operation on them goes through the checked helpers below, so a result is
// either exact or a ResourceError; nothing wraps silently.
using Int = std::int64_t;
using IntVector = std::vector<Int>;

// Points, step lengths and objective values are exact GMP rationals.
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Malformed or inconsistent input (maps to CLI exit code 2).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A desk-scale cap was exceeded (maps to CLI exit code 3).
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);
Int checked_neg(Int a);
Int checked_abs(Int a);

/// Converts an arbitrary-precision integer, throwing ResourceError if it does not fit.
Int to_int(const mpz_class& v);

IntVector add(std::span<const Int> a, std::span<const Int> b);
IntVector sub(std::span<const Int> a, std::span<const Int> b);
IntVector negate(std::span<const Int> a);
IntVector scale(std::span<const Int> a, Int factor);

Int dot(std::span<const Int> a, std::span<const Int> b);
Int norm1(std::span<const Int> a);
Int norm_inf(std::span<const Int> a);
Int gcd_of(std::span<const Int> a);
bool is_zero(std::span<const Int> a);

/// Divides out the entry gcd and flips sign so the first nonzero entry is positive.
IntVector primitive_canonical(std::span<const Int> a);

/// The one of {a, -a} whose first nonzero entry is positive.
IntVector canonical_sign(std::span<const Int> a);

RationalVector to_rational(std::span<const Int> a);
bool is_integral(std::span<const Rational> x);

/// "p" for integers, "p/q" otherwise; always canonical.
std::string to_string(const Rational& q);
std::string to_string(std::span<const Int> v);

Rational parse_rational(const std::string& text);

/// Smallest k >= 0 with 2^k >= q, for q > 0; returns 0 for q <= 1.
std::int64_t ceil_log2(const Rational& q);

}  // namespace graverpath
