#include "graverpath/types.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace graverpath {

namespace {

[[noreturn]] void overflow() {
    throw ResourceError("integer overflow in 64-bit exact arithmetic");
}

void require_same_length(std::span<const Int> a, std::span<const Int> b) {
    if (a.size() != b.size()) throw InputError("vector length mismatch");
}

}  // namespace

Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) overflow();
    return r;
}

Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) overflow();
    return r;
}

Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) overflow();
    return r;
}

Int checked_neg(Int a) { return checked_sub(0, a); }

Int checked_abs(Int a) { return a < 0 ? checked_neg(a) : a; }

Int to_int(const mpz_class& v) {
    if (!v.fits_slong_p()) overflow();
    return static_cast<Int>(v.get_si());
}

IntVector add(std::span<const Int> a, std::span<const Int> b) {
    require_same_length(a, b);
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
    return r;
}

IntVector sub(std::span<const Int> a, std::span<const Int> b) {
    require_same_length(a, b);
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_sub(a[i], b[i]);
    return r;
}

IntVector negate(std::span<const Int> a) {
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_neg(a[i]);
    return r;
}

IntVector scale(std::span<const Int> a, Int factor) {
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_mul(a[i], factor);
    return r;
}

Int dot(std::span<const Int> a, std::span<const Int> b) {
    require_same_length(a, b);
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
    return s;
}

Int norm1(std::span<const Int> a) {
    Int s = 0;
    for (Int v : a) s = checked_add(s, checked_abs(v));
    return s;
}

Int norm_inf(std::span<const Int> a) {
    Int m = 0;
    for (Int v : a) m = std::max(m, checked_abs(v));
    return m;
}

Int gcd_of(std::span<const Int> a) {
    Int g = 0;
    for (Int v : a) g = std::gcd(g, checked_abs(v));
    return g;
}

bool is_zero(std::span<const Int> a) {
    return std::all_of(a.begin(), a.end(), [](Int v) { return v == 0; });
}

IntVector canonical_sign(std::span<const Int> a) {
    for (Int v : a) {
        if (v > 0) return IntVector(a.begin(), a.end());
        if (v < 0) return negate(a);
    }
    return IntVector(a.begin(), a.end());
}

IntVector primitive_canonical(std::span<const Int> a) {
    IntVector r = canonical_sign(a);
    Int g = gcd_of(r);
    if (g > 1)
        for (Int& v : r) v /= g;
    return r;
}

RationalVector to_rational(std::span<const Int> a) {
    RationalVector r;
    r.reserve(a.size());
    for (Int v : a) r.emplace_back(static_cast<long>(v));
    return r;
}

bool is_integral(std::span<const Rational> x) {
    return std::all_of(x.begin(), x.end(), [](const Rational& q) { return q.get_den() == 1; });
}

std::string to_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    return c.get_str();
}

std::string to_string(std::span<const Int> v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

Rational parse_rational(const std::string& text) {
    Rational q;
    if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0)
        throw InputError("not a rational number: '" + text + "'");
    q.canonicalize();
    return q;
}

std::int64_t ceil_log2(const Rational& q) {
    std::int64_t k = 0;
    mpz_class power = 1;
    // 2^k >= p/q  <=>  2^k * q >= p
    while (power * q.get_den() < q.get_num()) {
        power *= 2;
        ++k;
    }
    return k;
}

}  // namespace graverpath
