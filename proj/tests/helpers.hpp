#pragma once

#include <set>

#include "graverpath/linalg.hpp"
#include "graverpath/types.hpp"

namespace testing {

using namespace graverpath;

inline std::set<IntVector> as_set(const std::vector<IntVector>& v) { return {v.begin(), v.end()}; }

inline std::set<IntVector> with_negatives(std::initializer_list<IntVector> reps) {
    std::set<IntVector> s;
    for (const auto& r : reps) {
        s.insert(r);
        s.insert(negate(r));
    }
    return s;
}

// True when v is an integer combination of the given lattice basis.
inline bool in_lattice(const std::vector<IntVector>& basis, std::span<const Int> v) {
    if (basis.empty()) return is_zero(v);
    auto y = solve_full_column_rank(IntegerMatrix::from_columns(basis), to_rational(v));
    return y && is_integral(*y);
}

inline RationalVector rv(std::initializer_list<long> xs) {
    RationalVector v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

}  // namespace testing
