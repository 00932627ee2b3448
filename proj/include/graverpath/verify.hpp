#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graverpath/engine.hpp"
#include "graverpath/lab.hpp"

namespace graverpath {

/// One row of a bound table. `group` names the family the row belongs to
/// (e.g. "graver", "ilp-steepest", "lp-dantzig") so callers can aggregate.
struct BoundCheck {
    std::string group;
    std::string name;
    bool passed = true;
    std::string detail;
};

struct VerificationReport {
    std::string instance;
    std::vector<BoundCheck> checks;

    bool passed() const;
    bool passed(std::string_view group) const;
    /// First failing row, or nullptr.
    const BoundCheck* first_failure() const;
};

struct VerifyOptions {
    /// Oracle box for the Graver and overall-steepest checks; defaults to the
    /// largest entry of the computed Graver basis.
    std::optional<Int> box_bound;
    Int decomposition_box = 3;
    std::size_t overall_steepest_max_n = 4;
    std::size_t minimal_decomposition_max_n = 4;
    std::size_t graver_cap = kDefaultGraverCap;
    std::uint64_t enumeration_cap = kDefaultEnumerationCap;
};

/// lcm of the nonzero subdeterminants, or 1 for the zero matrix.
mpz_class delta(const IntegerMatrix& a);

/// 2n - 2, but at least 1 so one-column instances stay meaningful.
Int decomposition_length(std::size_t n);

/// Smallest number of terms, up to `limit`, of a sign-compatible
/// decomposition z = sum alpha_i g_i over distinct Graver elements with
/// positive integer alpha_i, by exhaustive search. Empty if none fits.
std::optional<std::size_t> minimal_conformal_terms(std::span<const Int> z, const TestSet& graver,
                                                   std::size_t limit);

/// Graver basis against the box oracle, structural properties of both test
/// sets, and the TU coincidence when A is totally unimodular.
std::vector<BoundCheck> check_test_sets(const TestSet& graver, const TestSet& circuit_set,
                                        Int box_bound);

/// Integer and real decompositions of every kernel vector in the box.
std::vector<BoundCheck> check_decompositions(const TestSet& graver, const TestSet& circuit_set,
                                             Int box, std::size_t minimal_max_n);

/// Replays a trace from x0: strict decrease, maximal steps, integrality, and
/// that the replayed end point is `x_end`.
std::vector<BoundCheck> check_trace_shape(const std::string& group, const Instance& inst,
                                          std::span<const Rational> x0,
                                          const SolveResult& result);

/// All three rules on an integer instance, checked against the oracle optimum.
std::vector<BoundCheck> check_integer_rules(const Instance& inst, std::span<const Rational> x0,
                                            const TestSet& graver, const TestSet& circuit_set,
                                            const VerifyOptions& options);

/// All three rules on a real instance, checked against the vertex oracle.
std::vector<BoundCheck> check_real_rules(const Instance& inst, std::span<const Rational> x0,
                                         const TestSet& circuit_set,
                                         const VerifyOptions& options);

/// The complete bound table for one instance and start point.
VerificationReport verify_instance(const Instance& inst, std::span<const Rational> x0,
                                   const VerifyOptions& options = {});

/// Start used when an instance file has none: the lexicographically smallest
/// feasible lattice point (integer) or vertex (real). Empty when infeasible.
std::optional<RationalVector> default_start(const Instance& inst,
                                            std::uint64_t cap = kDefaultEnumerationCap);

struct DiameterPair {
    std::size_t from = 0;
    std::size_t to = 0;
    std::size_t steps = 0;
    bool reached_target = true;
};

struct DiameterReport {
    std::vector<RationalVector> vertices;
    std::vector<DiameterPair> pairs;  // every ordered pair of distinct vertices
    bool totally_unimodular = false;
    Int bound = 0;                    // n (r+1) (n-r), r = rank A
    std::size_t max_steps = 0;
    std::size_t max_round_trip = 0;
    std::vector<BoundCheck> checks;   // bound rows apply only to TU matrices
};

DiameterReport circuit_diameter(const Instance& inst,
                                std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace graverpath
