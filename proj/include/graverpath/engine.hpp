#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graverpath/linalg.hpp"
#include "graverpath/testsets.hpp"
#include "graverpath/types.hpp"

namespace graverpath {

enum class Domain { integer, real };
enum class Rule { deepest, dantzig, steepest };

std::string_view to_string(Domain domain);
std::string_view to_string(Rule rule);
Domain parse_domain(std::string_view text);
Rule parse_rule(std::string_view text);

/// min { c^T x : A x = b, 0 <= x <= u, x in Z^n or R^n } with a finite box.
struct Instance {
    std::string name;
    IntegerMatrix a;
    IntVector b;
    IntVector c;
    IntVector u;
    Domain domain = Domain::integer;

    Instance(std::string name, IntegerMatrix a, IntVector b, IntVector c, IntVector u,
             Domain domain);

    std::size_t rows() const { return a.rows(); }
    std::size_t cols() const { return a.cols(); }
    Instance with_cost(IntVector cost) const;
    Instance with_domain(Domain d) const;
};

Rational objective(const Instance& inst, std::span<const Rational> x);
bool is_feasible(std::span<const Rational> x, const Instance& inst);

/// Largest feasible t >= 0 along z from x; floored for integer instances.
Rational max_step(std::span<const Rational> x, std::span<const Int> z, const Instance& inst);

/// (-c^T z) / ||z||_1
Rational steepness(std::span<const Int> z, std::span<const Int> c);

struct Augmentation {
    IntVector direction;
    Rational alpha;
};

/// Best improving applicable direction of `tests` under `rule`, or nothing if
/// the test set certifies x optimal. Ties go to the lexicographically smallest
/// direction.
std::optional<Augmentation> pick_direction(std::span<const Rational> x, const Instance& inst,
                                           const TestSet& tests, Rule rule);

bool is_optimal(std::span<const Rational> x, const Instance& inst, const TestSet& tests);

struct TraceStep {
    IntVector direction;
    Rational alpha;
    Rational objective;
    Rational steepness;
    bool cleanup = false;
};

struct AugmentationTrace {
    Rule rule = Rule::steepest;
    Rational start_objective;
    std::vector<TraceStep> steps;

    std::size_t rule_steps() const;
    std::size_t cleanup_steps() const;
};

struct SolveResult {
    RationalVector x;
    AugmentationTrace trace;
    /// LP deepest/Dantzig only: times the small-progress test fired at a
    /// vertex that the circuits then showed to be non-optimal.
    std::size_t threshold_misfires = 0;
};

/// Default test set for the instance: Graver basis for integer, circuits for real.
TestSet default_test_set(const Instance& inst, std::size_t cap = kDefaultGraverCap);

/// Augments x0 to an optimum under `rule`. `tests` must be the Graver basis
/// (integer) or the circuit set (real) of inst.a.
SolveResult augment_to_optimality(const Instance& inst, std::span<const Rational> x0, Rule rule,
                                  const TestSet& tests);
SolveResult augment_to_optimality(const Instance& inst, std::span<const Rational> x0, Rule rule);

/// Columns of A at coordinates strictly inside their bounds are independent.
bool is_vertex(std::span<const Rational> x, const Instance& inst);

struct CleanupResult {
    RationalVector x;
    std::vector<TraceStep> steps;
};

/// Walks from x to a vertex with no larger objective by maximal circuit steps
/// inside the smallest face containing the current point.
CleanupResult vertex_cleanup(std::span<const Rational> x, const Instance& inst,
                             const TestSet& circuits);

struct CircuitDistance {
    std::size_t steps = 0;
    bool reached_target = true;
};

/// Cost vector that makes `vertex` the unique optimum candidate: 1 where the
/// vertex sits at 0, -1 where it sits at u, 0 elsewhere.
IntVector vertex_cost(std::span<const Rational> vertex, const Instance& inst);

/// Steepest-descent augmentations from start until the vertex_cost of target
/// is optimal.
CircuitDistance circuit_distance(const Instance& inst, std::span<const Rational> start,
                                 std::span<const Rational> target, const TestSet& circuits);

}  // namespace graverpath
