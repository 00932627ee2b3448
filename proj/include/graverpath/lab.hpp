#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graverpath/engine.hpp"

namespace graverpath {

inline constexpr std::uint64_t kDefaultEnumerationCap = 5'000'000;

struct Arc {
    std::string tail;
    std::string head;
    Int capacity = 0;
};

/// Max-flow as a standard-form minimization: node-arc incidence matrix with
/// the last node's row dropped, plus an auxiliary sink -> source arc whose
/// flow is maximized.
struct FlowModel {
    Instance instance;
    std::vector<std::string> nodes;  // row order; the last node's row is dropped
    std::size_t auxiliary_arc = 0;   // column of the sink -> source arc
};

FlowModel maxflow_instance(const std::vector<Arc>& arcs, const std::string& source,
                           const std::string& sink);

/// Shortest-augmenting-path (Edmonds-Karp) max-flow value.
Int augmenting_path_max_flow(const std::vector<Arc>& arcs, const std::string& source,
                             const std::string& sink);

/// Connected random network on nodes s, v1, ..., t with capacities in [1, cap_bound].
std::vector<Arc> random_network(std::uint64_t seed, std::size_t nodes, std::size_t extra_arcs,
                                Int cap_bound);

/// Balanced 2-way transportation problem. Rows are the supply equations
/// followed by the demand equations with the last (redundant) one dropped;
/// variable (i, j) sits at column i * |demands| + j.
Instance transportation_instance(std::span<const Int> supplies, std::span<const Int> demands,
                                 std::optional<IntVector> cost = std::nullopt);

/// Feasible start for transportation_instance by the northwest-corner rule.
RationalVector northwest_corner(std::span<const Int> supplies, std::span<const Int> demands);

/// Node-arc incidence matrix (+1 tail, -1 head) of a random connected digraph.
IntegerMatrix random_incidence_matrix(std::uint64_t seed, std::size_t nodes,
                                      std::size_t extra_arcs);

struct OracleResult {
    bool feasible = false;
    RationalVector x;    // lexicographically smallest minimizer
    Rational objective;
};

/// Every integer point of the box satisfying A x = b, in lexicographic order.
std::vector<IntVector> feasible_lattice_points(const Instance& inst,
                                               std::uint64_t cap = kDefaultEnumerationCap);

/// Every vertex of {A x = b, 0 <= x <= u}, lexicographically sorted.
std::vector<RationalVector> enumerate_vertices(const Instance& inst,
                                               std::uint64_t cap = kDefaultEnumerationCap);

/// Exhaustive optimum: lattice points for integer instances, vertices for real ones.
OracleResult brute_force_optimum(const Instance& inst, std::uint64_t cap = kDefaultEnumerationCap);

/// Largest |x_i| over feasible lattice points (integer) or vertices (real).
Rational gamma(const Instance& inst, std::uint64_t cap = kDefaultEnumerationCap);

struct GeneratedInstance {
    Instance instance;
    RationalVector x0;
};

/// Seeded random instance with b = A x_bar for a random box point x_bar,
/// which is returned as the feasible start.
GeneratedInstance random_instance(std::uint64_t seed, std::size_t d, std::size_t n,
                                  Int entry_bound, Int u_bound,
                                  Domain domain = Domain::integer);

/// Seeded random matrix with entries in [-entry_bound, entry_bound].
IntegerMatrix random_matrix(std::uint64_t seed, std::size_t d, std::size_t n, Int entry_bound);

}  // namespace graverpath
