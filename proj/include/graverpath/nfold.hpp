#pragma once

#include <optional>

#include "graverpath/engine.hpp"

namespace graverpath {

/// Bricks of an N-fold matrix: B repeated along the top, A on the diagonal.
struct NFoldSpec {
    IntegerMatrix a;  // d_A x t
    IntegerMatrix b;  // d_B x t
    std::size_t n = 1;

    NFoldSpec(IntegerMatrix a, IntegerMatrix b, std::size_t n);

    std::size_t brick_width() const { return a.cols(); }
    std::size_t rows() const { return b.rows() + n * a.rows(); }
    std::size_t cols() const { return n * a.cols(); }
};

inline constexpr std::size_t kDefaultNFoldCap = 4;

IntegerMatrix build_nfold(const NFoldSpec& spec);

/// Auxiliary problem whose optimum is 0 exactly when the original is feasible.
/// Each extended brick is [x | s_A+ | s_A- | s_B+ | s_B-].
struct PhaseOne {
    NFoldSpec extended;
    Instance instance;
    RationalVector x0;
};

PhaseOne build_phase1(const NFoldSpec& spec, std::span<const Int> b, std::span<const Int> u,
                      Domain domain = Domain::integer);

/// Original coordinates of an extended phase-one point.
RationalVector drop_auxiliary(const NFoldSpec& spec, std::span<const Rational> extended);

struct NFoldReport {
    bool feasible = false;
    Rational phase1_optimum;
    std::size_t phase1_steps = 0;
    std::size_t phase2_steps = 0;
    std::size_t graver_size = 0;     // |G([A,B]^(N))|
    std::size_t test_set_size = 0;   // test set used in phase two
    Int graver_complexity = 0;       // g(A,B)
    std::optional<RationalVector> start;
    std::optional<RationalVector> optimum;
    std::optional<Rational> optimum_value;
    AugmentationTrace phase1_trace;
    AugmentationTrace phase2_trace;
};

/// Phase one then phase two, both by steepest-descent augmentation.
NFoldReport solve_nfold(const NFoldSpec& spec, std::span<const Int> b, std::span<const Int> c,
                        std::span<const Int> u, Domain domain,
                        std::size_t n_cap = kDefaultNFoldCap,
                        std::size_t graver_cap = kDefaultGraverCap);

}  // namespace graverpath
