#include "graverpath/nfold.hpp"

namespace graverpath {

NFoldSpec::NFoldSpec(IntegerMatrix a_, IntegerMatrix b_, std::size_t n_)
    : a(std::move(a_)), b(std::move(b_)), n(n_) {
    if (a.cols() != b.cols()) throw InputError("N-fold bricks need equal column counts");
    if (n == 0) throw InputError("N must be positive");
}

IntegerMatrix build_nfold(const NFoldSpec& spec) {
    const std::size_t t = spec.brick_width(), db = spec.b.rows(), da = spec.a.rows();
    IntegerMatrix m(spec.rows(), spec.cols());
    for (std::size_t k = 0; k < spec.n; ++k) {
        for (std::size_t j = 0; j < t; ++j) {
            for (std::size_t r = 0; r < db; ++r) m(r, k * t + j) = spec.b(r, j);
            for (std::size_t r = 0; r < da; ++r) m(db + k * da + r, k * t + j) = spec.a(r, j);
        }
    }
    return m;
}

namespace {

// Brick layout of the extended problem: [x (t) | s_A+ | s_A- | s_B+ | s_B-].
NFoldSpec extend(const NFoldSpec& spec) {
    const std::size_t t = spec.brick_width(), da = spec.a.rows(), db = spec.b.rows();
    const std::size_t width = t + 2 * da + 2 * db;
    IntegerMatrix a_bar(da, width), b_bar(db, width);
    for (std::size_t j = 0; j < t; ++j) {
        for (std::size_t r = 0; r < da; ++r) a_bar(r, j) = spec.a(r, j);
        for (std::size_t r = 0; r < db; ++r) b_bar(r, j) = spec.b(r, j);
    }
    for (std::size_t r = 0; r < da; ++r) {
        a_bar(r, t + r) = 1;
        a_bar(r, t + da + r) = -1;
    }
    for (std::size_t r = 0; r < db; ++r) {
        b_bar(r, t + 2 * da + r) = 1;
        b_bar(r, t + 2 * da + db + r) = -1;
    }
    return NFoldSpec(std::move(a_bar), std::move(b_bar), spec.n);
}

}  // namespace

PhaseOne build_phase1(const NFoldSpec& spec, std::span<const Int> b, std::span<const Int> u,
                      Domain domain) {
    if (b.size() != spec.rows()) throw InputError("right-hand side has the wrong length");
    if (u.size() != spec.cols()) throw InputError("upper bounds have the wrong length");
    const std::size_t t = spec.brick_width(), da = spec.a.rows(), db = spec.b.rows();
    NFoldSpec ext = extend(spec);
    const std::size_t width = ext.brick_width();
    const Int aux_bound = norm1(b);

    IntVector cost(ext.cols(), 0), bounds(ext.cols(), aux_bound);
    RationalVector x0(ext.cols(), Rational(0));
    for (std::size_t k = 0; k < spec.n; ++k) {
        const std::size_t base = k * width;
        for (std::size_t j = 0; j < t; ++j) bounds[base + j] = u[k * t + j];
        for (std::size_t j = t; j < width; ++j) cost[base + j] = 1;
        for (std::size_t r = 0; r < da; ++r) {
            Int rhs = b[db + k * da + r];
            x0[base + t + (rhs >= 0 ? r : da + r)] = static_cast<long>(checked_abs(rhs));
        }
    }
    // The B-row slack load sits entirely in the first brick.
    for (std::size_t r = 0; r < db; ++r) {
        Int rhs = b[r];
        x0[t + 2 * da + (rhs >= 0 ? r : db + r)] = static_cast<long>(checked_abs(rhs));
    }

    Instance inst("phase-one", build_nfold(ext), IntVector(b.begin(), b.end()), std::move(cost),
                  std::move(bounds), domain);
    return PhaseOne{std::move(ext), std::move(inst), std::move(x0)};
}

RationalVector drop_auxiliary(const NFoldSpec& spec, std::span<const Rational> extended) {
    const std::size_t t = spec.brick_width();
    const std::size_t width = t + 2 * spec.a.rows() + 2 * spec.b.rows();
    if (extended.size() != width * spec.n) throw InputError("extended point has the wrong length");
    RationalVector x;
    for (std::size_t k = 0; k < spec.n; ++k)
        for (std::size_t j = 0; j < t; ++j) x.push_back(extended[k * width + j]);
    return x;
}

NFoldReport solve_nfold(const NFoldSpec& spec, std::span<const Int> b, std::span<const Int> c,
                        std::span<const Int> u, Domain domain, std::size_t n_cap,
                        std::size_t graver_cap) {
    if (spec.n > n_cap)
        throw ResourceError("N = " + std::to_string(spec.n) + " exceeds the N-fold cap " +
                            std::to_string(n_cap));
    if (c.size() != spec.cols()) throw InputError("cost vector has the wrong length");

    NFoldReport report;
    IntegerMatrix matrix = build_nfold(spec);
    TestSet graver = graver_basis(matrix, graver_cap);
    report.graver_size = graver.size();
    report.graver_complexity = graver_complexity(spec.a, spec.b, graver_cap);

    PhaseOne phase1 = build_phase1(spec, b, u, domain);
    TestSet phase1_tests = default_test_set(phase1.instance, graver_cap);
    SolveResult first =
        augment_to_optimality(phase1.instance, phase1.x0, Rule::steepest, phase1_tests);
    report.phase1_steps = first.trace.rule_steps();
    report.phase1_optimum = objective(phase1.instance, first.x);
    report.phase1_trace = std::move(first.trace);
    if (report.phase1_optimum > 0) return report;

    report.feasible = true;
    Instance original("nfold", matrix, IntVector(b.begin(), b.end()),
                      IntVector(c.begin(), c.end()), IntVector(u.begin(), u.end()), domain);
    RationalVector x0 = drop_auxiliary(spec, first.x);
    TestSet tests = domain == Domain::integer ? std::move(graver) : circuits(matrix);
    report.test_set_size = tests.size();
    SolveResult second = augment_to_optimality(original, x0, Rule::steepest, tests);
    report.phase2_steps = second.trace.rule_steps();
    report.phase2_trace = std::move(second.trace);
    report.start = std::move(x0);
    report.optimum_value = objective(original, second.x);
    report.optimum = std::move(second.x);
    return report;
}

}  // namespace graverpath
