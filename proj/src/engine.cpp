#include "graverpath/engine.hpp"

#include <algorithm>

namespace graverpath {

std::string_view to_string(Domain domain) {
    return domain == Domain::integer ? "integer" : "real";
}

std::string_view to_string(Rule rule) {
    switch (rule) {
        case Rule::deepest: return "deepest";
        case Rule::dantzig: return "dantzig";
        case Rule::steepest: return "steepest";
    }
    return "steepest";
}

Domain parse_domain(std::string_view text) {
    if (text == "integer") return Domain::integer;
    if (text == "real") return Domain::real;
    throw InputError("unknown domain: " + std::string(text));
}

Rule parse_rule(std::string_view text) {
    if (text == "deepest") return Rule::deepest;
    if (text == "dantzig") return Rule::dantzig;
    if (text == "steepest") return Rule::steepest;
    throw InputError("unknown rule: " + std::string(text));
}

Instance::Instance(std::string name_, IntegerMatrix a_, IntVector b_, IntVector c_,
                   IntVector u_, Domain domain_)
    : name(std::move(name_)),
      a(std::move(a_)),
      b(std::move(b_)),
      c(std::move(c_)),
      u(std::move(u_)),
      domain(domain_) {
    if (b.size() != a.rows()) throw InputError("b must have one entry per row of A");
    if (c.size() != a.cols()) throw InputError("c must have one entry per column of A");
    if (u.size() != a.cols()) throw InputError("u must have one entry per column of A");
    for (Int v : u)
        if (v < 0) throw InputError("upper bounds must be nonnegative");
}

Instance Instance::with_cost(IntVector cost) const {
    return Instance(name, a, b, std::move(cost), u, domain);
}

Instance Instance::with_domain(Domain d) const { return Instance(name, a, b, c, u, d); }

Rational objective(const Instance& inst, std::span<const Rational> x) {
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (inst.c[i] != 0) s += Rational(static_cast<long>(inst.c[i])) * x[i];
    return s;
}

bool is_feasible(std::span<const Rational> x, const Instance& inst) {
    if (x.size() != inst.cols()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] < 0 || x[i] > Rational(static_cast<long>(inst.u[i]))) return false;
    if (inst.domain == Domain::integer && !is_integral(x)) return false;
    auto ax = inst.a.apply(x);
    for (std::size_t r = 0; r < ax.size(); ++r)
        if (ax[r] != Rational(static_cast<long>(inst.b[r]))) return false;
    return true;
}

Rational max_step(std::span<const Rational> x, std::span<const Int> z, const Instance& inst) {
    if (is_zero(z)) throw InputError("max_step along the zero direction");
    if (z.size() != x.size() || z.size() != inst.cols())
        throw InputError("max_step: dimension mismatch");
    std::optional<Rational> best;
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (z[i] == 0) continue;
        Rational room = z[i] > 0 ? Rational(static_cast<long>(inst.u[i])) - x[i] : x[i];
        Rational ratio = room / Rational(static_cast<long>(z[i] > 0 ? z[i] : -z[i]));
        if (!best || ratio < *best) best = ratio;
    }
    Rational alpha = *best;
    if (alpha < 0) alpha = 0;
    if (inst.domain == Domain::integer) {
        mpz_class floored;
        mpz_fdiv_q(floored.get_mpz_t(), alpha.get_num_mpz_t(), alpha.get_den_mpz_t());
        alpha = Rational(floored);
    }
    return alpha;
}

Rational steepness(std::span<const Int> z, std::span<const Int> c) {
    Rational s(static_cast<long>(checked_neg(dot(c, z))), static_cast<long>(norm1(z)));
    s.canonicalize();
    return s;
}

std::optional<Augmentation> pick_direction(std::span<const Rational> x, const Instance& inst,
                                           const TestSet& tests, Rule rule) {
    const Rational min_alpha = inst.domain == Domain::integer ? Rational(1) : Rational(0);
    std::optional<Augmentation> best;
    Rational best_score;
    for (const auto& z : tests.elements) {
        Int cz = dot(inst.c, z);
        if (cz >= 0) continue;
        Rational alpha = max_step(x, z, inst);
        if (alpha < min_alpha || alpha == 0) continue;
        Rational score;
        switch (rule) {
            case Rule::deepest: score = alpha * Rational(static_cast<long>(-cz)); break;
            case Rule::dantzig: score = Rational(static_cast<long>(-cz)); break;
            case Rule::steepest: score = steepness(z, inst.c); break;
        }
        if (!best || score > best_score) {
            best = Augmentation{z, alpha};
            best_score = score;
        }
    }
    return best;
}

bool is_optimal(std::span<const Rational> x, const Instance& inst, const TestSet& tests) {
    return !pick_direction(x, inst, tests, Rule::dantzig).has_value();
}

std::size_t AugmentationTrace::rule_steps() const {
    return static_cast<std::size_t>(
        std::count_if(steps.begin(), steps.end(), [](const TraceStep& s) { return !s.cleanup; }));
}

std::size_t AugmentationTrace::cleanup_steps() const { return steps.size() - rule_steps(); }

TestSet default_test_set(const Instance& inst, std::size_t cap) {
    return inst.domain == Domain::integer ? graver_basis(inst.a, cap) : circuits(inst.a);
}

namespace {

void apply_step(RationalVector& x, std::span<const Int> z, const Rational& alpha) {
    for (std::size_t i = 0; i < x.size(); ++i)
        if (z[i] != 0) x[i] += alpha * Rational(static_cast<long>(z[i]));
}

TraceStep record(const RationalVector& x, const Instance& inst, const Augmentation& aug,
                 bool cleanup) {
    return TraceStep{aug.direction, aug.alpha, objective(inst, x),
                     steepness(aug.direction, inst.c), cleanup};
}

Rational lp_stop_threshold(const Instance& inst) {
    // Progress below (1/delta)/(2n-2) puts x within 1/delta of the optimum.
    const long terms = std::max<long>(2 * static_cast<long>(inst.cols()) - 2, 1);
    Rational delta(inst.a.is_zero() ? mpz_class(1) : subdeterminant_lcm(inst.a));
    return Rational(1) / (delta * terms);
}

void append_cleanup(RationalVector& x, const Instance& inst, const TestSet& circuit_set,
                    AugmentationTrace& trace) {
    CleanupResult cleaned = vertex_cleanup(x, inst, circuit_set);
    x = std::move(cleaned.x);
    for (auto& s : cleaned.steps) trace.steps.push_back(std::move(s));
}

}  // namespace

SolveResult augment_to_optimality(const Instance& inst, std::span<const Rational> x0, Rule rule,
                                  const TestSet& tests) {
    if (!is_feasible(x0, inst)) throw InputError("initial point is not feasible");
    SolveResult result;
    result.x.assign(x0.begin(), x0.end());
    result.trace.rule = rule;
    result.trace.start_objective = objective(inst, result.x);
    RationalVector& x = result.x;
    AugmentationTrace& trace = result.trace;

    if (inst.domain == Domain::integer || rule == Rule::steepest) {
        while (auto aug = pick_direction(x, inst, tests, rule)) {
            apply_step(x, aug->direction, aug->alpha);
            trace.steps.push_back(record(x, inst, *aug, false));
        }
        return result;
    }

    const Rational threshold = lp_stop_threshold(inst);
    if (rule == Rule::dantzig) append_cleanup(x, inst, tests, trace);
    bool force_next = false;
    while (true) {
        auto aug = pick_direction(x, inst, tests, rule);
        if (aug) {
            Rational progress = aug->alpha * Rational(static_cast<long>(-dot(inst.c, aug->direction)));
            if (force_next || progress >= threshold) {
                force_next = false;
                apply_step(x, aug->direction, aug->alpha);
                trace.steps.push_back(record(x, inst, *aug, false));
                if (rule == Rule::dantzig) append_cleanup(x, inst, tests, trace);
                continue;
            }
        }
        append_cleanup(x, inst, tests, trace);
        if (is_optimal(x, inst, tests)) break;
        ++result.threshold_misfires;
        force_next = true;
    }
    return result;
}

SolveResult augment_to_optimality(const Instance& inst, std::span<const Rational> x0, Rule rule) {
    return augment_to_optimality(inst, x0, rule, default_test_set(inst));
}

namespace {

std::vector<std::size_t> interior_coordinates(std::span<const Rational> x, const Instance& inst) {
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] > 0 && x[i] < Rational(static_cast<long>(inst.u[i]))) free.push_back(i);
    return free;
}

}  // namespace

bool is_vertex(std::span<const Rational> x, const Instance& inst) {
    auto free = interior_coordinates(x, inst);
    return column_rank(inst.a, free) == free.size();
}

CleanupResult vertex_cleanup(std::span<const Rational> x, const Instance& inst,
                             const TestSet& circuit_set) {
    CleanupResult out;
    out.x.assign(x.begin(), x.end());
    const Instance real = inst.with_domain(Domain::real);
    while (true) {
        auto free = interior_coordinates(out.x, inst);
        std::vector<bool> is_free(inst.cols(), false);
        for (auto i : free) is_free[i] = true;
        // Among circuits inside the face, prefer the largest cost decrease;
        // cost-neutral circuits are allowed so the walk always reaches a vertex.
        const IntVector* best = nullptr;
        Int best_gain = -1;
        for (const auto& z : circuit_set.elements) {
            bool inside = true;
            for (std::size_t i = 0; i < z.size() && inside; ++i)
                if (z[i] != 0 && !is_free[i]) inside = false;
            if (!inside) continue;
            Int gain = checked_neg(dot(inst.c, z));
            if (gain > best_gain) {
                best_gain = gain;
                best = &z;
            }
        }
        if (!best) break;
        Rational alpha = max_step(out.x, *best, real);
        apply_step(out.x, *best, alpha);
        out.steps.push_back(TraceStep{*best, alpha, objective(inst, out.x),
                                      steepness(*best, inst.c), true});
    }
    return out;
}

IntVector vertex_cost(std::span<const Rational> vertex, const Instance& inst) {
    IntVector c(inst.cols(), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (vertex[i] == 0)
            c[i] = 1;
        else if (vertex[i] == Rational(static_cast<long>(inst.u[i])))
            c[i] = -1;
    }
    return c;
}

CircuitDistance circuit_distance(const Instance& inst, std::span<const Rational> start,
                                 std::span<const Rational> target, const TestSet& circuit_set) {
    const Instance real = inst.with_domain(Domain::real);
    if (!is_feasible(start, real) || !is_vertex(start, real))
        throw InputError("circuit distance: start is not a vertex");
    if (!is_feasible(target, real) || !is_vertex(target, real))
        throw InputError("circuit distance: target is not a vertex");
    Instance steered = real.with_cost(vertex_cost(target, real));
    SolveResult solved = augment_to_optimality(steered, start, Rule::steepest, circuit_set);
    CircuitDistance out;
    out.steps = solved.trace.rule_steps();
    out.reached_target = std::equal(solved.x.begin(), solved.x.end(), target.begin(), target.end());
    return out;
}

}  // namespace graverpath
