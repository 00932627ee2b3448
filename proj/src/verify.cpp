#include "graverpath/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace graverpath {

bool VerificationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.passed; });
}

bool VerificationReport::passed(std::string_view group) const {
    return std::all_of(checks.begin(), checks.end(), [&](const BoundCheck& c) {
        return c.group != group || c.passed;
    });
}

const BoundCheck* VerificationReport::first_failure() const {
    for (const auto& c : checks)
        if (!c.passed) return &c;
    return nullptr;
}

mpz_class delta(const IntegerMatrix& a) {
    return a.is_zero() ? mpz_class(1) : subdeterminant_lcm(a);
}

Int decomposition_length(std::size_t n) {
    return std::max<Int>(2 * static_cast<Int>(n) - 2, 1);
}

namespace {

Rational q(Int v) { return Rational(static_cast<long>(v)); }
Rational q(const mpz_class& v) { return Rational(v); }

std::string str(const Rational& v) { return to_string(v); }

template <typename... Parts>
std::string cat(const Parts&... parts) {
    std::ostringstream os;
    (os << ... << parts);
    return os.str();
}

BoundCheck row(std::string group, std::string name, bool passed, std::string detail) {
    return BoundCheck{std::move(group), std::move(name), passed, std::move(detail)};
}

bool in_kernel(const IntegerMatrix& a, std::span<const Int> z) { return is_zero(a.apply(z)); }

bool sign_compatible(std::span<const Int> g, std::span<const Int> z) {
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (g[i] == 0) continue;
        if (z[i] == 0 || (g[i] > 0) != (z[i] > 0)) return false;
    }
    return true;
}

std::vector<std::size_t> support(std::span<const Int> z) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < z.size(); ++i)
        if (z[i] != 0) s.push_back(i);
    return s;
}

std::string structural_problem(const TestSet& t) {
    for (const auto& g : t.elements) {
        if (g.size() != t.matrix.cols()) return "wrong length " + to_string(g);
        if (is_zero(g)) return "zero element";
        if (!in_kernel(t.matrix, g)) return to_string(g) + " is not in ker(A)";
        if (gcd_of(g) != 1) return to_string(g) + " is not primitive";
        if (!t.contains(negate(g))) return to_string(g) + " lacks its negation";
    }
    return {};
}

bool dfs_decompose(IntVector& residual, const std::vector<const IntVector*>& cands,
                   std::size_t start, std::size_t depth) {
    if (is_zero(residual)) return true;
    if (depth == 0) return false;
    for (std::size_t i = start; i < cands.size(); ++i) {
        const IntVector& g = *cands[i];
        if (!conforms(g, residual)) continue;
        IntVector saved = residual;
        while (conforms(g, residual)) {
            residual = sub(residual, g);
            IntVector trial = residual;
            if (dfs_decompose(trial, cands, i + 1, depth - 1)) {
                residual = std::move(trial);
                return true;
            }
        }
        residual = std::move(saved);
    }
    return false;
}

std::vector<Rational> objectives_before(const AugmentationTrace& trace) {
    std::vector<Rational> before;
    Rational current = trace.start_objective;
    for (const auto& s : trace.steps) {
        before.push_back(current);
        current = s.objective;
    }
    return before;
}

Int bound_times_log(Int factor, const Rational& gap) {
    return checked_mul(factor, ceil_log2(gap));
}

std::set<Rational> positive_steepness_values(const TestSet& circuit_set, std::span<const Int> c) {
    std::set<Rational> values;
    for (const auto& z : circuit_set.elements) {
        Rational s = steepness(z, c);
        if (s > 0) values.insert(s);
    }
    return values;
}

BoundCheck no_repeat_row(const std::string& group, const AugmentationTrace& trace) {
    std::set<IntVector> seen;
    for (const auto& s : trace.steps) {
        if (s.cleanup) continue;
        if (!seen.insert(s.direction).second)
            return row(group, "no direction is chosen twice", false,
                       "repeated " + to_string(s.direction));
    }
    return row(group, "no direction is chosen twice", true, cat(seen.size(), " distinct"));
}

BoundCheck monotone_row(const std::string& group, const AugmentationTrace& trace) {
    std::optional<Rational> last;
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const auto& s = trace.steps[i];
        if (s.cleanup) continue;
        if (last && s.steepness > *last)
            return row(group, "steepness never increases", false,
                       cat("step ", i + 1, ": ", str(s.steepness), " > ", str(*last)));
        last = s.steepness;
    }
    return row(group, "steepness never increases", true, "");
}

BoundCheck optimum_row(const std::string& group, const Rational& got, const Rational& want) {
    return row(group, "terminal objective equals oracle optimum", got == want,
               cat(str(got), " vs ", str(want)));
}

}  // namespace

std::optional<std::size_t> minimal_conformal_terms(std::span<const Int> z, const TestSet& graver,
                                                   std::size_t limit) {
    if (is_zero(z)) return 0;
    std::vector<const IntVector*> cands;
    for (const auto& g : graver.elements)
        if (conforms(g, z)) cands.push_back(&g);
    for (std::size_t k = 1; k <= limit; ++k) {
        IntVector residual(z.begin(), z.end());
        if (dfs_decompose(residual, cands, 0, k)) return k;
    }
    return std::nullopt;
}

std::vector<BoundCheck> check_test_sets(const TestSet& graver, const TestSet& circuit_set,
                                        Int box_bound) {
    std::vector<BoundCheck> rows;
    const IntegerMatrix& a = graver.matrix;

    TestSet oracle = graver_oracle(a, box_bound);
    rows.push_back(row("graver", cat("Graver basis equals box oracle (M=", box_bound, ")"),
                       oracle.elements == graver.elements,
                       cat(graver.size(), " vs ", oracle.size(), " elements")));
    std::string problem = structural_problem(graver);
    rows.push_back(row("graver", "Graver elements are primitive kernel vectors, closed under negation",
                       problem.empty(), problem));

    problem = structural_problem(circuit_set);
    if (problem.empty()) {
        for (const auto& g : circuit_set.elements) {
            auto s = support(g);
            if (column_rank(a, s) + 1 != s.size()) {
                problem = to_string(g) + " does not have minimal support";
                break;
            }
        }
    }
    rows.push_back(row("circuits", "circuits are primitive with minimal support", problem.empty(),
                       problem));
    bool subset = std::all_of(circuit_set.elements.begin(), circuit_set.elements.end(),
                              [&](const IntVector& g) { return graver.contains(g); });
    rows.push_back(row("circuits", "circuits are contained in the Graver basis", subset,
                       cat(circuit_set.size(), " circuits")));

    if (is_totally_unimodular(a)) {
        rows.push_back(row("tu", "circuits equal the Graver basis (TU)",
                           circuit_set.elements == graver.elements,
                           cat(circuit_set.size(), " vs ", graver.size())));
        const std::size_t r = rank(a);
        std::string bad;
        for (const auto& g : graver.elements) {
            if (norm_inf(g) > 1 || support(g).size() > r + 1) {
                bad = to_string(g);
                break;
            }
        }
        rows.push_back(row("tu", cat("elements have entries in {-1,0,1} and at most ", r + 1,
                                     " nonzeros"),
                           bad.empty(), bad));
    }
    return rows;
}

std::vector<BoundCheck> check_decompositions(const TestSet& graver, const TestSet& circuit_set,
                                             Int box, std::size_t minimal_max_n) {
    const IntegerMatrix& a = graver.matrix;
    const std::size_t n = a.cols();
    const bool minimal = n <= minimal_max_n;
    const std::size_t limit = static_cast<std::size_t>(decomposition_length(n));
    std::size_t vectors = 0, worst_integer = 0, worst_real = 0, worst_minimal = 0;
    std::string integer_bad, real_bad, minimal_bad;

    for_each_kernel_point_in_box(a, box, [&](std::span<const Int> z) {
        if (is_zero(z)) return;
        ++vectors;
        if (integer_bad.empty()) {
            auto terms = decompose_integer_conformal(z, graver);
            IntVector sum(n, 0);
            Int length = 0;
            for (const auto& t : terms) {
                IntVector part = scale(t.direction, t.multiplier);
                if (t.multiplier <= 0 || !graver.contains(t.direction) || !conforms(part, z))
                    integer_bad = "term " + to_string(part) + " of " + to_string(z);
                sum = add(sum, part);
                length = checked_add(length, checked_mul(t.multiplier, norm1(t.direction)));
            }
            if (integer_bad.empty() && (sum != IntVector(z.begin(), z.end()) || length != norm1(z)))
                integer_bad = "sum or 1-norm mismatch for " + to_string(z);
            worst_integer = std::max(worst_integer, terms.size());
        }
        if (real_bad.empty()) {
            auto terms = decompose_real_conformal(to_rational(z), circuit_set);
            RationalVector sum(n, Rational(0));
            Rational length = 0;
            for (const auto& t : terms) {
                if (t.multiplier <= 0 || !circuit_set.contains(t.direction) ||
                    !sign_compatible(t.direction, z))
                    real_bad = "term " + to_string(t.direction) + " of " + to_string(z);
                for (std::size_t i = 0; i < n; ++i) sum[i] += t.multiplier * q(t.direction[i]);
                length += t.multiplier * q(norm1(t.direction));
            }
            if (real_bad.empty() && (sum != to_rational(z) || length != q(norm1(z))))
                real_bad = "sum or 1-norm mismatch for " + to_string(z);
            if (real_bad.empty() && terms.size() > support(z).size())
                real_bad = cat(terms.size(), " terms for ", to_string(z));
            worst_real = std::max(worst_real, terms.size());
        }
        if (minimal && minimal_bad.empty()) {
            auto k = minimal_conformal_terms(z, graver, limit);
            if (!k)
                minimal_bad = "no decomposition of " + to_string(z) + cat(" within ", limit, " terms");
            else
                worst_minimal = std::max(worst_minimal, *k);
        }
    });

    std::vector<BoundCheck> rows;
    rows.push_back(row("decomposition",
                       cat("integer conformal decompositions are exact (||z||_inf <= ", box, ")"),
                       integer_bad.empty(),
                       integer_bad.empty() ? cat(vectors, " vectors, at most ", worst_integer,
                                                 " greedy terms")
                                           : integer_bad));
    rows.push_back(row("decomposition", "real circuit decompositions use at most |supp z| terms",
                       real_bad.empty(),
                       real_bad.empty() ? cat("at most ", worst_real, " terms") : real_bad));
    if (minimal)
        rows.push_back(row("decomposition",
                           cat("minimal conformal decompositions use at most ", limit, " terms"),
                           minimal_bad.empty(),
                           minimal_bad.empty() ? cat("at most ", worst_minimal, " terms")
                                               : minimal_bad));
    return rows;
}

std::vector<BoundCheck> check_trace_shape(const std::string& group, const Instance& inst,
                                          std::span<const Rational> x0,
                                          const SolveResult& result) {
    const Instance real = inst.with_domain(Domain::real);
    const bool integer = inst.domain == Domain::integer;
    RationalVector x(x0.begin(), x0.end());
    Rational current = objective(inst, x);
    std::string feasible_bad, maximal_bad, decrease_bad, integral_bad;
    if (current != result.trace.start_objective) decrease_bad = "start objective mismatch";

    for (std::size_t k = 0; k < result.trace.steps.size(); ++k) {
        const auto& s = result.trace.steps[k];
        const Instance& step_inst = s.cleanup ? real : inst;
        if (is_zero(s.direction) || !in_kernel(inst.a, s.direction)) {
            feasible_bad = cat("step ", k + 1, ": direction not in ker(A)");
            break;
        }
        if (maximal_bad.empty() && s.alpha != max_step(x, s.direction, step_inst))
            maximal_bad = cat("step ", k + 1, ": alpha ", str(s.alpha), " is not maximal");
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += s.alpha * q(s.direction[i]);
        Rational now = objective(inst, x);
        if (feasible_bad.empty() && !is_feasible(x, step_inst))
            feasible_bad = cat("step ", k + 1, ": infeasible iterate");
        if (decrease_bad.empty() && now != s.objective)
            decrease_bad = cat("step ", k + 1, ": recorded objective differs");
        if (decrease_bad.empty() && (s.cleanup ? now > current : now >= current))
            decrease_bad = cat("step ", k + 1, ": objective ", str(now), " after ", str(current));
        if (integer && integral_bad.empty() && (!is_integral(std::span<const Rational>(&s.alpha, 1)) ||
                                                !is_integral(std::span<const Rational>(&now, 1))))
            integral_bad = cat("step ", k + 1);
        current = now;
    }
    if (feasible_bad.empty() && x != result.x) feasible_bad = "replay does not reach the result";

    std::vector<BoundCheck> rows;
    rows.push_back(row(group, "iterates stay feasible", feasible_bad.empty(), feasible_bad));
    rows.push_back(row(group, "every step is maximal", maximal_bad.empty(), maximal_bad));
    rows.push_back(row(group, "objective strictly decreases", decrease_bad.empty(), decrease_bad));
    if (integer)
        rows.push_back(row(group, "steps and objectives are integral", integral_bad.empty(),
                           integral_bad));
    return rows;
}

std::vector<BoundCheck> check_integer_rules(const Instance& inst, std::span<const Rational> x0,
                                            const TestSet& graver, const TestSet& circuit_set,
                                            const VerifyOptions& options) {
    std::vector<BoundCheck> rows;
    auto append = [&](std::vector<BoundCheck> more) {
        for (auto& r : more) rows.push_back(std::move(r));
    };
    const std::size_t n = inst.cols();
    const Int n2 = decomposition_length(n);
    OracleResult oracle = brute_force_optimum(inst, options.enumeration_cap);
    const Rational opt = oracle.objective;
    const Rational gap0 = objective(inst, x0) - opt;

    // Steepest descent.
    {
        const std::string g = "ilp-steepest";
        SolveResult res = augment_to_optimality(inst, x0, Rule::steepest, graver);
        append(check_trace_shape(g, inst, x0, res));
        const std::size_t steps = res.trace.rule_steps();
        rows.push_back(row(g, "steps <= |G(A)|", steps <= graver.size(),
                           cat(steps, " <= ", graver.size())));
        rows.push_back(no_repeat_row(g, res.trace));
        rows.push_back(monotone_row(g, res.trace));
        rows.push_back(optimum_row(g, objective(inst, res.x), opt));

        if (n <= options.overall_steepest_max_n) {
            const Int box = options.box_bound.value_or(std::max<Int>(graver.max_norm_inf(), 1));
            RationalVector x(x0.begin(), x0.end());
            std::string bad;
            std::size_t checked = 0;
            for (std::size_t k = 0; k <= res.trace.steps.size() && bad.empty(); ++k) {
                std::optional<Rational> best;
                for_each_kernel_point_in_box(inst.a, box, [&](std::span<const Int> z) {
                    if (is_zero(z) || dot(inst.c, z) >= 0) return;
                    for (std::size_t i = 0; i < n; ++i) {
                        Rational v = x[i] + q(z[i]);
                        if (v < 0 || v > q(inst.u[i])) return;
                    }
                    Rational s = steepness(z, inst.c);
                    if (!best || s > *best) best = s;
                });
                ++checked;
                if (k == res.trace.steps.size()) {
                    if (best) bad = "terminal point has an improving direction";
                    break;
                }
                const auto& s = res.trace.steps[k];
                if (!best || *best != s.steepness)
                    bad = cat("step ", k + 1, ": chose ", str(s.steepness), ", exhaustive ",
                              best ? str(*best) : std::string("none"));
                for (std::size_t i = 0; i < n; ++i) x[i] += s.alpha * q(s.direction[i]);
            }
            rows.push_back(row("ilp-overall-steepest",
                               cat("chosen steepness equals exhaustive maximum (M=", box, ")"),
                               bad.empty(), bad.empty() ? cat(checked, " iterates") : bad));
        }

        if (is_totally_unimodular(inst.a)) {
            const Int r = static_cast<Int>(rank(inst.a));
            const Int tu_bound = checked_mul(checked_mul(static_cast<Int>(n), r + 1), norm1(inst.c));
            rows.push_back(row("ilp-tu", "steps <= n(d+1)||c||_1 (TU)",
                               static_cast<Int>(steps) <= tu_bound, cat(steps, " <= ", tu_bound)));
            const std::size_t values = positive_steepness_values(circuit_set, inst.c).size();
            rows.push_back(row("ilp-tu", "steps <= n * distinct positive steepness values (TU)",
                               steps <= n * values, cat(steps, " <= ", n * values)));
        }
    }

    // Deepest descent.
    {
        const std::string g = "ilp-deepest";
        SolveResult res = augment_to_optimality(inst, x0, Rule::deepest, graver);
        append(check_trace_shape(g, inst, x0, res));
        auto before = objectives_before(res.trace);
        std::string bad;
        for (std::size_t k = 0; k < res.trace.steps.size() && bad.empty(); ++k) {
            Rational progress = before[k] - res.trace.steps[k].objective;
            Rational need = (before[k] - opt) / q(n2);
            if (progress < need)
                bad = cat("step ", k + 1, ": ", str(progress), " < ", str(need));
        }
        rows.push_back(row(g, cat("per-step improvement >= gap/", n2), bad.empty(), bad));
        const std::size_t steps = res.trace.rule_steps();
        if (gap0 >= 2) {
            Int bound = bound_times_log(checked_mul(2, n2), gap0);
            rows.push_back(row(g, "steps <= (4n-4) log2(gap)", static_cast<Int>(steps) <= bound,
                               cat(steps, " <= ", bound, " (gap ", str(gap0), ")")));
        } else {
            rows.push_back(row(g, "steps <= (4n-4) log2(gap)", true,
                               cat("gap ", str(gap0), " < 2, bound not applicable")));
        }
        rows.push_back(optimum_row(g, objective(inst, res.x), opt));
    }

    // Dantzig descent.
    {
        const std::string g = "ilp-dantzig";
        SolveResult res = augment_to_optimality(inst, x0, Rule::dantzig, graver);
        append(check_trace_shape(g, inst, x0, res));
        const std::size_t steps = res.trace.rule_steps();
        if (gap0 >= 2) {
            Rational gam = gamma(inst, options.enumeration_cap);
            Int bound = bound_times_log(checked_mul(checked_mul(2, n2), to_int(gam.get_num())),
                                        gap0);
            rows.push_back(row(g, "steps <= (4n-4) gamma log2(gap)",
                               static_cast<Int>(steps) <= bound,
                               cat(steps, " <= ", bound, " (gamma ", str(gam), ", gap ",
                                   str(gap0), ")")));
        } else {
            rows.push_back(row(g, "steps <= (4n-4) gamma log2(gap)", true,
                               cat("gap ", str(gap0), " < 2, bound not applicable")));
        }
        rows.push_back(optimum_row(g, objective(inst, res.x), opt));
    }
    return rows;
}

std::vector<BoundCheck> check_real_rules(const Instance& inst, std::span<const Rational> x0,
                                         const TestSet& circuit_set,
                                         const VerifyOptions& options) {
    std::vector<BoundCheck> rows;
    auto append = [&](std::vector<BoundCheck> more) {
        for (auto& r : more) rows.push_back(std::move(r));
    };
    const std::size_t n = inst.cols();
    const Int ni = static_cast<Int>(n);
    OracleResult oracle = brute_force_optimum(inst, options.enumeration_cap);
    const Rational opt = oracle.objective;
    const Rational gap0 = objective(inst, x0) - opt;
    const mpz_class dlt = delta(inst.a);
    const Rational scaled_gap = q(dlt) * gap0;
    const Rational gam = gamma(inst, options.enumeration_cap);

    // Steepest descent over circuits.
    {
        const std::string g = "lp-steepest";
        SolveResult res = augment_to_optimality(inst, x0, Rule::steepest, circuit_set);
        append(check_trace_shape(g, inst, x0, res));
        const std::size_t steps = res.trace.rule_steps();
        rows.push_back(row(g, "steps <= |C(A)|", steps <= circuit_set.size(),
                           cat(steps, " <= ", circuit_set.size())));
        const std::size_t values = positive_steepness_values(circuit_set, inst.c).size();
        rows.push_back(row(g, "steps <= n * distinct positive steepness values",
                           steps <= n * values, cat(steps, " <= ", n * values)));
        rows.push_back(no_repeat_row(g, res.trace));
        rows.push_back(monotone_row(g, res.trace));
        rows.push_back(optimum_row(g, objective(inst, res.x), opt));
        if (is_totally_unimodular(inst.a)) {
            const Int r = static_cast<Int>(rank(inst.a));
            const Int tu_bound = checked_mul(checked_mul(ni, r + 1), norm1(inst.c));
            rows.push_back(row("lp-tu", "steps <= n(d+1)||c||_1 (TU)",
                               static_cast<Int>(steps) <= tu_bound, cat(steps, " <= ", tu_bound)));
        }
    }

    auto per_step = [&](const SolveResult& res, const Rational& divisor) {
        auto before = objectives_before(res.trace);
        for (std::size_t k = 0; k < res.trace.steps.size(); ++k) {
            const auto& s = res.trace.steps[k];
            if (s.cleanup) continue;
            Rational progress = before[k] - s.objective;
            Rational need = (before[k] - opt) / divisor;
            if (progress < need)
                return cat("step ", k + 1, ": ", str(progress), " < ", str(need));
        }
        return std::string();
    };
    auto terminal_rows = [&](const std::string& g, const SolveResult& res) {
        rows.push_back(row(g, "terminal point is a vertex", is_vertex(res.x, inst), ""));
        rows.push_back(optimum_row(g, objective(inst, res.x), opt));
    };

    // Deepest descent with the small-progress switch to vertex cleanup.
    {
        const std::string g = "lp-deepest";
        SolveResult res = augment_to_optimality(inst, x0, Rule::deepest, circuit_set);
        append(check_trace_shape(g, inst, x0, res));
        std::string bad = per_step(res, q(ni));
        rows.push_back(row(g, "per-step improvement >= gap/n", bad.empty(), bad));
        rows.push_back(row(g, "small progress only near the optimum", res.threshold_misfires == 0,
                           cat(res.threshold_misfires, " misfires")));
        const std::size_t steps = res.trace.rule_steps();
        if (scaled_gap >= 2) {
            Int bound = bound_times_log(2 * ni, scaled_gap);
            rows.push_back(row(g, "steps <= 2n log2(delta gap)", static_cast<Int>(steps) <= bound,
                               cat(steps, " <= ", bound, " (delta ", dlt.get_str(), ", gap ",
                                   str(gap0), ")")));
        } else {
            rows.push_back(row(g, "steps <= 2n log2(delta gap)", true,
                               cat("delta gap ", str(scaled_gap), " < 2, bound not applicable")));
        }
        terminal_rows(g, res);
    }

    // Dantzig descent, returning to a vertex after every step.
    {
        const std::string g = "lp-dantzig";
        SolveResult res = augment_to_optimality(inst, x0, Rule::dantzig, circuit_set);
        append(check_trace_shape(g, inst, x0, res));
        if (gam > 0) {
            std::string bad = per_step(res, q(ni) * q(dlt) * gam);
            rows.push_back(row(g, "per-step improvement >= gap/(n delta gamma)", bad.empty(), bad));
        }
        const std::size_t steps = res.trace.rule_steps();
        if (scaled_gap >= 2) {
            Rational factor = q(2 * ni * ni) * q(dlt) * gam;
            Rational bound = factor * q(ceil_log2(scaled_gap));
            rows.push_back(row(g, "steps <= 2n^2 delta gamma log2(delta gap)",
                               q(static_cast<Int>(steps)) <= bound,
                               cat(steps, " <= ", str(bound), " (delta ", dlt.get_str(),
                                   ", gamma ", str(gam), ")")));
        } else {
            rows.push_back(row(g, "steps <= 2n^2 delta gamma log2(delta gap)", true,
                               cat("delta gap ", str(scaled_gap), " < 2, bound not applicable")));
        }
        const std::size_t passes = steps + 2 + res.threshold_misfires;
        rows.push_back(row(g, "cleanup uses at most n steps per pass",
                           res.trace.cleanup_steps() <= n * passes,
                           cat(res.trace.cleanup_steps(), " <= ", n * passes)));
        terminal_rows(g, res);
    }
    return rows;
}

VerificationReport verify_instance(const Instance& inst, std::span<const Rational> x0,
                                   const VerifyOptions& options) {
    if (!is_feasible(x0, inst)) throw InputError("start point is not feasible");
    VerificationReport report;
    report.instance = inst.name;
    TestSet graver = graver_basis(inst.a, options.graver_cap);
    TestSet circuit_set = circuits(inst.a);
    const Int box = options.box_bound.value_or(std::max<Int>(graver.max_norm_inf(), 1));
    auto append = [&](std::vector<BoundCheck> more) {
        for (auto& r : more) report.checks.push_back(std::move(r));
    };
    append(check_test_sets(graver, circuit_set, box));
    append(check_decompositions(graver, circuit_set, options.decomposition_box,
                                options.minimal_decomposition_max_n));
    if (inst.domain == Domain::integer)
        append(check_integer_rules(inst, x0, graver, circuit_set, options));
    else
        append(check_real_rules(inst, x0, circuit_set, options));
    return report;
}

std::optional<RationalVector> default_start(const Instance& inst, std::uint64_t cap) {
    if (inst.domain == Domain::integer) {
        auto points = feasible_lattice_points(inst, cap);
        if (points.empty()) return std::nullopt;
        return to_rational(points.front());
    }
    auto vertices = enumerate_vertices(inst, cap);
    if (vertices.empty()) return std::nullopt;
    return vertices.front();
}

DiameterReport circuit_diameter(const Instance& inst, std::uint64_t cap) {
    const Instance real = inst.with_domain(Domain::real);
    DiameterReport report;
    report.vertices = enumerate_vertices(real, cap);
    if (report.vertices.empty()) throw InputError("polytope is empty");
    TestSet circuit_set = circuits(real.a);
    report.totally_unimodular = is_totally_unimodular(real.a);
    const Int n = static_cast<Int>(real.cols()), r = static_cast<Int>(rank(real.a));
    report.bound = checked_mul(checked_mul(n, r + 1), n - r);

    const std::size_t count = report.vertices.size();
    std::vector<std::vector<std::size_t>> dist(count, std::vector<std::size_t>(count, 0));
    bool all_reached = true;
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = 0; j < count; ++j) {
            if (i == j) continue;
            CircuitDistance d =
                circuit_distance(real, report.vertices[i], report.vertices[j], circuit_set);
            dist[i][j] = d.steps;
            all_reached = all_reached && d.reached_target;
            report.pairs.push_back(DiameterPair{i, j, d.steps, d.reached_target});
            report.max_steps = std::max(report.max_steps, d.steps);
        }
    }
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = i + 1; j < count; ++j)
            report.max_round_trip = std::max(report.max_round_trip, dist[i][j] + dist[j][i]);

    report.checks.push_back(row("diameter", "every walk ends at its target vertex", all_reached,
                                cat(report.pairs.size(), " ordered pairs")));
    if (report.totally_unimodular) {
        report.checks.push_back(row("diameter", "circuit distance <= n(d+1)(n-d) (TU)",
                                    static_cast<Int>(report.max_steps) <= report.bound,
                                    cat(report.max_steps, " <= ", report.bound)));
        report.checks.push_back(row("diameter", "round trip <= 2n(d+1)(n-d) (TU)",
                                    static_cast<Int>(report.max_round_trip) <= 2 * report.bound,
                                    cat(report.max_round_trip, " <= ", 2 * report.bound)));
    }
    return report;
}

}  // namespace graverpath
