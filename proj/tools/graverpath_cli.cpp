// graverpath command-line front end.
//
// Exit codes: 0 success, 1 failed verification, 2 bad input, 3 resource cap.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "graverpath/io.hpp"
#include "graverpath/verify.hpp"

using namespace graverpath;
using io::Json;

namespace {

struct Settings {
    std::string format = "json";
    std::string out;
    std::size_t cap = kDefaultGraverCap;
    std::optional<Int> box_bound;
};

void emit(const Settings& s, const std::string& text) {
    if (s.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(s.out, std::ios::binary);
    if (!f) throw InputError("cannot write " + s.out);
    f << text;
}

void emit(const Settings& s, const Json& j) { emit(s, j.dump(2) + "\n"); }

bool csv(const Settings& s) { return s.format == "csv"; }

std::string csv_field(const std::string& v) {
    if (v.find_first_of(",\"\n") == std::string::npos) return v;
    std::string q = "\"";
    for (char c : v) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

std::string joined(std::span<const Rational> v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + to_string(v[i]);
    return s;
}

// A matrix argument may be a bare [[...]] array, an instance file ("A"), or a
// test-set file ("matrix").
IntegerMatrix matrix_argument(const std::string& path) {
    Json j = io::read_json_file(path);
    if (j.is_array()) return io::matrix_from_json(j);
    if (j.is_object() && j.contains("A")) return io::matrix_from_json(j.at("A"));
    if (j.is_object() && j.contains("matrix")) return io::matrix_from_json(j.at("matrix"));
    throw InputError(path + ": expected a matrix, an instance or a test set");
}

io::InstanceFile instance_argument(const std::string& path) {
    return io::instance_from_json(io::read_json_file(path));
}

RationalVector start_point(const io::InstanceFile& file) {
    if (file.x0) {
        if (!is_feasible(*file.x0, file.instance)) throw InputError("x0 is not feasible");
        return *file.x0;
    }
    auto x0 = default_start(file.instance);
    if (!x0) throw InputError("instance is infeasible");
    return *x0;
}

void print_test_set(const Settings& s, const TestSet& t) {
    if (!csv(s)) {
        emit(s, io::to_json(t));
        return;
    }
    std::ostringstream os;
    for (std::size_t i = 0; i < t.matrix.cols(); ++i) os << (i ? "," : "") << 'z' << i + 1;
    os << '\n';
    for (const auto& g : t.elements) {
        for (std::size_t i = 0; i < g.size(); ++i) os << (i ? "," : "") << g[i];
        os << '\n';
    }
    emit(s, os.str());
}

std::string checks_csv(const std::vector<BoundCheck>& checks) {
    std::ostringstream os;
    os << "group,check,passed,detail\n";
    for (const auto& c : checks)
        os << csv_field(c.group) << ',' << csv_field(c.name) << ',' << (c.passed ? "true" : "false")
           << ',' << csv_field(c.detail) << '\n';
    return os.str();
}

Json checks_json(const std::vector<BoundCheck>& checks) {
    Json rows = Json::array();
    for (const auto& c : checks)
        rows.push_back({{"group", c.group}, {"check", c.name}, {"passed", c.passed},
                        {"detail", c.detail}});
    return rows;
}

int report_failures(const std::vector<BoundCheck>& checks) {
    int status = 0;
    for (const auto& c : checks) {
        if (c.passed) continue;
        std::cerr << "violated: " << c.group << ": " << c.name;
        if (!c.detail.empty()) std::cerr << " (" << c.detail << ")";
        std::cerr << '\n';
        status = 1;
    }
    return status;
}

int cmd_solve(const Settings& s, const std::string& path, const std::string& rule_name) {
    io::InstanceFile file = instance_argument(path);
    const Instance& inst = file.instance;
    const Rule rule = parse_rule(rule_name);
    RationalVector x0 = start_point(file);
    TestSet tests = default_test_set(inst, s.cap);
    SolveResult res = augment_to_optimality(inst, x0, rule, tests);
    const Rational value = objective(inst, res.x);
    std::cerr << "steps=" << res.trace.rule_steps() << " optimum=" << to_string(value) << '\n';

    if (csv(s)) {
        emit(s, io::trace_to_csv(res.trace));
        return 0;
    }
    Json j;
    j["instance"] = inst.name;
    j["rule"] = std::string(to_string(rule));
    j["domain"] = std::string(to_string(inst.domain));
    j["test_set"] = std::string(to_string(tests.kind));
    j["test_set_size"] = tests.size();
    j["start"] = io::to_json(x0);
    j["x"] = io::to_json(res.x);
    j["objective"] = to_string(value);
    j["steps"] = res.trace.rule_steps();
    j["cleanup_steps"] = res.trace.cleanup_steps();
    j["threshold_misfires"] = res.threshold_misfires;
    j["trace"] = io::to_json(res.trace);
    emit(s, j);
    return 0;
}

int cmd_verify(const Settings& s, const std::string& path) {
    io::InstanceFile file = instance_argument(path);
    RationalVector x0 = start_point(file);
    VerifyOptions options;
    options.box_bound = s.box_bound;
    options.graver_cap = s.cap;
    VerificationReport report = verify_instance(file.instance, x0, options);
    if (csv(s)) {
        emit(s, checks_csv(report.checks));
    } else {
        Json j;
        j["instance"] = report.instance;
        j["start"] = io::to_json(x0);
        j["passed"] = report.passed();
        j["checks"] = checks_json(report.checks);
        emit(s, j);
    }
    return report_failures(report.checks);
}

int cmd_oracle(const Settings& s, const std::string& path) {
    io::InstanceFile file = instance_argument(path);
    OracleResult res = brute_force_optimum(file.instance);
    if (csv(s)) {
        std::ostringstream os;
        os << "feasible,objective,x,gamma\n";
        if (res.feasible)
            os << "true," << to_string(res.objective) << ',' << joined(res.x) << ','
               << to_string(gamma(file.instance)) << '\n';
        else
            os << "false,,,\n";
        emit(s, os.str());
        return 0;
    }
    Json j;
    j["instance"] = file.instance.name;
    j["domain"] = std::string(to_string(file.instance.domain));
    j["feasible"] = res.feasible;
    if (res.feasible) {
        j["x"] = io::to_json(res.x);
        j["objective"] = to_string(res.objective);
        j["gamma"] = to_string(gamma(file.instance));
    }
    emit(s, j);
    return 0;
}

int cmd_nfold(const Settings& s, const std::string& path, std::size_t n_cap) {
    io::NFoldFile file = io::nfold_from_json(io::read_json_file(path));
    const NFoldSpec& spec = file.spec;
    if (!file.b) throw InputError("N-fold file needs a right-hand side \"b\"");
    if (!file.u) throw InputError("N-fold file needs upper bounds \"u\"");
    IntVector c = file.c.value_or(IntVector(spec.cols(), 0));
    NFoldReport report = solve_nfold(spec, *file.b, c, *file.u, file.domain, n_cap, s.cap);
    std::cerr << (report.feasible ? "feasible" : "infeasible")
              << " phase1_steps=" << report.phase1_steps << " phase2_steps=" << report.phase2_steps
              << " graver_size=" << report.graver_size
              << " graver_complexity=" << report.graver_complexity << '\n';
    if (csv(s)) {
        auto tag = [](const std::string& body, const char* phase) {
            std::string result;
            std::istringstream in(body);
            std::string line;
            std::getline(in, line);  // header
            while (std::getline(in, line)) result += std::string(phase) + "," + line + "\n";
            return result;
        };
        std::string out = "phase,step,rule,z,alpha,objective,steepness,cleanup\n" +
              tag(io::trace_to_csv(report.phase1_trace), "1");
        if (report.feasible) out += tag(io::trace_to_csv(report.phase2_trace), "2");
        emit(s, out);
        return 0;
    }
    Json j;
    j["spec"] = io::to_json(spec);
    j["matrix"] = io::to_json(build_nfold(spec));
    j["report"] = io::to_json(report);
    emit(s, j);
    return 0;
}

int cmd_diameter(const Settings& s, const std::string& path) {
    io::InstanceFile file = instance_argument(path);
    DiameterReport report = circuit_diameter(file.instance);
    if (csv(s)) {
        std::ostringstream os;
        os << "from,to,steps,reached\n";
        for (const auto& p : report.pairs)
            os << '"' << joined(report.vertices[p.from]) << "\",\"" << joined(report.vertices[p.to])
               << "\"," << p.steps << ',' << (p.reached_target ? "true" : "false") << '\n';
        emit(s, os.str());
    } else {
        Json j;
        j["instance"] = file.instance.name;
        Json vertices = Json::array();
        for (const auto& v : report.vertices) vertices.push_back(io::to_json(v));
        j["vertices"] = std::move(vertices);
        Json pairs = Json::array();
        for (const auto& p : report.pairs)
            pairs.push_back({{"from", p.from}, {"to", p.to}, {"steps", p.steps},
                             {"reached_target", p.reached_target}});
        j["pairs"] = std::move(pairs);
        j["totally_unimodular"] = report.totally_unimodular;
        j["bound"] = report.bound;
        j["max_distance"] = report.max_steps;
        j["max_round_trip"] = report.max_round_trip;
        j["checks"] = checks_json(report.checks);
        emit(s, j);
    }
    return report_failures(report.checks);
}

int cmd_random(const Settings& s, std::uint64_t seed, std::size_t d, std::size_t n, Int entry_bound,
               Int u_bound, const std::string& domain) {
    GeneratedInstance g = random_instance(seed, d, n, entry_bound, u_bound, parse_domain(domain));
    g.instance.name = "random-" + std::to_string(seed);
    emit(s, io::to_json(io::InstanceFile{g.instance, g.x0}));
    return 0;
}

int cmd_maxflow(const Settings& s, const std::string& path) {
    io::NetworkFile net = io::network_from_json(io::read_json_file(path));
    FlowModel model = maxflow_instance(net.arcs, net.source, net.sink);
    model.instance.name = "maxflow";
    RationalVector zero(model.instance.cols(), Rational(0));
    std::cerr << "augmenting-path value=" << augmenting_path_max_flow(net.arcs, net.source, net.sink)
              << '\n';
    emit(s, io::to_json(io::InstanceFile{model.instance, zero}));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Graver bases, circuits and augmentation algorithms in exact arithmetic"};
    app.require_subcommand(1);
    app.fallthrough();
    Settings s;
    app.add_option("--format", s.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", s.out, "Write the report to PATH instead of stdout");
    app.add_option("--cap", s.cap, "Largest Graver basis to hold during completion");
    app.add_option("--box-bound", s.box_bound, "Oracle box bound M for verification");

    std::string path, rule = "steepest", domain = "integer";
    std::uint64_t seed = 1;
    std::size_t rows = 2, cols = 4, n_cap = kDefaultNFoldCap;
    Int entry_bound = 3, u_bound = 3;

    auto* graver = app.add_subcommand("graver", "Graver basis of a matrix");
    auto* circ = app.add_subcommand("circuits", "Circuits of a matrix");
    auto* solve = app.add_subcommand("solve", "Augment to optimality, emitting the trace");
    auto* verify = app.add_subcommand("verify", "Check every augmentation bound on an instance");
    auto* nfold = app.add_subcommand("nfold", "Phase-one and phase-two N-fold pipeline");
    auto* diameter = app.add_subcommand("diameter", "All-pairs circuit distances of a polytope");
    auto* oracle = app.add_subcommand("oracle", "Brute-force optimum by enumeration");
    auto* random = app.add_subcommand("random", "Seeded random instance with a feasible start");
    auto* maxflow = app.add_subcommand("maxflow", "Max-flow instance from a network file");

    for (auto* sub : {graver, circ, solve, verify, nfold, diameter, oracle, maxflow})
        sub->add_option("file", path, "Input JSON file")->required();
    solve->add_option("--rule", rule, "Augmentation rule")
        ->check(CLI::IsMember({"deepest", "dantzig", "steepest"}));
    nfold->add_option("--max-n", n_cap, "Largest N accepted");
    random->add_option("--seed", seed, "Generator seed");
    random->add_option("--rows", rows, "Rows d");
    random->add_option("--cols", cols, "Columns n");
    random->add_option("--entry-bound", entry_bound, "Matrix and cost entries in [-B, B]");
    random->add_option("--u-bound", u_bound, "Upper bounds in [1, U]");
    random->add_option("--domain", domain, "integer or real")
        ->check(CLI::IsMember({"integer", "real"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*graver) {
            print_test_set(s, graver_basis(matrix_argument(path), s.cap));
        } else if (*circ) {
            print_test_set(s, circuits(matrix_argument(path)));
        } else if (*solve) {
            return cmd_solve(s, path, rule);
        } else if (*verify) {
            return cmd_verify(s, path);
        } else if (*nfold) {
            return cmd_nfold(s, path, n_cap);
        } else if (*diameter) {
            return cmd_diameter(s, path);
        } else if (*oracle) {
            return cmd_oracle(s, path);
        } else if (*random) {
            return cmd_random(s, seed, rows, cols, entry_bound, u_bound, domain);
        } else if (*maxflow) {
            return cmd_maxflow(s, path);
        }
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
