#include "graverpath/io.hpp"

#include <fstream>
#include <sstream>

namespace graverpath::io {

namespace {

IntVector int_vector(const Json& j, const char* what) {
    if (!j.is_array()) throw InputError(std::string(what) + " must be an array of integers");
    IntVector v;
    for (const auto& e : j) {
        if (!e.is_number_integer()) throw InputError(std::string(what) + " must hold integers");
        v.push_back(e.get<Int>());
    }
    return v;
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw InputError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

Json rational_json(const Rational& q) { return to_string(q); }

Rational rational_from(const Json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<Int>()));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw InputError("rational values must be strings \"p/q\" or integers");
}

}  // namespace

Json to_json(const IntegerMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    return rows;
}

IntegerMatrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw InputError("matrix must be a nonempty array of rows");
    std::vector<IntVector> rows;
    for (const auto& r : j) rows.push_back(int_vector(r, "matrix row"));
    return IntegerMatrix::from_rows(rows);
}

Json to_json(std::span<const Rational> x) {
    Json arr = Json::array();
    for (const auto& q : x) arr.push_back(rational_json(q));
    return arr;
}

RationalVector rational_vector_from_json(const Json& j) {
    if (!j.is_array()) throw InputError("point must be an array");
    RationalVector x;
    for (const auto& e : j) x.push_back(rational_from(e));
    return x;
}

Json to_json(const TestSet& t) {
    Json j;
    j["matrix"] = to_json(t.matrix);
    j["kind"] = std::string(to_string(t.kind));
    Json elems = Json::array();
    for (const auto& g : t.elements) elems.push_back(g);
    j["elements"] = std::move(elems);
    return j;
}

TestSet test_set_from_json(const Json& j) {
    TestSet t{matrix_from_json(field(j, "matrix")),
              parse_test_set_kind(field(j, "kind").get<std::string>()),
              {}};
    for (const auto& e : field(j, "elements")) {
        IntVector g = int_vector(e, "test set element");
        if (g.size() != t.matrix.cols()) throw InputError("test set element has the wrong length");
        t.elements.push_back(std::move(g));
    }
    std::sort(t.elements.begin(), t.elements.end());
    return t;
}

Json to_json(const AugmentationTrace& trace) {
    Json j;
    j["rule"] = std::string(to_string(trace.rule));
    j["start_objective"] = rational_json(trace.start_objective);
    Json steps = Json::array();
    for (const auto& s : trace.steps) {
        Json step;
        step["z"] = s.direction;
        step["alpha"] = rational_json(s.alpha);
        step["objective"] = rational_json(s.objective);
        step["steepness"] = rational_json(s.steepness);
        step["cleanup"] = s.cleanup;
        steps.push_back(std::move(step));
    }
    j["steps"] = std::move(steps);
    return j;
}

AugmentationTrace trace_from_json(const Json& j) {
    AugmentationTrace trace;
    trace.rule = parse_rule(field(j, "rule").get<std::string>());
    trace.start_objective = rational_from(field(j, "start_objective"));
    for (const auto& s : field(j, "steps")) {
        trace.steps.push_back(TraceStep{int_vector(field(s, "z"), "z"),
                                        rational_from(field(s, "alpha")),
                                        rational_from(field(s, "objective")),
                                        rational_from(field(s, "steepness")),
                                        field(s, "cleanup").get<bool>()});
    }
    return trace;
}

std::string trace_to_csv(const AugmentationTrace& trace) {
    std::ostringstream os;
    os << "step,rule,z,alpha,objective,steepness,cleanup\n";
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const auto& s = trace.steps[i];
        os << i + 1 << ',' << to_string(trace.rule) << ",\"";
        for (std::size_t k = 0; k < s.direction.size(); ++k)
            os << (k ? " " : "") << s.direction[k];
        os << "\"," << to_string(s.alpha) << ',' << to_string(s.objective) << ','
           << to_string(s.steepness) << ',' << (s.cleanup ? "true" : "false") << '\n';
    }
    return os.str();
}

Json to_json(const Instance& inst) {
    Json j;
    j["name"] = inst.name;
    j["d"] = inst.rows();
    j["n"] = inst.cols();
    j["A"] = to_json(inst.a);
    j["b"] = inst.b;
    j["c"] = inst.c;
    j["u"] = inst.u;
    j["domain"] = std::string(to_string(inst.domain));
    return j;
}

Json to_json(const InstanceFile& file) {
    Json j = to_json(file.instance);
    if (file.x0) j["x0"] = to_json(*file.x0);
    return j;
}

InstanceFile instance_from_json(const Json& j) {
    IntegerMatrix a = matrix_from_json(field(j, "A"));
    if (j.contains("d") && j.at("d").get<std::size_t>() != a.rows())
        throw InputError("\"d\" does not match the row count of A");
    if (j.contains("n") && j.at("n").get<std::size_t>() != a.cols())
        throw InputError("\"n\" does not match the column count of A");
    Domain domain = j.contains("domain") ? parse_domain(j.at("domain").get<std::string>())
                                         : Domain::integer;
    Instance inst(j.value("name", std::string("instance")), std::move(a),
                  int_vector(field(j, "b"), "b"), int_vector(field(j, "c"), "c"),
                  int_vector(field(j, "u"), "u"), domain);
    std::optional<RationalVector> x0;
    if (j.contains("x0")) {
        x0 = rational_vector_from_json(j.at("x0"));
        if (x0->size() != inst.cols()) throw InputError("x0 has the wrong length");
    }
    return InstanceFile{std::move(inst), std::move(x0)};
}

NetworkFile network_from_json(const Json& j) {
    NetworkFile net;
    net.source = field(j, "source").get<std::string>();
    net.sink = field(j, "sink").get<std::string>();
    for (const auto& a : field(j, "arcs")) {
        const Json& cap = field(a, "cap");
        if (!cap.is_number_integer()) throw InputError("arc capacity must be an integer");
        net.arcs.push_back(Arc{field(a, "tail").get<std::string>(),
                               field(a, "head").get<std::string>(), cap.get<Int>()});
    }
    return net;
}

Json to_json(const NetworkFile& net) {
    Json j;
    j["source"] = net.source;
    j["sink"] = net.sink;
    Json arcs = Json::array();
    for (const auto& a : net.arcs) arcs.push_back({{"tail", a.tail}, {"head", a.head}, {"cap", a.capacity}});
    j["arcs"] = std::move(arcs);
    return j;
}

NFoldFile nfold_from_json(const Json& j) {
    const Json& n = field(j, "N");
    if (!n.is_number_integer() || n.get<Int>() < 1) throw InputError("\"N\" must be a positive integer");
    NFoldFile file{NFoldSpec(matrix_from_json(field(j, "A")), matrix_from_json(field(j, "B")),
                             n.get<std::size_t>()),
                   std::nullopt, std::nullopt, std::nullopt, Domain::integer};
    if (j.contains("b")) file.b = int_vector(j.at("b"), "b");
    if (j.contains("c")) file.c = int_vector(j.at("c"), "c");
    if (j.contains("u")) file.u = int_vector(j.at("u"), "u");
    if (j.contains("domain")) file.domain = parse_domain(j.at("domain").get<std::string>());
    return file;
}

Json to_json(const NFoldSpec& spec) {
    Json j;
    j["A"] = to_json(spec.a);
    j["B"] = to_json(spec.b);
    j["N"] = spec.n;
    return j;
}

Json to_json(const NFoldReport& report) {
    Json j;
    j["feasible"] = report.feasible;
    j["phase1_optimum"] = rational_json(report.phase1_optimum);
    j["phase1_steps"] = report.phase1_steps;
    j["phase2_steps"] = report.phase2_steps;
    j["graver_size"] = report.graver_size;
    j["test_set_size"] = report.test_set_size;
    j["graver_complexity"] = report.graver_complexity;
    if (report.start) j["x0"] = to_json(*report.start);
    if (report.optimum) j["x"] = to_json(*report.optimum);
    if (report.optimum_value) j["objective"] = rational_json(*report.optimum_value);
    j["phase1_trace"] = to_json(report.phase1_trace);
    if (report.feasible) j["phase2_trace"] = to_json(report.phase2_trace);
    return j;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw InputError(path + ": " + e.what());
    }
}

}  // namespace graverpath::io
