#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "graverpath/engine.hpp"
#include "graverpath/lab.hpp"
#include "graverpath/nfold.hpp"
#include "graverpath/testsets.hpp"

namespace graverpath::io {

using Json = nlohmann::ordered_json;

Json to_json(const IntegerMatrix& m);
IntegerMatrix matrix_from_json(const Json& j);

Json to_json(std::span<const Rational> x);
RationalVector rational_vector_from_json(const Json& j);

/// {"matrix": [[...]], "kind": "graver"|"circuits", "elements": [[...]]}
Json to_json(const TestSet& t);
TestSet test_set_from_json(const Json& j);

/// {"rule", "start_objective", "steps": [{"z", "alpha", "objective", "steepness", "cleanup"}]}
Json to_json(const AugmentationTrace& trace);
AugmentationTrace trace_from_json(const Json& j);
/// One step per row, same fields as the JSON trace.
std::string trace_to_csv(const AugmentationTrace& trace);

/// An instance file may carry an optional feasible start under "x0".
struct InstanceFile {
    Instance instance;
    std::optional<RationalVector> x0;
};

/// {"name", "d", "n", "A", "b", "c", "u", "domain"}
Json to_json(const Instance& inst);
Json to_json(const InstanceFile& file);
InstanceFile instance_from_json(const Json& j);

/// {"source": str, "sink": str, "arcs": [{"tail", "head", "cap"}]}
struct NetworkFile {
    std::string source;
    std::string sink;
    std::vector<Arc> arcs;
};
NetworkFile network_from_json(const Json& j);
Json to_json(const NetworkFile& net);

/// {"A", "B", "N"} with optional problem data "b", "c", "u", "domain".
struct NFoldFile {
    NFoldSpec spec;
    std::optional<IntVector> b;
    std::optional<IntVector> c;
    std::optional<IntVector> u;
    Domain domain = Domain::integer;
};
NFoldFile nfold_from_json(const Json& j);
Json to_json(const NFoldSpec& spec);
Json to_json(const NFoldReport& report);

Json read_json_file(const std::string& path);

}  // namespace graverpath::io
