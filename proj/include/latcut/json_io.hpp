#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include <json.hpp>

#include "latcut/enumerate.hpp"
#include "latcut/fuzzy_set.hpp"
#include "latcut/group.hpp"
#include "latcut/localic.hpp"
#include "latcut/rough.hpp"
#include "latcut/topology.hpp"

namespace latcut {

using Json = nlohmann::ordered_json;

/// {"elements": [...], "covers": [["lo", "hi"], ...]}
std::shared_ptr<const Lattice> lattice_from_json(const Json& j);
std::shared_ptr<const Lattice> load_lattice(const std::filesystem::path& path);
Json lattice_to_json(const Lattice& lattice);

/// {"lattice": <inline spec or path>, "base": [...], "membership": {...}}
FuzzySet fuzzy_set_from_json(const Json& j, const std::filesystem::path& base_dir);
FuzzySet load_fuzzy_set(const std::filesystem::path& path);
Json fuzzy_set_to_json(const FuzzySet& f, bool include_lattice = true);

/// {"map": {"p": "u", ...}} against explicit source and target bases.
PointMap point_map_from_json(const Json& j, std::vector<std::string> source,
                             std::vector<std::string> target);

/// {"lattice": ..., "carrier": {...}, "opens": [{...}, ...]}; opens may
/// omit "lattice"/"base" and inherit the carrier's.
LTopSpace topology_from_json(const Json& j, const std::filesystem::path& base_dir);
LTopSpace load_topology(const std::filesystem::path& path);

/// {"carrier": <fuzzy set>, "gr": [{"lhs": ["x1","x2"], "rhs": "x3",
/// "grade": "l3"}, ...]}; omitted triples default to bottom.
std::pair<FuzzySet, GradedOpTable> group_from_json(const Json& j,
                                                   const std::filesystem::path& base_dir);
std::pair<FuzzySet, GradedOpTable> load_group(const std::filesystem::path& path);

struct RoughInput {
  ApproximationSpace space;
  CrispSet target;
  std::optional<Rational> alpha;
  std::optional<Rational> beta;
};

/// {"universe": [...], "partition": [[...], ...], "target": [...],
///  "alpha": "3/5", "beta": "2/5"}
RoughInput rough_from_json(const Json& j);
RoughInput load_rough(const std::filesystem::path& path);

Json classification_to_json(const Lattice& lattice, const ClassificationReport& report);
Json arrow_properties_to_json(const ArrowPropertiesReport& report);
Json axiom_report_to_json(const AxiomReport& report);
Json topology_check_to_json(const TopologyCheck& check);
Json group_result_to_json(const FuzzySet& carrier, const std::variant<FuzzyGroup, GroupViolation>& result);
Json rough_report_to_json(const ApproximationSpace& space, const CrispSet& target,
                          const Rational& alpha, const Rational& beta);

/// Hasse diagram with elements ranked by order-theoretic height.
std::string to_dot(const Lattice& lattice);

Json parse_json_text(const std::string& text);        // ParseError on bad syntax
Json load_json_file(const std::filesystem::path& p);  // ParseError on bad syntax or IO

}  // namespace latcut
