#include "latcut/json_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace latcut {

namespace {

[[noreturn]] void schema_error(const std::string& what) { raise(Errc::SchemaError, what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    schema_error(std::string("missing field '") + name + "'");
  }
  return j.at(name);
}

std::vector<std::string> string_list(const Json& j, const char* what) {
  if (!j.is_array()) schema_error(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& item : j) {
    if (!item.is_string()) schema_error(std::string(what) + " must contain only strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::map<std::string, std::string> string_map(const Json& j, const char* what) {
  if (!j.is_object()) schema_error(std::string(what) + " must be an object");
  std::map<std::string, std::string> out;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_string()) schema_error(std::string(what) + " values must be strings");
    out.emplace(key, value.get<std::string>());
  }
  return out;
}

Json law_to_json(const Lattice& l, const LawCheck& check) {
  Json j;
  j["holds"] = check.holds;
  if (!check.holds) {
    Json witness = Json::array();
    for (int e : check.witness) witness.push_back(l.label(e));
    j["witness"] = witness;
  }
  return j;
}

Json crisp_to_json(const CrispSet& s) {
  Json j = Json::array();
  for (const auto& label : s.member_labels()) j.push_back(label);
  return j;
}

}  // namespace

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    raise(Errc::ParseError, e.what());
  }
}

Json load_json_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) raise(Errc::ParseError, "cannot open '" + p.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str());
}

std::shared_ptr<const Lattice> lattice_from_json(const Json& j) {
  auto elements = string_list(field(j, "elements"), "elements");
  const Json& covers_json = field(j, "covers");
  if (!covers_json.is_array()) schema_error("covers must be an array of pairs");
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& cover : covers_json) {
    if (!cover.is_array() || cover.size() != 2 || !cover[0].is_string() || !cover[1].is_string()) {
      schema_error("each cover must be a [lower, upper] pair of labels");
    }
    covers.emplace_back(cover[0].get<std::string>(), cover[1].get<std::string>());
  }
  return std::make_shared<Lattice>(Lattice::from_covers(std::move(elements), std::move(covers)));
}

std::shared_ptr<const Lattice> load_lattice(const std::filesystem::path& path) {
  return lattice_from_json(load_json_file(path));
}

Json lattice_to_json(const Lattice& l) {
  Json j;
  j["elements"] = l.elements();
  Json covers = Json::array();
  for (const auto& [lo, hi] : l.cover_pairs()) {
    covers.push_back(Json::array({l.label(lo), l.label(hi)}));
  }
  j["covers"] = covers;
  return j;
}

namespace {

std::shared_ptr<const Lattice> lattice_ref_from_json(const Json& j,
                                                     const std::filesystem::path& base_dir) {
  if (j.is_string()) {
    std::filesystem::path p = j.get<std::string>();
    if (p.is_relative()) p = base_dir / p;
    return load_lattice(p);
  }
  return lattice_from_json(j);
}

}  // namespace

FuzzySet fuzzy_set_from_json(const Json& j, const std::filesystem::path& base_dir) {
  auto lattice = lattice_ref_from_json(field(j, "lattice"), base_dir);
  auto base = string_list(field(j, "base"), "base");
  auto membership = string_map(field(j, "membership"), "membership");
  return FuzzySet::from_labels(std::move(lattice), std::move(base), membership);
}

FuzzySet load_fuzzy_set(const std::filesystem::path& path) {
  return fuzzy_set_from_json(load_json_file(path), path.parent_path());
}

Json fuzzy_set_to_json(const FuzzySet& f, bool include_lattice) {
  Json j;
  if (include_lattice) j["lattice"] = lattice_to_json(f.lattice());
  j["base"] = f.base();
  Json membership = Json::object();
  for (int x = 0; x < f.size(); ++x) {
    membership[f.base()[static_cast<size_t>(x)]] = f.lattice().label(f.value(x));
  }
  j["membership"] = membership;
  return j;
}

PointMap point_map_from_json(const Json& j, std::vector<std::string> source,
                             std::vector<std::string> target) {
  return PointMap::from_labels(std::move(source), std::move(target),
                               string_map(field(j, "map"), "map"));
}

LTopSpace topology_from_json(const Json& j, const std::filesystem::path& base_dir) {
  auto lattice = lattice_ref_from_json(field(j, "lattice"), base_dir);
  const Json& carrier_json = field(j, "carrier");
  auto base = string_list(field(carrier_json, "base"), "carrier.base");
  FuzzySet carrier = FuzzySet::from_labels(lattice, base, string_map(field(carrier_json, "membership"), "membership"));

  LTopSpace space{std::move(carrier), {}};
  const Json& opens_json = field(j, "opens");
  if (!opens_json.is_array()) schema_error("opens must be an array");
  for (const auto& open : opens_json) {
    space.opens.push_back(
        FuzzySet::from_labels(lattice, base, string_map(field(open, "membership"), "membership")));
  }
  return space;
}

LTopSpace load_topology(const std::filesystem::path& path) {
  return topology_from_json(load_json_file(path), path.parent_path());
}

std::pair<FuzzySet, GradedOpTable> group_from_json(const Json& j,
                                                   const std::filesystem::path& base_dir) {
  FuzzySet carrier = fuzzy_set_from_json(field(j, "carrier"), base_dir);
  GradedOpTable op = GradedOpTable::all_bottom(carrier.lattice_ptr(), carrier.base());
  const Json& entries = field(j, "gr");
  if (!entries.is_array()) schema_error("gr must be an array of graded triples");
  for (const auto& entry : entries) {
    const Json& lhs = field(entry, "lhs");
    if (!lhs.is_array() || lhs.size() != 2 || !lhs[0].is_string() || !lhs[1].is_string()) {
      schema_error("gr entry lhs must be a pair of point labels");
    }
    const int a = op.point_index(lhs[0].get<std::string>());
    const int b = op.point_index(lhs[1].get<std::string>());
    const int c = op.point_index(field(entry, "rhs").get<std::string>());
    const int g = carrier.lattice().index_of(field(entry, "grade").get<std::string>());
    op.set_grade(a, b, c, g);
  }
  return {std::move(carrier), std::move(op)};
}

std::pair<FuzzySet, GradedOpTable> load_group(const std::filesystem::path& path) {
  return group_from_json(load_json_file(path), path.parent_path());
}

RoughInput rough_from_json(const Json& j) {
  auto universe = string_list(field(j, "universe"), "universe");
  const Json& partition_json = field(j, "partition");
  if (!partition_json.is_array()) schema_error("partition must be an array of blocks");
  std::vector<std::vector<std::string>> partition;
  for (const auto& block : partition_json) partition.push_back(string_list(block, "partition block"));
  ApproximationSpace space = ApproximationSpace::create(std::move(universe), std::move(partition));
  CrispSet target = space.subset(string_list(field(j, "target"), "target"));
  RoughInput input{std::move(space), std::move(target), std::nullopt, std::nullopt};
  if (j.contains("alpha")) input.alpha = Rational::parse(j.at("alpha").get<std::string>());
  if (j.contains("beta")) input.beta = Rational::parse(j.at("beta").get<std::string>());
  return input;
}

RoughInput load_rough(const std::filesystem::path& path) {
  return rough_from_json(load_json_file(path));
}

Json classification_to_json(const Lattice& l, const ClassificationReport& report) {
  Json j;
  j["frame"] = law_to_json(l, report.frame);
  j["prelinear"] = law_to_json(l, report.prelinear);
  j["semilinear"] = law_to_json(l, report.semilinear);
  return j;
}

Json arrow_properties_to_json(const ArrowPropertiesReport& report) {
  Json j;
  Json props = Json::array();
  for (const auto& p : report.properties) {
    Json item;
    item["name"] = p.name;
    item["holds"] = p.holds;
    if (!p.holds) item["witness"] = p.witness;
    props.push_back(item);
  }
  j["properties"] = props;
  j["subsets_exhaustive"] = report.subsets_exhaustive;
  return j;
}

Json axiom_report_to_json(const AxiomReport& report) {
  Json j;
  j["verdict"] = verdict_name(report.verdict);
  Json axioms = Json::object();
  for (int i = 1; i <= 9; ++i) {
    Json ax;
    ax["pass"] = report.axiom(i).holds;
    if (!report.axiom(i).holds) ax["witness"] = report.axiom(i).witness;
    axioms[std::to_string(i)] = ax;
  }
  j["axioms"] = axioms;
  j["family_size"] = report.family_size;
  j["union_closed"] = report.union_closed;
  if (!report.union_closed) j["union_witness"] = report.closure_witness;
  j["subsets_exhaustive"] = report.subsets_exhaustive;
  if (!report.failures.empty()) j["failures"] = report.failures;
  return j;
}

Json topology_check_to_json(const TopologyCheck& check) {
  Json j;
  j["holds"] = check.holds;
  if (!check.holds) {
    j["condition"] = check.witness->condition;
    j["witness"] = check.witness->detail;
  }
  return j;
}

Json group_result_to_json(const FuzzySet& carrier,
                          const std::variant<FuzzyGroup, GroupViolation>& result) {
  Json j;
  if (std::holds_alternative<FuzzyGroup>(result)) {
    const FuzzyGroup& g = std::get<FuzzyGroup>(result);
    j["holds"] = true;
    j["identity"] = carrier.base()[static_cast<size_t>(g.identity)];
    Json inverses = Json::object();
    for (size_t i = 0; i < g.inverse.size(); ++i) {
      if (g.inverse[i] >= 0) {
        inverses[carrier.base()[i]] = carrier.base()[static_cast<size_t>(g.inverse[i])];
      }
    }
    j["inverses"] = inverses;
  } else {
    const GroupViolation& v = std::get<GroupViolation>(result);
    j["holds"] = false;
    switch (v.kind) {
      case GroupViolation::Kind::BinaryOp: j["violation"] = "binary_operation"; break;
      case GroupViolation::Kind::NoIdentity: j["violation"] = "no_identity"; break;
      case GroupViolation::Kind::NoInverse: j["violation"] = "no_inverse"; break;
      case GroupViolation::Kind::Associativity: j["violation"] = "associativity"; break;
    }
    Json where = Json::array();
    for (int p : v.where) {
      if (p >= 0) where.push_back(carrier.base()[static_cast<size_t>(p)]);
    }
    j["where"] = where;
    j["witness"] = v.detail;
  }
  return j;
}

Json rough_report_to_json(const ApproximationSpace& space, const CrispSet& target,
                          const Rational& alpha, const Rational& beta) {
  Json j;
  j["universe"] = space.universe();
  j["target"] = crisp_to_json(target);
  j["alpha"] = alpha.str();
  j["beta"] = beta.str();

  const RoughMembership mu = rough_membership(space, target);
  Json mu_json = Json::object();
  for (int p = 0; p < space.size(); ++p) {
    mu_json[space.universe()[static_cast<size_t>(p)]] = mu.values[static_cast<size_t>(p)].str();
  }
  j["rough_membership"] = mu_json;

  const auto [plower, pupper] = pawlak_approx(space, target);
  j["pawlak"] = Json{{"lower", crisp_to_json(plower)}, {"upper", crisp_to_json(pupper)}};

  const auto [lower, upper] = prob_approx(space, target, alpha, beta);
  j["probabilistic"] = Json{{"lower", crisp_to_json(lower)}, {"upper", crisp_to_json(upper)}};

  const FuzzyApprox fuzzy = fuzzy_approx(space, target, alpha, beta);
  Json flower = Json::object(), fupper = Json::object();
  for (int p = 0; p < space.size(); ++p) {
    flower[space.universe()[static_cast<size_t>(p)]] = fuzzy.lower[static_cast<size_t>(p)].str();
    fupper[space.universe()[static_cast<size_t>(p)]] = fuzzy.upper[static_cast<size_t>(p)].str();
  }
  j["fuzzy"] = Json{{"lower", flower}, {"upper", fupper}};
  return j;
}

std::string to_dot(const Lattice& l) {
  std::ostringstream os;
  os << "digraph hasse {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=ellipse];\n";
  int max_height = 0;
  for (int e = 0; e < l.size(); ++e) max_height = std::max(max_height, l.height(e));
  for (int h = 0; h <= max_height; ++h) {
    os << "  { rank=same;";
    for (int e = 0; e < l.size(); ++e) {
      if (l.height(e) == h) os << " \"" << l.label(e) << "\";";
    }
    os << " }\n";
  }
  for (const auto& [lo, hi] : l.cover_pairs()) {
    os << "  \"" << l.label(lo) << "\" -> \"" << l.label(hi) << "\";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace latcut
