#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "latcut/json_io.hpp"

namespace {

using latcut::Json;

constexpr int kExitOk = 0;         // verified / true outcome
constexpr int kExitFalsified = 1;  // property falsified, witness in the report
constexpr int kExitInputError = 2;

struct OutputOptions {
  std::string format = "text";
  std::string out_path;
};

void add_output_flags(CLI::App* cmd, OutputOptions& out) {
  cmd->add_option("--format", out.format, "Report format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  cmd->add_option("--out", out.out_path, "Write the report to a file instead of stdout");
}

void emit(const OutputOptions& out, const std::string& text) {
  if (out.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out.out_path, std::ios::binary);
  if (!file) latcut::raise(latcut::Errc::ParseError, "cannot write '" + out.out_path + "'");
  file << text;
}

std::string law_text(const latcut::Lattice& l, const char* name, const latcut::LawCheck& check) {
  std::string line = std::string(name) + ": " + (check.holds ? "yes" : "no");
  if (!check.holds) {
    line += "  witness (";
    for (size_t i = 0; i < check.witness.size(); ++i) {
      line += (i ? ", " : "") + l.label(check.witness[i]);
    }
    line += ")";
  }
  return line + "\n";
}

int run_classify(const std::string& lattice_path, bool with_properties, const OutputOptions& out) {
  const auto lattice = latcut::load_lattice(lattice_path);
  const latcut::ClassificationReport report = lattice->classify();
  const auto properties =
      with_properties ? latcut::check_arrow_properties(*lattice) : latcut::ArrowPropertiesReport{};
  if (out.format == "json") {
    Json j = latcut::classification_to_json(*lattice, report);
    if (with_properties) j["arrow_properties"] = latcut::arrow_properties_to_json(properties);
    emit(out, j.dump(2) + "\n");
  } else {
    std::string text;
    text += law_text(*lattice, "frame     ", report.frame);
    text += law_text(*lattice, "prelinear ", report.prelinear);
    text += law_text(*lattice, "semilinear", report.semilinear);
    if (with_properties) {
      for (const auto& p : properties.properties) {
        text += "property " + p.name + ": " + (p.holds ? "pass" : "FAIL  [" + p.witness + "]") + "\n";
      }
    }
    emit(out, text);
  }
  return report.all_hold() ? kExitOk : kExitFalsified;
}

int run_cut(const std::string& set_path, const std::string& alpha, bool crisp,
            const OutputOptions& out) {
  const latcut::FuzzySet a = latcut::load_fuzzy_set(set_path);
  const int alpha_id = a.lattice().index_of(alpha);
  if (crisp) {
    const latcut::CrispSet cut = latcut::alpha_cut(a, alpha_id);
    if (out.format == "json") {
      Json j;
      j["alpha"] = alpha;
      Json members = Json::array();
      for (const auto& label : cut.member_labels()) members.push_back(label);
      j["members"] = members;
      emit(out, j.dump(2) + "\n");
    } else {
      std::string text;
      for (const auto& label : cut.member_labels()) text += label + "\n";
      emit(out, text);
    }
    return kExitOk;
  }
  const latcut::FuzzySet cut = latcut::fuzzy_alpha_cut(a, alpha_id);
  if (out.format == "json") {
    emit(out, latcut::fuzzy_set_to_json(cut).dump(2) + "\n");
  } else {
    std::string text;
    for (int x = 0; x < cut.size(); ++x) {
      text += cut.base()[static_cast<size_t>(x)] + " -> " + cut.lattice().label(cut.value(x)) + "\n";
    }
    emit(out, text);
  }
  return kExitOk;
}

int run_verify_localic(const std::string& set_path, const std::string& arrow_name,
                       const latcut::AxiomOptions& options, const OutputOptions& out) {
  const latcut::FuzzySet a = latcut::load_fuzzy_set(set_path);
  const latcut::ArrowKind arrow =
      arrow_name == "residuated" ? latcut::ArrowKind::Residuated : latcut::ArrowKind::GodelLike;
  const latcut::FuzzyRelation rel = latcut::relation_over(latcut::cut_family(a), arrow);
  const latcut::AxiomReport report = latcut::check_localic_axioms(rel, options);
  if (out.format == "json") {
    emit(out, latcut::axiom_report_to_json(report).dump(2) + "\n");
  } else {
    std::string text = "verdict: " + std::string(latcut::verdict_name(report.verdict)) + "\n";
    for (int i = 1; i <= 9; ++i) {
      text += "axiom " + std::to_string(i) + ": " + (report.axiom(i).holds ? "pass" : "FAIL") +
              (report.axiom(i).holds ? "" : "  [" + report.axiom(i).witness + "]") + "\n";
    }
    text += "family size: " + std::to_string(report.family_size) + "\n";
    text += "union closed: " + std::string(report.union_closed ? "yes" : "no") + "\n";
    emit(out, text);
  }
  return report.verdict == latcut::Verdict::LocalicFrame ? kExitOk : kExitFalsified;
}

int run_check_topology(const std::string& space_path, const latcut::TopologyOptions& options,
                       const OutputOptions& out) {
  const latcut::LTopSpace space = latcut::load_topology(space_path);
  const latcut::TopologyCheck check = latcut::check_topology(space, options);
  if (out.format == "json") {
    emit(out, latcut::topology_check_to_json(check).dump(2) + "\n");
  } else if (check.holds) {
    emit(out, "topology: yes\n");
  } else {
    emit(out, "topology: no  (condition " + std::to_string(check.witness->condition) + ": " +
                  check.witness->detail + ")\n");
  }
  return check.holds ? kExitOk : kExitFalsified;
}

int run_check_group(const std::string& group_path, const OutputOptions& out) {
  const auto [carrier, op] = latcut::load_group(group_path);
  const auto result = latcut::check_fuzzy_group(carrier, op);
  if (out.format == "json") {
    emit(out, latcut::group_result_to_json(carrier, result).dump(2) + "\n");
  } else {
    const Json j = latcut::group_result_to_json(carrier, result);
    std::string text = std::string("fuzzy group: ") + (j["holds"].get<bool>() ? "yes" : "no") + "\n";
    if (j["holds"].get<bool>()) {
      text += "identity: " + j["identity"].get<std::string>() + "\n";
    } else {
      text += "violation: " + j["violation"].get<std::string>() + "  " +
              j["witness"].get<std::string>() + "\n";
    }
    emit(out, text);
  }
  return std::holds_alternative<latcut::FuzzyGroup>(result) ? kExitOk : kExitFalsified;
}

int run_subgroup(const std::string& group_path, const std::string& alpha, const OutputOptions& out) {
  const auto [carrier, op] = latcut::load_group(group_path);
  auto result = latcut::check_fuzzy_group(carrier, op);
  if (std::holds_alternative<latcut::GroupViolation>(result)) {
    latcut::raise(latcut::Errc::SchemaError,
                  "input is not a fuzzy group: " + std::get<latcut::GroupViolation>(result).detail);
  }
  const latcut::FuzzyGroup group = std::get<latcut::FuzzyGroup>(std::move(result));
  const int alpha_id = carrier.lattice().index_of(alpha);
  const latcut::FuzzyGroup sub = latcut::restrict_to_cut(group, alpha_id);

  Json j;
  j["alpha"] = alpha;
  j["carrier"] = latcut::fuzzy_set_to_json(sub.carrier, false);
  j["identity"] = sub.carrier.base()[static_cast<size_t>(sub.identity)];
  Json support = Json::array();
  for (int p : sub.carrier.support()) support.push_back(sub.carrier.base()[static_cast<size_t>(p)]);
  j["support"] = support;
  emit(out, j.dump(2) + "\n");
  return kExitOk;
}

int run_rough(const std::string& input_path, const std::string& alpha_override,
              const std::string& beta_override, const OutputOptions& out) {
  latcut::RoughInput input = latcut::load_rough(input_path);
  if (!alpha_override.empty()) input.alpha = latcut::Rational::parse(alpha_override);
  if (!beta_override.empty()) input.beta = latcut::Rational::parse(beta_override);
  if (!input.alpha || !input.beta) {
    latcut::raise(latcut::Errc::BadParameters, "alpha and beta thresholds are required");
  }
  emit(out, latcut::rough_report_to_json(input.space, input.target, *input.alpha, *input.beta).dump(2) + "\n");
  return kExitOk;
}

int run_enumerate(int n, bool distributive, const std::string& predicate_name,
                  const OutputOptions& out) {
  Json j;
  j["n"] = n;
  j["distributive_only"] = distributive;
  Json items = Json::array();
  int count = 0;
  if (predicate_name.empty()) {
    for (const latcut::Lattice& l : latcut::enumerate_lattices(n, distributive)) {
      items.push_back(latcut::lattice_to_json(l));
      ++count;
    }
  } else {
    const auto predicate = latcut::parse_predicate(predicate_name);
    if (!predicate) {
      latcut::raise(latcut::Errc::BadParameters, "unknown predicate '" + predicate_name + "'");
    }
    j["predicate"] = predicate_name;
    for (const latcut::SearchHit& hit : latcut::search_lattices(n, *predicate, distributive)) {
      Json item;
      item["lattice"] = latcut::lattice_to_json(hit.lattice);
      item["classification"] = latcut::classification_to_json(hit.lattice, hit.report);
      items.push_back(item);
      ++count;
    }
  }
  j["count"] = count;
  j["lattices"] = items;
  emit(out, j.dump(2) + "\n");
  return kExitOk;
}

int run_export_dot(const std::string& lattice_path, const OutputOptions& out) {
  const auto lattice = latcut::load_lattice(lattice_path);
  emit(out, latcut::to_dot(*lattice));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on finite bounded lattices, L-fuzzy sets and their cut structures"};
  app.require_subcommand(1);

  OutputOptions out;
  std::string lattice_path, set_path, space_path, group_path, rough_path;
  std::string alpha, beta, arrow = "godel", predicate;
  bool crisp = false, distributive = false, with_properties = false;
  int n = 5;
  latcut::AxiomOptions axiom_options;
  latcut::TopologyOptions topology_options;

  auto* classify = app.add_subcommand("classify", "Frame / prelinear / semilinear classification");
  classify->add_option("--lattice", lattice_path, "Lattice spec (JSON)")->required();
  classify->add_flag("--properties", with_properties, "Also evaluate the arrow laws");
  add_output_flags(classify, out);

  auto* cut = app.add_subcommand("cut", "Fuzzy alpha-cut of a fuzzy set");
  cut->add_option("--fuzzy-set", set_path, "Fuzzy set spec (JSON)")->required();
  cut->add_option("--alpha", alpha, "Cut level (lattice element label)")->required();
  cut->add_flag("--crisp", crisp, "Emit the crisp alpha-cut instead");
  add_output_flags(cut, out);

  auto* verify = app.add_subcommand("verify-localic", "Check the localic axioms on the cut family");
  verify->add_option("--fuzzy-set", set_path, "Fuzzy set spec (JSON)")->required();
  verify->add_option("--arrow", arrow, "Implication")->check(CLI::IsMember({"godel", "residuated"}))->capture_default_str();
  verify->add_option("--subset-bound", axiom_options.subset_bound, "Exhaustive subset bound")->capture_default_str();
  verify->add_option("--seed", axiom_options.seed, "Sampling seed")->capture_default_str();
  verify->add_flag("--strict-closure", axiom_options.strict_union_closure,
                   "Reject families not closed under pointwise union");
  verify->add_flag("--verbose", axiom_options.collect_all, "Collect every axiom failure");
  add_output_flags(verify, out);

  auto* topo = app.add_subcommand("check-topology", "Verify a fuzzy topological space");
  topo->add_option("--space", space_path, "Topology spec (JSON)")->required();
  topo->add_option("--subset-bound", topology_options.subset_bound, "Exhaustive subset bound")->capture_default_str();
  topo->add_option("--seed", topology_options.seed, "Sampling seed")->capture_default_str();
  add_output_flags(topo, out);

  auto* group = app.add_subcommand("check-group", "Verify a fuzzy group");
  group->add_option("--group", group_path, "Group spec (JSON)")->required();
  add_output_flags(group, out);

  auto* subgroup = app.add_subcommand("subgroup", "Fuzzy subgroup on an alpha-cut");
  subgroup->add_option("--group", group_path, "Group spec (JSON)")->required();
  subgroup->add_option("--alpha", alpha, "Cut level (lattice element label)")->required();
  add_output_flags(subgroup, out);

  auto* rough = app.add_subcommand("rough", "Rough membership and approximations");
  rough->add_option("--input", rough_path, "Approximation space spec (JSON)")->required();
  rough->add_option("--alpha", alpha, "Override the lower threshold");
  rough->add_option("--beta", beta, "Override the upper threshold");
  add_output_flags(rough, out);

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate bounded lattices up to isomorphism");
  enumerate->add_option("--size", n, "Number of elements (2..8)")->required();
  enumerate->add_flag("--distributive", distributive, "Keep only distributive lattices");
  enumerate->add_option("--predicate", predicate,
                        "Filter: not_prelinear | not_semilinear | prelinear_and_not_semilinear | "
                        "semilinear_and_not_prelinear");
  add_output_flags(enumerate, out);

  auto* dot = app.add_subcommand("export-dot", "Hasse diagram in DOT format");
  dot->add_option("--lattice", lattice_path, "Lattice spec (JSON)")->required();
  add_output_flags(dot, out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (classify->parsed()) return run_classify(lattice_path, with_properties, out);
    if (cut->parsed()) return run_cut(set_path, alpha, crisp, out);
    if (verify->parsed()) return run_verify_localic(set_path, arrow, axiom_options, out);
    if (topo->parsed()) return run_check_topology(space_path, topology_options, out);
    if (group->parsed()) return run_check_group(group_path, out);
    if (subgroup->parsed()) return run_subgroup(group_path, alpha, out);
    if (rough->parsed()) return run_rough(rough_path, alpha, beta, out);
    if (enumerate->parsed()) return run_enumerate(n, distributive, predicate, out);
    if (dot->parsed()) return run_export_dot(lattice_path, out);
  } catch (const latcut::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
