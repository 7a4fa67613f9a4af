#include <doctest.h>

#include "latcut/json_io.hpp"
#include "support.hpp"

using namespace latcut;
using namespace latcut::testing;

TEST_CASE("lattice specs round-trip") {
  const char* text = R"({
    "elements": ["bot", "b", "c", "a", "top"],
    "covers": [["bot","b"], ["bot","c"], ["b","a"], ["c","a"], ["a","top"]]
  })";
  const auto l = lattice_from_json(parse_json_text(text));
  CHECK(l->structurally_equal(*m5()));

  const Json back = lattice_to_json(*l);
  const auto again = lattice_from_json(back);
  CHECK(again->structurally_equal(*l));
}

TEST_CASE("parse and schema errors are distinct") {
  CHECK_THROWS_AS(parse_json_text("{ not json"), Error);
  try {
    parse_json_text("{ not json");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParseError);
  }
  try {
    lattice_from_json(parse_json_text(R"({"elements": ["a"]})"));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SchemaError);
  }
  try {
    lattice_from_json(parse_json_text(R"({"elements": ["a", "b"], "covers": [["a"]]})"));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SchemaError);
  }
}

TEST_CASE("fuzzy set specs") {
  const char* text = R"({
    "lattice": {
      "elements": ["bot", "b", "c", "a", "top"],
      "covers": [["bot","b"], ["bot","c"], ["b","a"], ["c","a"], ["a","top"]]
    },
    "base": ["p", "q", "r"],
    "membership": {"p": "a", "q": "b", "r": "bot"}
  })";
  const FuzzySet f = fuzzy_set_from_json(parse_json_text(text), ".");
  CHECK(f.lattice().structurally_equal(*m5()));
  CHECK(f.value(0) == f.lattice().index_of("a"));

  const Json back = fuzzy_set_to_json(f);
  CHECK(fuzzy_set_from_json(back, ".") == f);

  try {
    fuzzy_set_from_json(parse_json_text(R"({"base": []})"), ".");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SchemaError);
  }
}

TEST_CASE("point map spec") {
  const PointMap f = point_map_from_json(parse_json_text(R"({"map": {"p": "u", "q": "u"}})"),
                                         {"p", "q"}, {"u"});
  CHECK(f.apply(0) == 0);
  CHECK(f.apply(1) == 0);
}

TEST_CASE("rough spec") {
  const char* text = R"({
    "universe": ["1", "2", "3", "4", "5", "6"],
    "partition": [["1","2"], ["3","4","5"], ["6"]],
    "target": ["1", "3", "4"],
    "alpha": "3/5",
    "beta": "2/5"
  })";
  const RoughInput input = rough_from_json(parse_json_text(text));
  CHECK(input.space.block_count() == 3);
  CHECK(input.alpha == Rational::of(3, 5));
  CHECK(input.beta == Rational::of(2, 5));

  const Json report = rough_report_to_json(input.space, input.target, *input.alpha, *input.beta);
  CHECK(report["rough_membership"]["3"] == "2/3");
  CHECK(report["probabilistic"]["lower"].size() == 3);
  CHECK(report["fuzzy"]["upper"]["1"] == "1/2");
}

TEST_CASE("axiom report serialization") {
  const auto l = m5();
  const FuzzySet a = FuzzySet::from_labels(l, {"p", "q"}, {{"p", "a"}, {"q", "b"}});
  const AxiomReport report = check_localic_axioms(relation_over(cut_family(a), ArrowKind::GodelLike));
  const Json j = axiom_report_to_json(report);
  CHECK(j["verdict"] == "localic frame");
  CHECK(j["axioms"]["1"]["pass"] == true);
  CHECK(j["axioms"].size() == 9);
}

TEST_CASE("dot export") {
  const std::string dot = to_dot(*m5());
  CHECK(dot.find("digraph hasse") != std::string::npos);
  CHECK(dot.find("\"bot\" -> \"b\"") != std::string::npos);
  CHECK(dot.find("\"a\" -> \"top\"") != std::string::npos);
  CHECK(dot.find("rank=same") != std::string::npos);
  // bot alone on rank 0, b and c on the same rank.
  CHECK(dot.find("{ rank=same; \"bot\"; }") != std::string::npos);
  CHECK(dot.find("{ rank=same; \"b\"; \"c\"; }") != std::string::npos);
}

TEST_CASE("classification serialization carries witnesses") {
  const auto l = m5();
  const Json j = classification_to_json(*l, l->classify());
  CHECK(j["frame"]["holds"] == true);
  CHECK(j["prelinear"]["holds"] == false);
  CHECK(j["prelinear"]["witness"][0] == "b");
  CHECK(j["prelinear"]["witness"][1] == "c");
  CHECK(j["semilinear"]["holds"] == true);
}
