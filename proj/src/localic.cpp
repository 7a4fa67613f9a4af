#include "latcut/localic.hpp"

#include <algorithm>
#include <sstream>

namespace latcut {

namespace {

std::string render(const FuzzySet& f) {
  std::ostringstream os;
  os << "{";
  for (int x = 0; x < f.size(); ++x) {
    os << (x ? ", " : "") << f.base()[static_cast<size_t>(x)] << ": "
       << f.lattice().label(f.value(x));
  }
  os << "}";
  return os.str();
}

std::string render_subset(const std::vector<FuzzySet>& family, std::uint64_t mask) {
  std::ostringstream os;
  os << "S = {";
  bool first = true;
  for (size_t i = 0; i < family.size(); ++i) {
    if (mask & (1ull << i)) {
      os << (first ? "" : ", ") << "#" << i;
      first = false;
    }
  }
  os << "}";
  return os.str();
}

FuzzySet pointwise_union(const std::vector<FuzzySet>& family, std::uint64_t mask,
                         const FuzzySet& empty) {
  FuzzySet acc = empty;
  for (size_t i = 0; i < family.size(); ++i) {
    if (mask & (1ull << i)) acc = unite(acc, family[i]);
  }
  return acc;
}

}  // namespace

int relation_value(const FuzzySet& a, const FuzzySet& b, ArrowKind arrow) {
  const Lattice& l = a.lattice();
  int acc = l.top();
  for (int x = 0; x < a.size(); ++x) {
    acc = l.meet(acc, l.implication(arrow, a.value(x), b.value(x)));
  }
  return acc;
}

FuzzyRelation relation_over(std::vector<FuzzySet> family, ArrowKind arrow) {
  if (family.empty()) raise(Errc::BadParameters, "relation requires a nonempty family");
  for (size_t i = 1; i < family.size(); ++i) {
    if (family[i].base() != family[0].base()) {
      raise(Errc::BaseMismatch, "family members have different base sets");
    }
    if (family[i].lattice_ptr() != family[0].lattice_ptr() &&
        !family[i].lattice().structurally_equal(family[0].lattice())) {
      raise(Errc::LatticeMismatch, "family members have different value lattices");
    }
  }
  FuzzyRelation rel;
  rel.arrow = arrow;
  rel.family = std::move(family);
  const size_t m = rel.family.size();
  rel.values.resize(m * m);
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < m; ++j) {
      rel.values[i * m + j] = relation_value(rel.family[i], rel.family[j], arrow);
    }
  }
  return rel;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::LocalicFrame: return "localic frame";
    case Verdict::LocalicPreorderedSet: return "localic preordered set";
    case Verdict::Neither: return "neither";
  }
  return "neither";
}

bool AxiomReport::preorder_axioms_hold() const {
  for (size_t i = 0; i < axioms.size(); ++i) {
    if (i != 5 && !axioms[i].holds) return false;
  }
  return true;
}

AxiomReport check_localic_axioms(const FuzzyRelation& relation, const AxiomOptions& options) {
  // Working copy with the empty fuzzy set adjoined (it is the join of the
  // empty subfamily, so the subset quantifiers need it).
  FuzzyRelation rel = relation;
  const FuzzySet empty = empty_like(rel.family.front());
  if (std::find(rel.family.begin(), rel.family.end(), empty) == rel.family.end()) {
    auto family = rel.family;
    family.push_back(empty);
    rel = relation_over(std::move(family), rel.arrow);
  }

  const auto& family = rel.family;
  const Lattice& l = rel.lattice();
  const int m = static_cast<int>(family.size());
  if (m > 62) raise(Errc::BoundExceeded, "family too large for subset quantification");

  AxiomReport report;
  report.family_size = m;

  auto member_index = [&](const FuzzySet& f) -> int {
    for (int i = 0; i < m; ++i) {
      if (family[static_cast<size_t>(i)] == f) return i;
    }
    return -1;
  };

  auto fail = [&](int axiom, const std::string& witness) {
    auto& r = report.axioms[static_cast<size_t>(axiom - 1)];
    if (r.holds) {
      r.holds = false;
      r.witness = witness;
    }
    if (options.collect_all) {
      report.failures.push_back("axiom " + std::to_string(axiom) + ": " + witness);
    }
  };

  // Pairwise meets must land in the family before axiom 6 can even be
  // phrased as an identity between matrix entries.
  std::vector<std::vector<int>> meet_of(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m), -1));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const FuzzySet mij = intersect(family[static_cast<size_t>(i)], family[static_cast<size_t>(j)]);
      const int k = member_index(mij);
      if (k < 0) {
        raise(Errc::FamilyNotClosed, "pointwise meet of members #" + std::to_string(i) + " and #" +
                                         std::to_string(j) + " = " + render(mij) +
                                         " is not in the family");
      }
      meet_of[static_cast<size_t>(i)][static_cast<size_t>(j)] = k;
    }
  }

  const auto masks = subset_masks(m, options.subset_bound, options.sample_count, options.seed,
                                  &report.subsets_exhaustive);

  // Union closure over the quantified subsets, reported rather than fatal:
  // every axiom referring to \/S is evaluated by the defining formula, so
  // an escaped union still has a well-defined relation value.
  std::vector<FuzzySet> unions;
  unions.reserve(masks.size());
  for (std::uint64_t mask : masks) {
    FuzzySet u = pointwise_union(family, mask, empty);
    if (report.union_closed && member_index(u) < 0) {
      report.union_closed = false;
      report.closure_witness = render_subset(family, mask) + " joins to " + render(u);
    }
    unions.push_back(std::move(u));
  }
  if (!report.union_closed && options.strict_union_closure) {
    raise(Errc::FamilyNotClosed, "family is not closed under pointwise union: " + report.closure_witness);
  }

  // Designated top: the pointwise-largest member.
  FuzzySet all = empty;
  for (const auto& f : family) all = unite(all, f);
  const int top_index = member_index(all);

  for (int a = 0; a < m; ++a) {
    if (rel.at(a, a) != l.top()) {
      fail(1, "R(#" + std::to_string(a) + ", #" + std::to_string(a) + ") = " + l.label(rel.at(a, a)));
      if (!options.collect_all) break;
    }
  }

  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (a == b) continue;
      if (rel.at(a, b) == l.top() && rel.at(b, a) == l.top() &&
          !(family[static_cast<size_t>(a)] == family[static_cast<size_t>(b)])) {
        fail(2, "members #" + std::to_string(a) + " and #" + std::to_string(b) +
                    " are related by top both ways but differ");
      }
    }
  }

  for (int a = 0; a < m && (report.axioms[2].holds || options.collect_all); ++a) {
    for (int b = 0; b < m; ++b) {
      for (int c = 0; c < m; ++c) {
        if (!l.leq(l.meet(rel.at(a, b), rel.at(b, c)), rel.at(a, c))) {
          fail(3, "(#" + std::to_string(a) + ", #" + std::to_string(b) + ", #" + std::to_string(c) + ")");
        }
      }
    }
  }

  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      const int ab = meet_of[static_cast<size_t>(a)][static_cast<size_t>(b)];
      if (rel.at(ab, a) != l.top() || rel.at(ab, b) != l.top()) {
        fail(4, "meet of #" + std::to_string(a) + " and #" + std::to_string(b));
      }
    }
  }

  if (top_index < 0) {
    fail(5, "pointwise join of all members " + render(all) + " is not in the family");
  } else {
    for (int a = 0; a < m; ++a) {
      if (rel.at(a, top_index) != l.top()) {
        fail(5, "R(#" + std::to_string(a) + ", top) = " + l.label(rel.at(a, top_index)));
      }
    }
  }

  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      for (int c = 0; c < m; ++c) {
        const int lhs = l.meet(rel.at(a, b), rel.at(a, c));
        const int rhs = rel.at(a, meet_of[static_cast<size_t>(b)][static_cast<size_t>(c)]);
        if (lhs != rhs) {
          fail(6, "R(#" + std::to_string(a) + ", #" + std::to_string(b) + ") /\\ R(#" + std::to_string(a) +
                      ", #" + std::to_string(c) + ") = " + l.label(lhs) + " but R(#" + std::to_string(a) +
                      ", meet) = " + l.label(rhs));
          if (!options.collect_all) goto axiom6_done;
        }
      }
    }
  }
axiom6_done:

  for (size_t s = 0; s < masks.size(); ++s) {
    const std::uint64_t mask = masks[s];
    const FuzzySet& join_s = unions[s];
    for (int a = 0; a < m; ++a) {
      if (mask & (1ull << a)) {
        const int v = relation_value(family[static_cast<size_t>(a)], join_s, rel.arrow);
        if (v != l.top()) {
          fail(7, render_subset(family, mask) + ", a = #" + std::to_string(a) + ", R(a, \\/S) = " + l.label(v));
        }
      }
    }
    for (int b = 0; b < m; ++b) {
      int inf = l.top();
      for (int a = 0; a < m; ++a) {
        if (mask & (1ull << a)) inf = l.meet(inf, rel.at(a, b));
      }
      const int rhs = relation_value(join_s, family[static_cast<size_t>(b)], rel.arrow);
      if (inf != rhs) {
        fail(8, render_subset(family, mask) + ", b = #" + std::to_string(b) + ": inf = " + l.label(inf) +
                    ", R(\\/S, b) = " + l.label(rhs));
      }
    }
    for (int a = 0; a < m; ++a) {
      const FuzzySet lhs = intersect(family[static_cast<size_t>(a)], join_s);
      FuzzySet rhs = empty;
      for (int b = 0; b < m; ++b) {
        if (mask & (1ull << b)) rhs = unite(rhs, intersect(family[static_cast<size_t>(a)], family[static_cast<size_t>(b)]));
      }
      const int v = relation_value(lhs, rhs, rel.arrow);
      if (v != l.top()) {
        fail(9, render_subset(family, mask) + ", a = #" + std::to_string(a) + ": R = " + l.label(v));
      }
    }
  }

  bool all_hold = true;
  for (const auto& ax : report.axioms) all_hold = all_hold && ax.holds;
  if (all_hold) {
    report.verdict = Verdict::LocalicFrame;
  } else if (report.preorder_axioms_hold()) {
    report.verdict = Verdict::LocalicPreorderedSet;
  } else {
    report.verdict = Verdict::Neither;
  }
  return report;
}

bool is_graded_frame(const FuzzyRelation& relation, const AxiomOptions& options) {
  if (!relation.lattice().is_chain()) {
    raise(Errc::NotAChain, "graded frames take values in a totally ordered lattice");
  }
  return check_localic_axioms(relation, options).verdict == Verdict::LocalicFrame;
}

}  // namespace latcut
