#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "latcut/fuzzy_set.hpp"

namespace latcut {

/// Lattice-valued binary relation over a family of fuzzy sets;
/// values[i * family.size() + j] relates family[i] to family[j].
struct FuzzyRelation {
  std::vector<FuzzySet> family;
  ArrowKind arrow = ArrowKind::GodelLike;
  std::vector<int> values;

  int at(int i, int j) const {
    return values.at(static_cast<size_t>(i) * family.size() + static_cast<size_t>(j));
  }
  const Lattice& lattice() const { return family.front().lattice(); }
};

/// Pointwise arrow folded by meet over the base; top on an empty base.
int relation_value(const FuzzySet& a, const FuzzySet& b, ArrowKind arrow);

/// Builds the relation matrix over a nonempty family sharing base and lattice.
FuzzyRelation relation_over(std::vector<FuzzySet> family, ArrowKind arrow);

enum class Verdict { LocalicFrame, LocalicPreorderedSet, Neither };
const char* verdict_name(Verdict v);

struct AxiomOptions {
  int subset_bound = 6;
  int sample_count = 512;
  std::uint64_t seed = 0;
  /// When set, a family that is not closed under pointwise union of the
  /// quantified subfamilies is rejected with FamilyNotClosed instead of
  /// being evaluated pointwise.
  bool strict_union_closure = false;
  bool collect_all = false;  // gather every failure, not just the first
};

struct AxiomResult {
  bool holds = true;
  std::string witness;
};

struct AxiomReport {
  std::array<AxiomResult, 9> axioms;
  Verdict verdict = Verdict::Neither;
  bool union_closed = true;
  std::string closure_witness;
  bool subsets_exhaustive = true;
  int family_size = 0;
  std::vector<std::string> failures;  // populated when collect_all is set

  const AxiomResult& axiom(int number) const { return axioms.at(static_cast<size_t>(number - 1)); }
  bool preorder_axioms_hold() const;  // all axioms except 6
};

/**
 * Checks the nine axioms of a localic frame over the relation's family:
 *
 *   1. R(a, a) = top
 *   2. R(a, b) = top = R(b, a) implies a = b
 *   3. R(a, b) /\ R(b, c) <= R(a, c)
 *   4. R(a /\ b, a) = top = R(a /\ b, b)
 *   5. R(a, T) = top, with T the pointwise-largest member
 *   6. R(a, b) /\ R(a, c) = R(a, b /\ c)
 *   7. R(a, \/S) = top whenever a is in S
 *   8. inf{R(a, b) : a in S} = R(\/S, b)
 *   9. R(a /\ \/S, \/{a /\ b : b in S}) = top
 *
 * Quantifiers range over family members and subsets S of the family
 * (exhaustively up to `subset_bound`, seeded samples beyond). Meets and
 * joins of members are pointwise; the empty fuzzy set is adjoined so that
 * \/{} is available. Pairwise meets must stay inside the family
 * (FamilyNotClosed otherwise); pointwise unions may leave it, in which
 * case R is evaluated by the defining formula and the escape is recorded
 * in `union_closed` / `closure_witness`.
 *
 * Verdict: "localic frame" when all nine hold, "localic preordered set"
 * when all but axiom 6 hold, "neither" otherwise.
 */
AxiomReport check_localic_axioms(const FuzzyRelation& relation, const AxiomOptions& options = {});

/// Chain-valued special case; requires the value lattice to be totally
/// ordered (NotAChain otherwise) and reports whether the family is a
/// localic frame over it.
bool is_graded_frame(const FuzzyRelation& relation, const AxiomOptions& options = {});

}  // namespace latcut
