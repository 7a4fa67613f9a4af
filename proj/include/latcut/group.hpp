#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "latcut/fuzzy_set.hpp"

namespace latcut {

/// Graded equality table for a fuzzy binary operation: grade(a, b, c) is
/// the degree to which a (+) b equals c. Stored densely over base^3.
class GradedOpTable {
 public:
  GradedOpTable(std::shared_ptr<const Lattice> lattice, std::vector<std::string> base,
                std::vector<int> grades);
  static GradedOpTable all_bottom(std::shared_ptr<const Lattice> lattice,
                                  std::vector<std::string> base);

  const Lattice& lattice() const { return *lattice_; }
  const std::shared_ptr<const Lattice>& lattice_ptr() const { return lattice_; }
  const std::vector<std::string>& base() const { return base_; }
  int size() const { return static_cast<int>(base_.size()); }
  int point_index(std::string_view label) const;

  int grade(int a, int b, int c) const { return grades_[offset(a, b, c)]; }
  void set_grade(int a, int b, int c, int value) { grades_[offset(a, b, c)] = value; }

 private:
  size_t offset(int a, int b, int c) const {
    const size_t n = base_.size();
    return (static_cast<size_t>(a) * n + static_cast<size_t>(b)) * n + static_cast<size_t>(c);
  }
  std::shared_ptr<const Lattice> lattice_;
  std::vector<std::string> base_;
  std::vector<int> grades_;
};

struct BinaryOpViolation {
  enum class Kind {
    GradeBound,       // grade exceeds the membership bound (condition 1)
    BottomFullGrade,  // support pair whose full grade is bottom: no unique target possible
    NoTarget,         // support pair with no full-grade result
    MultipleTargets,  // support pair with more than one nonzero result
    PartialGrade,     // single nonzero result below the full grade
  } kind;
  std::array<int, 3> where{-1, -1, -1};  // (a, b, c); c = -1 when not applicable
  std::string detail;
};

struct BinaryOpCheck {
  bool holds = true;
  std::optional<BinaryOpViolation> witness;
};

/// Conditions of a fuzzy binary operation: every grade is bounded by the
/// meet of the memberships involved, and every pair of support elements
/// has exactly one support result carrying the full grade (the meet of the
/// pair's memberships), all other support results graded bottom.
BinaryOpCheck check_fuzzy_binary_op(const FuzzySet& carrier, const GradedOpTable& op);

struct FuzzyGroup {
  FuzzySet carrier;
  GradedOpTable op;
  int identity = -1;
  std::vector<int> inverse;  // per base point, -1 outside the support
};

struct GroupViolation {
  enum class Kind { BinaryOp, NoIdentity, NoInverse, Associativity } kind;
  std::vector<int> where;
  std::string detail;
};

/// Verifies the fuzzy group laws (graded associativity, identity,
/// inverses) on top of check_fuzzy_binary_op and resolves the identity and
/// inverse map.
std::variant<FuzzyGroup, GroupViolation> check_fuzzy_group(const FuzzySet& carrier,
                                                           const GradedOpTable& op);

/// Fuzzy subgroup on the alpha-cut of the carrier: grades are met with the
/// cut memberships of all three arguments, then the group laws are
/// re-verified. EmptyCutSupport when the cut has no support;
/// InternalInconsistency if re-verification fails.
FuzzyGroup restrict_to_cut(const FuzzyGroup& group, int alpha);

}  // namespace latcut
