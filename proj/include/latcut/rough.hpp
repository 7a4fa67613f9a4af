#pragma once

#include <string>
#include <utility>
#include <vector>

#include "latcut/fuzzy_set.hpp"

namespace latcut {

/// Exact rational in lowest terms with positive denominator.
struct Rational {
  long long num = 0;
  long long den = 1;

  static Rational of(long long num, long long den);
  /// Accepts "p/q", integers, and finite decimals ("0.4" becomes 2/5).
  static Rational parse(const std::string& text);

  std::string str() const;
  friend bool operator==(const Rational& a, const Rational& b) { return a.num == b.num && a.den == b.den; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator<=(const Rational& a, const Rational& b) { return a < b || a == b; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }
};

/// Finite universe partitioned into equivalence classes.
class ApproximationSpace {
 public:
  static ApproximationSpace create(std::vector<std::string> universe,
                                   std::vector<std::vector<std::string>> partition);

  const std::vector<std::string>& universe() const { return universe_; }
  int size() const { return static_cast<int>(universe_.size()); }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  int block_of(int point) const { return block_of_.at(static_cast<size_t>(point)); }
  const std::vector<int>& block(int b) const { return blocks_.at(static_cast<size_t>(b)); }

  int point_index(std::string_view label) const;  // UnknownPoint
  CrispSet subset(const std::vector<std::string>& members) const;

 private:
  std::vector<std::string> universe_;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> block_of_;
};

struct RoughMembership {
  CrispSet target;
  std::vector<Rational> values;  // |[x] /\ A| / |[x]| per point
};

RoughMembership rough_membership(const ApproximationSpace& space, const CrispSet& target);

/// Classical approximations: union of blocks inside the target, and union
/// of blocks meeting it.
std::pair<CrispSet, CrispSet> pawlak_approx(const ApproximationSpace& space, const CrispSet& target);

/// Parameterised crisp approximations: lower keeps points with rough
/// membership >= alpha, upper keeps points with membership strictly above
/// beta. Requires 0 <= beta < alpha <= 1.
std::pair<CrispSet, CrispSet> prob_approx(const ApproximationSpace& space, const CrispSet& target,
                                          const Rational& alpha, const Rational& beta);

struct FuzzyApprox {
  std::vector<Rational> lower;
  std::vector<Rational> upper;
};

/// Grade-keeping approximations: both sides keep the rough membership
/// where it reaches the threshold (>= alpha, >= beta) and drop to zero
/// below it. Requires 0 <= beta <= alpha <= 1.
FuzzyApprox fuzzy_approx(const ApproximationSpace& space, const CrispSet& target,
                         const Rational& alpha, const Rational& beta);

}  // namespace latcut
