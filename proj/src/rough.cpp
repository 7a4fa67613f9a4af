#include "latcut/rough.hpp"

#include <algorithm>
#include <numeric>

namespace latcut {

Rational Rational::of(long long num, long long den) {
  if (den == 0) raise(Errc::BadParameters, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational{num, den};
}

Rational Rational::parse(const std::string& text) {
  try {
    if (const auto slash = text.find('/'); slash != std::string::npos) {
      const long long p = std::stoll(text.substr(0, slash));
      const long long q = std::stoll(text.substr(slash + 1));
      return of(p, q);
    }
    if (const auto dot = text.find('.'); dot != std::string::npos) {
      const std::string whole = text.substr(0, dot);
      const std::string frac = text.substr(dot + 1);
      if (frac.empty() || frac.size() > 15 ||
          !std::all_of(frac.begin(), frac.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        raise(Errc::BadParameters, "cannot parse rational '" + text + "'");
      }
      long long den = 1;
      for (size_t i = 0; i < frac.size(); ++i) den *= 10;
      const bool negative = !whole.empty() && whole[0] == '-';
      const long long w = (whole.empty() || whole == "-") ? 0 : std::stoll(whole);
      const long long f = std::stoll(frac);
      const long long num = (w < 0 || negative) ? w * den - f : w * den + f;
      return of(num, den);
    }
    return of(std::stoll(text), 1);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    raise(Errc::BadParameters, "cannot parse rational '" + text + "'");
  }
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

bool operator<(const Rational& a, const Rational& b) {
  return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}

ApproximationSpace ApproximationSpace::create(std::vector<std::string> universe,
                                              std::vector<std::vector<std::string>> partition) {
  ApproximationSpace space;
  space.universe_ = std::move(universe);
  for (size_t i = 0; i < space.universe_.size(); ++i) {
    for (size_t j = i + 1; j < space.universe_.size(); ++j) {
      if (space.universe_[i] == space.universe_[j]) {
        raise(Errc::SchemaError, "duplicate universe point '" + space.universe_[i] + "'");
      }
    }
  }
  space.block_of_.assign(space.universe_.size(), -1);
  for (const auto& block_labels : partition) {
    if (block_labels.empty()) raise(Errc::SchemaError, "partition has an empty block");
    std::vector<int> block;
    for (const auto& label : block_labels) {
      const int p = space.point_index(label);
      if (space.block_of_[static_cast<size_t>(p)] >= 0) {
        raise(Errc::SchemaError, "point '" + label + "' appears in two blocks");
      }
      space.block_of_[static_cast<size_t>(p)] = static_cast<int>(space.blocks_.size());
      block.push_back(p);
    }
    space.blocks_.push_back(std::move(block));
  }
  for (size_t p = 0; p < space.universe_.size(); ++p) {
    if (space.block_of_[p] < 0) {
      raise(Errc::SchemaError, "point '" + space.universe_[p] + "' is not covered by the partition");
    }
  }
  return space;
}

int ApproximationSpace::point_index(std::string_view label) const {
  for (size_t i = 0; i < universe_.size(); ++i) {
    if (universe_[i] == label) return static_cast<int>(i);
  }
  raise(Errc::UnknownPoint, "no universe point named '" + std::string(label) + "'");
}

CrispSet ApproximationSpace::subset(const std::vector<std::string>& members) const {
  CrispSet out{universe_, std::vector<bool>(universe_.size(), false)};
  for (const auto& label : members) out.members[static_cast<size_t>(point_index(label))] = true;
  return out;
}

namespace {

void require_over_universe(const ApproximationSpace& space, const CrispSet& target) {
  if (target.base != space.universe()) {
    raise(Errc::UnknownPoint, "target is not a subset of the universe");
  }
}

}  // namespace

RoughMembership rough_membership(const ApproximationSpace& space, const CrispSet& target) {
  require_over_universe(space, target);
  RoughMembership out{target, std::vector<Rational>(static_cast<size_t>(space.size()))};
  for (int b = 0; b < space.block_count(); ++b) {
    const auto& block = space.block(b);
    long long inside = 0;
    for (int p : block) inside += target.contains(p) ? 1 : 0;
    const Rational mu = Rational::of(inside, static_cast<long long>(block.size()));
    for (int p : block) out.values[static_cast<size_t>(p)] = mu;
  }
  return out;
}

std::pair<CrispSet, CrispSet> pawlak_approx(const ApproximationSpace& space, const CrispSet& target) {
  require_over_universe(space, target);
  CrispSet lower{space.universe(), std::vector<bool>(static_cast<size_t>(space.size()), false)};
  CrispSet upper = lower;
  for (int b = 0; b < space.block_count(); ++b) {
    const auto& block = space.block(b);
    bool inside = true, meets = false;
    for (int p : block) {
      if (target.contains(p)) {
        meets = true;
      } else {
        inside = false;
      }
    }
    for (int p : block) {
      if (inside) lower.members[static_cast<size_t>(p)] = true;
      if (meets) upper.members[static_cast<size_t>(p)] = true;
    }
  }
  return {lower, upper};
}

std::pair<CrispSet, CrispSet> prob_approx(const ApproximationSpace& space, const CrispSet& target,
                                          const Rational& alpha, const Rational& beta) {
  const Rational zero{0, 1}, one{1, 1};
  if (beta < zero || alpha > one || !(beta < alpha)) {
    raise(Errc::BadParameters, "thresholds must satisfy 0 <= beta < alpha <= 1");
  }
  const RoughMembership mu = rough_membership(space, target);
  CrispSet lower{space.universe(), std::vector<bool>(static_cast<size_t>(space.size()), false)};
  CrispSet upper = lower;
  for (int p = 0; p < space.size(); ++p) {
    lower.members[static_cast<size_t>(p)] = mu.values[static_cast<size_t>(p)] >= alpha;
    upper.members[static_cast<size_t>(p)] = mu.values[static_cast<size_t>(p)] > beta;
  }
  return {lower, upper};
}

FuzzyApprox fuzzy_approx(const ApproximationSpace& space, const CrispSet& target,
                         const Rational& alpha, const Rational& beta) {
  const Rational zero{0, 1}, one{1, 1};
  if (beta < zero || alpha > one || beta > alpha) {
    raise(Errc::BadParameters, "thresholds must satisfy 0 <= beta <= alpha <= 1");
  }
  const RoughMembership mu = rough_membership(space, target);
  FuzzyApprox out{std::vector<Rational>(static_cast<size_t>(space.size())),
                  std::vector<Rational>(static_cast<size_t>(space.size()))};
  for (int p = 0; p < space.size(); ++p) {
    const Rational& v = mu.values[static_cast<size_t>(p)];
    out.lower[static_cast<size_t>(p)] = v >= alpha ? v : zero;
    out.upper[static_cast<size_t>(p)] = v >= beta ? v : zero;
  }
  return out;
}

}  // namespace latcut
