#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "latcut/lattice.hpp"

namespace latcut {

/// Finite crisp subset of a base set.
struct CrispSet {
  std::vector<std::string> base;
  std::vector<bool> members;  // aligned with base

  bool contains(int point) const { return members.at(static_cast<size_t>(point)); }
  std::vector<std::string> member_labels() const;
  int member_count() const;
  bool operator==(const CrispSet& other) const { return base == other.base && members == other.members; }
};

/**
 * L-fuzzy set: a finite base set with a total membership map into a finite
 * lattice. Equality is extensional (same base, structurally equal lattice,
 * pointwise equal values).
 */
class FuzzySet {
 public:
  FuzzySet(std::shared_ptr<const Lattice> lattice, std::vector<std::string> base,
           std::vector<int> membership);

  static FuzzySet from_labels(std::shared_ptr<const Lattice> lattice,
                              std::vector<std::string> base,
                              const std::map<std::string, std::string>& membership);
  static FuzzySet constant(std::shared_ptr<const Lattice> lattice,
                           std::vector<std::string> base, int value);

  const Lattice& lattice() const { return *lattice_; }
  const std::shared_ptr<const Lattice>& lattice_ptr() const { return lattice_; }
  const std::vector<std::string>& base() const { return base_; }
  int size() const { return static_cast<int>(base_.size()); }
  int point_index(std::string_view label) const;  // UnknownPoint if absent

  int value(int point) const { return membership_.at(static_cast<size_t>(point)); }
  const std::vector<int>& values() const { return membership_; }

  std::vector<int> support() const;  // points with non-bottom membership
  bool is_empty() const;             // identically bottom

  bool operator==(const FuzzySet& other) const;
  bool operator!=(const FuzzySet& other) const { return !(*this == other); }

 private:
  std::shared_ptr<const Lattice> lattice_;
  std::vector<std::string> base_;
  std::vector<int> membership_;
};

/// Total map between finite base sets.
class PointMap {
 public:
  PointMap(std::vector<std::string> source, std::vector<std::string> target,
           std::vector<int> mapping);
  static PointMap from_labels(std::vector<std::string> source, std::vector<std::string> target,
                              const std::map<std::string, std::string>& mapping);
  static PointMap identity(std::vector<std::string> base);

  const std::vector<std::string>& source() const { return source_; }
  const std::vector<std::string>& target() const { return target_; }
  int apply(int point) const { return mapping_.at(static_cast<size_t>(point)); }

 private:
  std::vector<std::string> source_;
  std::vector<std::string> target_;
  std::vector<int> mapping_;
};

/// g after f; requires f.target == g.source.
PointMap compose(const PointMap& g, const PointMap& f);

/// Crisp set of points whose membership dominates alpha.
CrispSet alpha_cut(const FuzzySet& a, int alpha);

/// Keeps the membership where it dominates alpha, bottom elsewhere.
FuzzySet fuzzy_alpha_cut(const FuzzySet& a, int alpha);

FuzzySet intersect(const FuzzySet& a, const FuzzySet& b);  // pointwise meet
FuzzySet unite(const FuzzySet& a, const FuzzySet& b);      // pointwise join

/// Pointwise order test a(x) <= b(x).
bool subset_of(const FuzzySet& a, const FuzzySet& b);

/// Image under f: membership at y is the join of a over the fiber of y.
FuzzySet image(const PointMap& f, const FuzzySet& a);

/// Fuzzy set taking top on members and bottom elsewhere.
FuzzySet characteristic(const CrispSet& s, std::shared_ptr<const Lattice> lattice);

FuzzySet empty_like(const FuzzySet& a);

/// All fuzzy alpha-cuts of a, one per lattice element, with extensional
/// duplicates removed (first occurrence in lattice element order kept).
/// The bottom cut, i.e. a itself, is always a member.
std::vector<FuzzySet> cut_family(const FuzzySet& a);

/**
 * Totally ordered value set of binary64 samples in [0, 1]. 0 and 1 are
 * always adjoined; labels are shortest round-trip decimal strings. A chain
 * is trivially a frame, so this reproduces unit-interval membership
 * functions on finitely many sample points without leaving exact land.
 */
struct UnitChain {
  std::shared_ptr<const Lattice> lattice;
  std::vector<double> levels;  // ascending, aligned with lattice elements

  int id_of(double level) const;  // UnknownElement if not a sampled level
  double level_of(int id) const { return levels.at(static_cast<size_t>(id)); }
};

UnitChain unit_chain(std::vector<double> levels);
std::string unit_label(double level);

/// Fuzzy set over chain.lattice with the given per-point values.
FuzzySet sampled_fuzzy_set(const UnitChain& chain, std::vector<std::string> base,
                           const std::vector<double>& values);

}  // namespace latcut
