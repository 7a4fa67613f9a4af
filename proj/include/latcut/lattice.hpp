#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "latcut/errors.hpp"

namespace latcut {

/// Implication used on lattice elements.
enum class ArrowKind { GodelLike, Residuated };

/// Outcome of a universally quantified law; `witness` holds the element ids
/// of the first violation (empty iff the law holds).
struct LawCheck {
  bool holds = true;
  std::vector<int> witness;
};

struct ClassificationReport {
  LawCheck frame;
  LawCheck prelinear;
  LawCheck semilinear;
  bool all_hold() const { return frame.holds && prelinear.holds && semilinear.holds; }
};

/**
 * Finite bounded lattice built from its cover (Hasse) relation.
 *
 * Elements are referred to by dense ids in input order; the full order is
 * the reflexive-transitive closure of the covers, and binary meet/join
 * tables are derived at construction. Construction rejects cyclic cover
 * graphs, posets without a global bottom/top, and posets in which some
 * pair lacks a unique greatest lower or least upper bound.
 *
 * Instances are immutable after construction; every operation is a pure
 * function, so values can be shared freely across threads.
 */
class Lattice {
 public:
  static Lattice from_covers(std::vector<std::string> elements,
                             std::vector<std::pair<std::string, std::string>> covers);

  /// Total order bot = elements[0] < elements[1] < ... < top.
  static Lattice chain(std::vector<std::string> elements);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& elements() const { return labels_; }
  const std::string& label(int e) const { return labels_.at(static_cast<size_t>(e)); }
  bool contains(std::string_view label) const;
  int index_of(std::string_view label) const;  // UnknownElement if absent

  bool leq(int a, int b) const { return leq_[static_cast<size_t>(a) * labels_.size() + static_cast<size_t>(b)] != 0; }
  int meet(int a, int b) const { return meet_[static_cast<size_t>(a) * labels_.size() + static_cast<size_t>(b)]; }
  int join(int a, int b) const { return join_[static_cast<size_t>(a) * labels_.size() + static_cast<size_t>(b)]; }

  /// Fold of binary meet/join; empty set folds to top/bottom respectively.
  int meet_all(const std::vector<int>& s) const;
  int join_all(const std::vector<int>& s) const;

  int bottom() const { return bottom_; }
  int top() const { return top_; }

  /// top if a <= b, b otherwise.
  int godel_arrow(int a, int b) const;

  /// Join of all c with c /\ a <= b. Requires the lattice to be a frame
  /// (otherwise the join need not itself satisfy the bound).
  int residuated_impl(int a, int b) const;

  int implication(ArrowKind kind, int a, int b) const;

  /// Binary distributivity a /\ (b \/ c) = (a /\ b) \/ (a /\ c) over all
  /// triples. In a finite lattice every join is a fold of binary joins, so
  /// this is equivalent to meet distributing over arbitrary joins.
  const LawCheck& frame_check() const { return frame_; }
  bool is_frame() const { return frame_.holds; }

  /// (a -> b) \/ (b -> a) = top over all pairs, Godel-like arrow.
  LawCheck prelinear_check() const;

  /// (a -> b) /\ (a -> c) = a -> (b /\ c) over all triples with a distinct
  /// from b and c. Including a = b would collapse the class to total
  /// orders: for any incomparable pair (v, w) the instance (v, v, w) gives
  /// (v->v) /\ (v->w) = w on the left but v -> (v /\ w) on the right, which
  /// cannot agree unless v and w are comparable.
  LawCheck semilinear_check(ArrowKind kind = ArrowKind::GodelLike) const;

  ClassificationReport classify() const;

  bool is_chain() const;

  /// Derived cover pairs (lower, upper), transitive edges removed,
  /// ordered by (lower id, upper id).
  std::vector<std::pair<int, int>> cover_pairs() const;

  /// Length of the longest chain from bottom to e.
  int height(int e) const { return height_[static_cast<size_t>(e)]; }

  bool structurally_equal(const Lattice& other) const;

 private:
  Lattice() = default;
  void derive_tables();  // from leq_; throws NotALattice / Unbounded

  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::uint8_t> leq_;  // row-major size*size
  std::vector<int> meet_;
  std::vector<int> join_;
  std::vector<int> height_;
  int bottom_ = -1;
  int top_ = -1;
  LawCheck frame_;
};

struct PropertyOptions {
  int subset_bound = 6;    // exhaustive subset quantification up to this many elements
  int sample_count = 512;  // seeded samples beyond the bound
  std::uint64_t seed = 0;
};

struct PropertyResult {
  std::string name;
  bool holds = true;
  std::string witness;
};

struct ArrowPropertiesReport {
  std::vector<PropertyResult> properties;
  bool subsets_exhaustive = true;
  bool all_hold() const;
};

/// Evaluates the standard laws of the Godel-like arrow on every pair,
/// triple and (bounded or sampled) subset of the lattice:
///   1. a -> a = top
///   2. (a -> b) /\ (b -> c) <= a -> c
///   3. a <= b implies (a -> x) >= (b -> x)
///   4. a <= b implies (x -> a) <= (x -> b)
///   5'. prelinear implies semilinear (on this lattice)
///   6. inf{a_i -> b} = sup{a_i} -> b over nonempty subsets
///   7. a <= b iff a -> b = top
///   8. a /\ (a -> b) <= b
ArrowPropertiesReport check_arrow_properties(const Lattice& lattice,
                                             const PropertyOptions& options = {});

/// Deterministic subset masks over m items: every mask when 2^m is within
/// bounds, otherwise `sample_count` seeded draws (always including the
/// empty and full mask).
std::vector<std::uint64_t> subset_masks(int m, int subset_bound, int sample_count,
                                        std::uint64_t seed, bool* exhaustive = nullptr);

}  // namespace latcut
