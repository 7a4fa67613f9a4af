#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "latcut/lattice.hpp"

namespace latcut {

/// Yields every bounded lattice on exactly n elements, one representative
/// per isomorphism class, in a deterministic order. n is capped at 8.
class LatticeStream {
 public:
  explicit LatticeStream(int n, bool distributive_only = false);
  std::optional<Lattice> next();
  int total() const { return static_cast<int>(items_.size()); }

 private:
  std::vector<Lattice> items_;
  size_t pos_ = 0;
};

std::vector<Lattice> enumerate_lattices(int n, bool distributive_only = false);

/// Canonical encoding of the order matrix, identical for isomorphic
/// lattices and distinct otherwise.
std::string canonical_key(const Lattice& lattice);

enum class LatticePredicate {
  NotPrelinear,
  NotSemilinear,
  PrelinearAndNotSemilinear,
  SemilinearAndNotPrelinear,
};

const char* predicate_name(LatticePredicate p);
std::optional<LatticePredicate> parse_predicate(const std::string& name);

struct SearchHit {
  Lattice lattice;
  ClassificationReport report;
};

/// All isomorphism classes of size n matching the predicate, with the
/// classifier witnesses attached.
std::vector<SearchHit> search_lattices(int n, LatticePredicate predicate,
                                       bool distributive_only = false);

}  // namespace latcut
