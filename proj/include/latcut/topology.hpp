#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "latcut/fuzzy_set.hpp"

namespace latcut {

/// Fuzzy topological space: a carrier fuzzy set and its open fuzzy subsets.
struct LTopSpace {
  FuzzySet carrier;
  std::vector<FuzzySet> opens;
};

struct TopologyOptions {
  int subset_bound = 6;
  int sample_count = 512;
  std::uint64_t seed = 0;
};

struct TopologyViolation {
  int condition = 0;  // 1: empty/carrier membership, 2: pairwise meet, 3: unions
  std::string detail;
};

struct TopologyCheck {
  bool holds = true;
  std::optional<TopologyViolation> witness;
};

/// Verifies that opens contain the empty set and the carrier, stay below
/// the carrier pointwise, and are closed under pairwise intersection and
/// (bounded or sampled) unions of subfamilies.
TopologyCheck check_topology(const LTopSpace& space, const TopologyOptions& options = {});

/// Subspace on the fuzzy alpha-cut of the carrier: opens are the cuts'
/// intersections with the original opens, deduplicated. The input space
/// must verify and its value lattice must be a frame (InvalidSpace
/// otherwise); the result is re-verified before being returned.
LTopSpace subspace_via_cut(const LTopSpace& space, int alpha, const TopologyOptions& options = {});

}  // namespace latcut
