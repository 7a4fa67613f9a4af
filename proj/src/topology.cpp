#include "latcut/topology.hpp"

#include <algorithm>

namespace latcut {

namespace {

int find_member(const std::vector<FuzzySet>& opens, const FuzzySet& f) {
  for (size_t i = 0; i < opens.size(); ++i) {
    if (opens[i] == f) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace

TopologyCheck check_topology(const LTopSpace& space, const TopologyOptions& options) {
  for (const auto& open : space.opens) {
    if (open.base() != space.carrier.base()) raise(Errc::BaseMismatch, "open set over a different base");
    if (open.lattice_ptr() != space.carrier.lattice_ptr() &&
        !open.lattice().structurally_equal(space.carrier.lattice())) {
      raise(Errc::BaseMismatch, "open set over a different value lattice");
    }
  }

  const FuzzySet empty = empty_like(space.carrier);
  if (find_member(space.opens, empty) < 0) {
    return {false, TopologyViolation{1, "the empty fuzzy set is not open"}};
  }
  if (find_member(space.opens, space.carrier) < 0) {
    return {false, TopologyViolation{1, "the carrier is not open"}};
  }
  for (size_t i = 0; i < space.opens.size(); ++i) {
    if (!subset_of(space.opens[i], space.carrier)) {
      return {false, TopologyViolation{1, "open #" + std::to_string(i) + " is not a subset of the carrier"}};
    }
  }

  for (size_t i = 0; i < space.opens.size(); ++i) {
    for (size_t j = i; j < space.opens.size(); ++j) {
      if (find_member(space.opens, intersect(space.opens[i], space.opens[j])) < 0) {
        return {false, TopologyViolation{2, "opens #" + std::to_string(i) + " and #" + std::to_string(j) +
                                                " meet outside the family"}};
      }
    }
  }

  const int m = static_cast<int>(space.opens.size());
  if (m > 62) raise(Errc::BoundExceeded, "too many opens for subset quantification");
  const auto masks = subset_masks(m, options.subset_bound, options.sample_count, options.seed);
  for (std::uint64_t mask : masks) {
    FuzzySet u = empty;
    for (int i = 0; i < m; ++i) {
      if (mask & (1ull << i)) u = unite(u, space.opens[static_cast<size_t>(i)]);
    }
    if (find_member(space.opens, u) < 0) {
      return {false, TopologyViolation{3, "a union of opens escapes the family"}};
    }
  }

  return {};
}

LTopSpace subspace_via_cut(const LTopSpace& space, int alpha, const TopologyOptions& options) {
  const TopologyCheck check = check_topology(space, options);
  if (!check.holds) {
    raise(Errc::InvalidSpace, "input is not a topological space (condition " +
                                  std::to_string(check.witness->condition) + ": " + check.witness->detail + ")");
  }
  if (!space.carrier.lattice().is_frame()) {
    raise(Errc::InvalidSpace, "subspace construction requires a frame-valued carrier");
  }

  LTopSpace sub{fuzzy_alpha_cut(space.carrier, alpha), {}};
  for (const auto& open : space.opens) {
    FuzzySet restricted = intersect(sub.carrier, open);
    if (find_member(sub.opens, restricted) < 0) sub.opens.push_back(std::move(restricted));
  }

  const TopologyCheck post = check_topology(sub, options);
  if (!post.holds) {
    raise(Errc::InternalInconsistency, "cut subspace failed re-verification (condition " +
                                           std::to_string(post.witness->condition) + ")");
  }
  return sub;
}

}  // namespace latcut
