#include "latcut/group.hpp"

#include <algorithm>

namespace latcut {

namespace {

void require_same_shape(const FuzzySet& carrier, const GradedOpTable& op) {
  if (carrier.base() != op.base()) raise(Errc::BaseMismatch, "operation table over a different base");
  if (carrier.lattice_ptr() != op.lattice_ptr() &&
      !carrier.lattice().structurally_equal(op.lattice())) {
    raise(Errc::LatticeMismatch, "operation table over a different value lattice");
  }
}

std::string point_triple(const GradedOpTable& op, int a, int b, int c) {
  std::string out = "(" + op.base()[static_cast<size_t>(a)] + ", " + op.base()[static_cast<size_t>(b)];
  if (c >= 0) out += ", " + op.base()[static_cast<size_t>(c)];
  return out + ")";
}

/// Resolved composition on the support: target[a][b] is the unique support
/// element carrying the full grade. Valid only after check_fuzzy_binary_op.
struct ResolvedOp {
  std::vector<int> support;
  std::vector<int> target;  // support-index matrix
  int at(int i, int j) const { return target[static_cast<size_t>(i) * support.size() + static_cast<size_t>(j)]; }
};

}  // namespace

GradedOpTable::GradedOpTable(std::shared_ptr<const Lattice> lattice, std::vector<std::string> base,
                             std::vector<int> grades)
    : lattice_(std::move(lattice)), base_(std::move(base)), grades_(std::move(grades)) {
  const size_t n = base_.size();
  if (grades_.size() != n * n * n) raise(Errc::SchemaError, "grade table must be total over base^3");
  for (int g : grades_) {
    if (g < 0 || g >= lattice_->size()) raise(Errc::UnknownElement, "grade out of range");
  }
}

GradedOpTable GradedOpTable::all_bottom(std::shared_ptr<const Lattice> lattice,
                                        std::vector<std::string> base) {
  const size_t n = base.size();
  std::vector<int> grades(n * n * n, lattice->bottom());
  return GradedOpTable(std::move(lattice), std::move(base), std::move(grades));
}

int GradedOpTable::point_index(std::string_view label) const {
  for (size_t i = 0; i < base_.size(); ++i) {
    if (base_[i] == label) return static_cast<int>(i);
  }
  raise(Errc::UnknownPoint, "no base point named '" + std::string(label) + "'");
}

BinaryOpCheck check_fuzzy_binary_op(const FuzzySet& carrier, const GradedOpTable& op) {
  require_same_shape(carrier, op);
  const Lattice& l = carrier.lattice();
  const int n = carrier.size();

  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int bound_ab = l.meet(carrier.value(a), carrier.value(b));
      for (int c = 0; c < n; ++c) {
        if (!l.leq(op.grade(a, b, c), l.meet(bound_ab, carrier.value(c)))) {
          return {false, BinaryOpViolation{BinaryOpViolation::Kind::GradeBound,
                                           {a, b, c},
                                           "grade " + l.label(op.grade(a, b, c)) + " at " +
                                               point_triple(op, a, b, c) + " exceeds the membership bound"}};
        }
      }
    }
  }

  const std::vector<int> support = carrier.support();
  for (int a : support) {
    for (int b : support) {
      const int full = l.meet(carrier.value(a), carrier.value(b));
      if (full == l.bottom()) {
        return {false, BinaryOpViolation{BinaryOpViolation::Kind::BottomFullGrade,
                                         {a, b, -1},
                                         "support pair " + point_triple(op, a, b, -1) +
                                             " has bottom full grade, so no unique result exists"}};
      }
      std::vector<int> nonzero;
      for (int c : support) {
        if (op.grade(a, b, c) != l.bottom()) nonzero.push_back(c);
      }
      if (nonzero.empty()) {
        return {false, BinaryOpViolation{BinaryOpViolation::Kind::NoTarget,
                                         {a, b, -1},
                                         "support pair " + point_triple(op, a, b, -1) + " has no result"}};
      }
      if (nonzero.size() > 1) {
        return {false, BinaryOpViolation{BinaryOpViolation::Kind::MultipleTargets,
                                         {a, b, nonzero[1]},
                                         "support pair " + point_triple(op, a, b, -1) + " has results " +
                                             op.base()[static_cast<size_t>(nonzero[0])] + " and " +
                                             op.base()[static_cast<size_t>(nonzero[1])]}};
      }
      if (op.grade(a, b, nonzero[0]) != full) {
        return {false, BinaryOpViolation{BinaryOpViolation::Kind::PartialGrade,
                                         {a, b, nonzero[0]},
                                         "grade at " + point_triple(op, a, b, nonzero[0]) + " is " +
                                             l.label(op.grade(a, b, nonzero[0])) + ", expected " + l.label(full)}};
      }
    }
  }

  return {};
}

std::variant<FuzzyGroup, GroupViolation> check_fuzzy_group(const FuzzySet& carrier,
                                                           const GradedOpTable& op) {
  const BinaryOpCheck base_check = check_fuzzy_binary_op(carrier, op);
  if (!base_check.holds) {
    const auto& w = *base_check.witness;
    return GroupViolation{GroupViolation::Kind::BinaryOp,
                          {w.where[0], w.where[1], w.where[2]},
                          w.detail};
  }

  const Lattice& l = carrier.lattice();
  const std::vector<int> support = carrier.support();
  const int s = static_cast<int>(support.size());
  if (s == 0) {
    return GroupViolation{GroupViolation::Kind::NoIdentity, {}, "the support is empty"};
  }

  ResolvedOp resolved{support, std::vector<int>(static_cast<size_t>(s) * static_cast<size_t>(s), -1)};
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < s; ++j) {
      for (int k = 0; k < s; ++k) {
        if (op.grade(support[static_cast<size_t>(i)], support[static_cast<size_t>(j)],
                     support[static_cast<size_t>(k)]) != l.bottom()) {
          resolved.target[static_cast<size_t>(i) * static_cast<size_t>(s) + static_cast<size_t>(j)] = k;
          break;
        }
      }
    }
  }

  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < s; ++j) {
      for (int k = 0; k < s; ++k) {
        const int left = resolved.at(resolved.at(i, j), k);
        const int right = resolved.at(i, resolved.at(j, k));
        if (left != right) {
          return GroupViolation{
              GroupViolation::Kind::Associativity,
              {support[static_cast<size_t>(i)], support[static_cast<size_t>(j)], support[static_cast<size_t>(k)]},
              "composing " + point_triple(op, support[static_cast<size_t>(i)], support[static_cast<size_t>(j)],
                                          support[static_cast<size_t>(k)]) +
                  " depends on the bracketing"};
        }
      }
    }
  }

  int identity = -1;
  for (int e = 0; e < s; ++e) {
    bool ok = true;
    for (int a = 0; a < s && ok; ++a) {
      ok = resolved.at(a, e) == a && resolved.at(e, a) == a;
    }
    if (ok) {
      if (identity >= 0) {
        raise(Errc::InternalInconsistency, "two distinct identities resolved");
      }
      identity = e;
    }
  }
  if (identity < 0) {
    return GroupViolation{GroupViolation::Kind::NoIdentity, {}, "no support element acts as identity"};
  }

  std::vector<int> inverse(carrier.base().size(), -1);
  for (int a = 0; a < s; ++a) {
    int found = -1;
    for (int b = 0; b < s; ++b) {
      if (resolved.at(a, b) == identity && resolved.at(b, a) == identity &&
          carrier.value(support[static_cast<size_t>(a)]) == carrier.value(support[static_cast<size_t>(b)])) {
        if (found >= 0) raise(Errc::InternalInconsistency, "two distinct inverses resolved");
        found = b;
      }
    }
    if (found < 0) {
      return GroupViolation{GroupViolation::Kind::NoInverse,
                            {support[static_cast<size_t>(a)]},
                            "no inverse for '" + op.base()[static_cast<size_t>(support[static_cast<size_t>(a)])] + "'"};
    }
    inverse[static_cast<size_t>(support[static_cast<size_t>(a)])] = support[static_cast<size_t>(found)];
  }

  // Membership of the identity dominates the support: gr(a, a^-1, e) is the
  // full grade A(a) and is bounded by A(e). A violation here means the
  // checks above let something inconsistent through.
  const int e_point = support[static_cast<size_t>(identity)];
  for (int a : support) {
    if (!l.leq(carrier.value(a), carrier.value(e_point))) {
      raise(Errc::InternalInconsistency, "identity membership does not dominate the support");
    }
  }

  return FuzzyGroup{carrier, op, e_point, std::move(inverse)};
}

FuzzyGroup restrict_to_cut(const FuzzyGroup& group, int alpha) {
  const FuzzySet cut = fuzzy_alpha_cut(group.carrier, alpha);
  if (cut.support().empty()) {
    raise(Errc::EmptyCutSupport, "the " + group.carrier.lattice().label(alpha) +
                                     "-cut of the carrier has empty support");
  }

  const Lattice& l = group.carrier.lattice();
  const int n = group.carrier.size();
  GradedOpTable restricted = group.op;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        const int g = l.meet(l.meet(group.op.grade(a, b, c), cut.value(a)),
                             l.meet(cut.value(b), cut.value(c)));
        restricted.set_grade(a, b, c, g);
      }
    }
  }

  auto result = check_fuzzy_group(cut, restricted);
  if (std::holds_alternative<GroupViolation>(result)) {
    raise(Errc::InternalInconsistency,
          "cut restriction failed re-verification: " + std::get<GroupViolation>(result).detail);
  }
  return std::get<FuzzyGroup>(std::move(result));
}

}  // namespace latcut
