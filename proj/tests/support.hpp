#pragma once

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "latcut/enumerate.hpp"
#include "latcut/fuzzy_set.hpp"
#include "latcut/group.hpp"

namespace latcut::testing {

using LatticePtr = std::shared_ptr<const Lattice>;

inline LatticePtr make(Lattice l) { return std::make_shared<Lattice>(std::move(l)); }

/// bot < {b, c} < a < top; the smallest non-prelinear lattice.
inline LatticePtr m5() {
  return make(Lattice::from_covers({"bot", "b", "c", "a", "top"},
                                   {{"bot", "b"}, {"bot", "c"}, {"b", "a"}, {"c", "a"}, {"a", "top"}}));
}

/// Atoms b, c; a covers b, d covers b and c; distributive, not semilinear.
inline LatticePtr n6() {
  return make(Lattice::from_covers({"bot", "b", "c", "a", "d", "top"},
                                   {{"bot", "b"},
                                    {"bot", "c"},
                                    {"b", "a"},
                                    {"b", "d"},
                                    {"c", "d"},
                                    {"a", "top"},
                                    {"d", "top"}}));
}

/// Boolean algebra on three atoms a, b, c with d = a|b, e = a|c, f = b|c.
inline LatticePtr b3() {
  return make(Lattice::from_covers({"bot", "a", "b", "c", "d", "e", "f", "top"},
                                   {{"bot", "a"},
                                    {"bot", "b"},
                                    {"bot", "c"},
                                    {"a", "d"},
                                    {"b", "d"},
                                    {"a", "e"},
                                    {"c", "e"},
                                    {"b", "f"},
                                    {"c", "f"},
                                    {"d", "top"},
                                    {"e", "top"},
                                    {"f", "top"}}));
}

/// Three incomparable atoms; modular, not distributive.
inline LatticePtr m3() {
  return make(Lattice::from_covers({"bot", "u", "v", "w", "top"},
                                   {{"bot", "u"}, {"bot", "v"}, {"bot", "w"}, {"u", "top"}, {"v", "top"}, {"w", "top"}}));
}

/// Pentagon: bot < x < y < top with z incomparable to both.
inline LatticePtr n5() {
  return make(Lattice::from_covers({"bot", "x", "y", "z", "top"},
                                   {{"bot", "x"}, {"x", "y"}, {"y", "top"}, {"bot", "z"}, {"z", "top"}}));
}

inline LatticePtr chain_n(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("c" + std::to_string(i));
  return make(Lattice::chain(std::move(labels)));
}

/// 0 < l3 < {l1, l2} < l4 < 1; the value lattice of the worked fuzzy group.
inline LatticePtr group_lattice() {
  return make(Lattice::from_covers({"0", "l3", "l1", "l2", "l4", "1"},
                                   {{"0", "l3"}, {"l3", "l1"}, {"l3", "l2"}, {"l1", "l4"}, {"l2", "l4"}, {"l4", "1"}}));
}

inline int id(const Lattice& l, const std::string& label) { return l.index_of(label); }
inline int id(const LatticePtr& l, const std::string& label) { return l->index_of(label); }

/// Greatest common lower bound found from the order matrix alone; the
/// independent route against the derived meet tables.
inline int oracle_meet(const Lattice& l, int a, int b) {
  int best = -1;
  for (int c = 0; c < l.size(); ++c) {
    if (!(l.leq(c, a) && l.leq(c, b))) continue;
    bool dominates = true;
    for (int d = 0; d < l.size(); ++d) {
      if (l.leq(d, a) && l.leq(d, b) && !l.leq(d, c)) {
        dominates = false;
        break;
      }
    }
    if (dominates) best = c;
  }
  return best;
}

inline std::vector<std::string> point_labels(int k) {
  std::vector<std::string> base;
  for (int i = 0; i < k; ++i) base.push_back("p" + std::to_string(i));
  return base;
}

inline FuzzySet random_fuzzy_set(const LatticePtr& lattice, int points, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, lattice->size() - 1);
  std::vector<int> values(static_cast<size_t>(points));
  for (auto& v : values) v = pick(rng);
  return FuzzySet(lattice, point_labels(points), std::move(values));
}

inline PointMap random_point_map(std::vector<std::string> source, std::vector<std::string> target,
                                 std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, static_cast<int>(target.size()) - 1);
  std::vector<int> mapping(source.size());
  for (auto& t : mapping) t = pick(rng);
  return PointMap(std::move(source), std::move(target), std::move(mapping));
}

/// All bounded lattices with 2..max_n elements, one per isomorphism class.
inline std::vector<LatticePtr> lattice_pool(int max_n, bool distributive_only) {
  static std::vector<LatticePtr> all_pool, frame_pool;
  static int all_max = 1, frame_max = 1;
  auto& pool = distributive_only ? frame_pool : all_pool;
  int& built = distributive_only ? frame_max : all_max;
  while (built < max_n) {
    ++built;
    for (Lattice& l : enumerate_lattices(built, distributive_only)) pool.push_back(make(std::move(l)));
  }
  std::vector<LatticePtr> out;
  for (const LatticePtr& l : pool) {
    if (l->size() <= max_n) out.push_back(l);
  }
  return out;
}

inline std::vector<LatticePtr> semilinear_frame_pool(int max_n) {
  std::vector<LatticePtr> out;
  for (const LatticePtr& l : lattice_pool(max_n, true)) {
    if (l->semilinear_check().holds) out.push_back(l);
  }
  return out;
}

/// Multiplication tables of small groups, identity at index 0.
struct GroupTable {
  std::string name;
  std::vector<std::vector<int>> mul;
  int order() const { return static_cast<int>(mul.size()); }
};

inline GroupTable cyclic(int n) {
  GroupTable g{"C" + std::to_string(n), std::vector<std::vector<int>>(static_cast<size_t>(n))};
  for (int a = 0; a < n; ++a) {
    g.mul[static_cast<size_t>(a)].resize(static_cast<size_t>(n));
    for (int b = 0; b < n; ++b) g.mul[static_cast<size_t>(a)][static_cast<size_t>(b)] = (a + b) % n;
  }
  return g;
}

inline GroupTable klein4() {
  return GroupTable{"V4", {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}};
}

inline GroupTable s3() {
  // Permutations of three symbols, composed left to right.
  const std::vector<std::vector<int>> perms = {
      {0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
  GroupTable g{"S3", std::vector<std::vector<int>>(6, std::vector<int>(6, -1))};
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) {
      std::vector<int> composed(3);
      for (int i = 0; i < 3; ++i) composed[static_cast<size_t>(i)] = perms[static_cast<size_t>(b)][static_cast<size_t>(perms[static_cast<size_t>(a)][static_cast<size_t>(i)])];
      for (int c = 0; c < 6; ++c) {
        if (perms[static_cast<size_t>(c)] == composed) g.mul[static_cast<size_t>(a)][static_cast<size_t>(b)] = c;
      }
    }
  }
  return g;
}

inline const std::vector<GroupTable>& group_tables() {
  static const std::vector<GroupTable> tables = {cyclic(2), cyclic(3), cyclic(4),
                                                 klein4(),  cyclic(5), cyclic(6), s3()};
  return tables;
}

/// Crisp group embedded as a fuzzy group: memberships are constant on the
/// levels of the chain {e} <= <h> <= G for a random h, with values taken
/// from an ascending chain of the lattice so that every pairwise meet
/// stays above bottom. Optionally pads the base with a bottom-valued
/// point outside the support.
inline std::pair<FuzzySet, GradedOpTable> embed_group(const GroupTable& table,
                                                      const LatticePtr& lattice,
                                                      std::mt19937_64& rng,
                                                      bool pad_point = false) {
  const Lattice& l = *lattice;
  std::uniform_int_distribution<int> pick_any(0, l.size() - 1);

  const auto pick_at_least = [&](int floor_elem) {
    std::vector<int> ups;
    for (int e = 0; e < l.size(); ++e) {
      if (l.leq(floor_elem, e)) ups.push_back(e);
    }
    std::uniform_int_distribution<size_t> pick(0, ups.size() - 1);
    return ups[pick(rng)];
  };

  int floor_elem = l.bottom();
  while (floor_elem == l.bottom()) floor_elem = pick_any(rng);
  const int v_outer = pick_at_least(floor_elem);
  const int v_mid = pick_at_least(v_outer);
  const int v_identity = pick_at_least(v_mid);

  // Cyclic subgroup generated by a random element.
  const int n = table.order();
  std::uniform_int_distribution<int> pick_elem(0, n - 1);
  const int h = pick_elem(rng);
  std::vector<bool> in_mid(static_cast<size_t>(n), false);
  int cur = 0;
  do {
    in_mid[static_cast<size_t>(cur)] = true;
    cur = table.mul[static_cast<size_t>(cur)][static_cast<size_t>(h)];
  } while (cur != 0);

  std::vector<std::string> base;
  for (int i = 0; i < n; ++i) base.push_back("g" + std::to_string(i));
  if (pad_point) base.push_back("pad");

  std::vector<int> values;
  values.push_back(v_identity);
  for (int i = 1; i < n; ++i) values.push_back(in_mid[static_cast<size_t>(i)] ? v_mid : v_outer);
  if (pad_point) values.push_back(l.bottom());

  FuzzySet carrier(lattice, base, values);
  GradedOpTable op = GradedOpTable::all_bottom(lattice, base);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      op.set_grade(a, b, table.mul[static_cast<size_t>(a)][static_cast<size_t>(b)],
                   l.meet(values[static_cast<size_t>(a)], values[static_cast<size_t>(b)]));
    }
  }
  return {std::move(carrier), std::move(op)};
}

}  // namespace latcut::testing
