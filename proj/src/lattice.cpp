#include "latcut/lattice.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace latcut {

namespace {

std::string pair_text(const Lattice& l, int a, int b) {
  return "(" + l.label(a) + ", " + l.label(b) + ")";
}

}  // namespace

bool Lattice::contains(std::string_view label) const {
  return index_.find(std::string(label)) != index_.end();
}

int Lattice::index_of(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) {
    raise(Errc::UnknownElement, "no element named '" + std::string(label) + "'");
  }
  return it->second;
}

Lattice Lattice::from_covers(std::vector<std::string> elements,
                             std::vector<std::pair<std::string, std::string>> covers) {
  Lattice l;
  l.labels_ = std::move(elements);
  const size_t n = l.labels_.size();
  if (n == 0) raise(Errc::Unbounded, "empty element list");
  for (size_t i = 0; i < n; ++i) {
    if (!l.index_.emplace(l.labels_[i], static_cast<int>(i)).second) {
      raise(Errc::SchemaError, "duplicate element label '" + l.labels_[i] + "'");
    }
  }

  std::vector<std::vector<int>> above(n);
  for (const auto& [lo, hi] : covers) {
    above[static_cast<size_t>(l.index_of(lo))].push_back(l.index_of(hi));
  }

  // Cycle check by iterative DFS over the cover digraph.
  std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
  for (size_t root = 0; root < n; ++root) {
    if (state[root] != 0) continue;
    std::vector<std::pair<int, size_t>> stack{{static_cast<int>(root), 0}};
    state[root] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < above[static_cast<size_t>(v)].size()) {
        int w = above[static_cast<size_t>(v)][next++];
        if (state[static_cast<size_t>(w)] == 1) {
          raise(Errc::CycleDetected, "cover graph has a cycle through '" + l.labels_[static_cast<size_t>(w)] + "'");
        }
        if (state[static_cast<size_t>(w)] == 0) {
          state[static_cast<size_t>(w)] = 1;
          stack.emplace_back(w, 0);
        }
      } else {
        state[static_cast<size_t>(v)] = 2;
        stack.pop_back();
      }
    }
  }

  // Reflexive-transitive closure.
  l.leq_.assign(n * n, 0);
  for (size_t i = 0; i < n; ++i) l.leq_[i * n + i] = 1;
  for (size_t i = 0; i < n; ++i) {
    for (int j : above[i]) l.leq_[i * n + static_cast<size_t>(j)] = 1;
  }
  for (size_t k = 0; k < n; ++k) {
    for (size_t i = 0; i < n; ++i) {
      if (!l.leq_[i * n + k]) continue;
      for (size_t j = 0; j < n; ++j) {
        if (l.leq_[k * n + j]) l.leq_[i * n + j] = 1;
      }
    }
  }

  l.derive_tables();
  return l;
}

Lattice Lattice::chain(std::vector<std::string> elements) {
  std::vector<std::pair<std::string, std::string>> covers;
  for (size_t i = 0; i + 1 < elements.size(); ++i) covers.emplace_back(elements[i], elements[i + 1]);
  return from_covers(std::move(elements), std::move(covers));
}

void Lattice::derive_tables() {
  const size_t n = labels_.size();

  // A unique minimal element is below everything (every element has some
  // minimal element under it), and dually for the maximum.
  std::vector<int> minimal, maximal;
  for (size_t i = 0; i < n; ++i) {
    bool is_min = true, is_max = true;
    for (size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      if (leq_[j * n + i]) is_min = false;
      if (leq_[i * n + j]) is_max = false;
    }
    if (is_min) minimal.push_back(static_cast<int>(i));
    if (is_max) maximal.push_back(static_cast<int>(i));
  }
  if (minimal.size() != 1) {
    raise(Errc::Unbounded, "no global bottom: " + std::to_string(minimal.size()) + " minimal elements");
  }
  if (maximal.size() != 1) {
    raise(Errc::Unbounded, "no global top: " + std::to_string(maximal.size()) + " maximal elements");
  }
  bottom_ = minimal[0];
  top_ = maximal[0];

  meet_.assign(n * n, -1);
  join_.assign(n * n, -1);
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = a; b < n; ++b) {
      int m = -1;
      for (size_t c = 0; c < n; ++c) {
        if (!(leq_[c * n + a] && leq_[c * n + b])) continue;
        if (m < 0 || leq_[static_cast<size_t>(m) * n + c]) m = static_cast<int>(c);
      }
      // m is the lower bound with maximal height among those seen; it is the
      // meet iff it dominates every other lower bound.
      for (size_t c = 0; c < n; ++c) {
        if (leq_[c * n + a] && leq_[c * n + b] && !leq_[c * n + static_cast<size_t>(m)]) {
          raise(Errc::NotALattice, "pair " + pair_text(*this, static_cast<int>(a), static_cast<int>(b)) +
                                       " has no unique meet");
        }
      }
      int j = -1;
      for (size_t c = 0; c < n; ++c) {
        if (!(leq_[a * n + c] && leq_[b * n + c])) continue;
        if (j < 0 || leq_[c * n + static_cast<size_t>(j)]) j = static_cast<int>(c);
      }
      for (size_t c = 0; c < n; ++c) {
        if (leq_[a * n + c] && leq_[b * n + c] && !leq_[static_cast<size_t>(j) * n + c]) {
          raise(Errc::NotALattice, "pair " + pair_text(*this, static_cast<int>(a), static_cast<int>(b)) +
                                       " has no unique join");
        }
      }
      meet_[a * n + b] = meet_[b * n + a] = m;
      join_[a * n + b] = join_[b * n + a] = j;
    }
  }

  height_.assign(n, 0);
  // Longest chain from bottom; process in order of down-set size.
  std::vector<int> order(n);
  for (size_t i = 0; i < n; ++i) order[i] = static_cast<int>(i);
  std::vector<int> downsize(n, 0);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) downsize[i] += leq_[j * n + i];
  }
  std::sort(order.begin(), order.end(), [&](int x, int y) { return downsize[static_cast<size_t>(x)] < downsize[static_cast<size_t>(y)]; });
  for (int e : order) {
    int h = 0;
    for (size_t j = 0; j < n; ++j) {
      if (static_cast<int>(j) != e && leq_[j * n + static_cast<size_t>(e)]) {
        h = std::max(h, height_[j] + 1);
      }
    }
    height_[static_cast<size_t>(e)] = h;
  }

  frame_ = LawCheck{};
  for (size_t a = 0; a < n && frame_.holds; ++a) {
    for (size_t b = 0; b < n && frame_.holds; ++b) {
      for (size_t c = 0; c < n; ++c) {
        int lhs = meet(static_cast<int>(a), join(static_cast<int>(b), static_cast<int>(c)));
        int rhs = join(meet(static_cast<int>(a), static_cast<int>(b)), meet(static_cast<int>(a), static_cast<int>(c)));
        if (lhs != rhs) {
          frame_.holds = false;
          frame_.witness = {static_cast<int>(a), static_cast<int>(b), static_cast<int>(c)};
          break;
        }
      }
    }
  }
}

int Lattice::meet_all(const std::vector<int>& s) const {
  int acc = top_;
  for (int e : s) acc = meet(acc, e);
  return acc;
}

int Lattice::join_all(const std::vector<int>& s) const {
  int acc = bottom_;
  for (int e : s) acc = join(acc, e);
  return acc;
}

int Lattice::godel_arrow(int a, int b) const { return leq(a, b) ? top_ : b; }

int Lattice::residuated_impl(int a, int b) const {
  if (!frame_.holds) {
    raise(Errc::NotAFrame, "residuated implication requires a frame; distributivity fails at (" +
                               label(frame_.witness[0]) + ", " + label(frame_.witness[1]) + ", " +
                               label(frame_.witness[2]) + ")");
  }
  int acc = bottom_;
  for (int c = 0; c < size(); ++c) {
    if (leq(meet(c, a), b)) acc = join(acc, c);
  }
  return acc;
}

int Lattice::implication(ArrowKind kind, int a, int b) const {
  return kind == ArrowKind::GodelLike ? godel_arrow(a, b) : residuated_impl(a, b);
}

LawCheck Lattice::prelinear_check() const {
  for (int a = 0; a < size(); ++a) {
    for (int b = 0; b < size(); ++b) {
      if (join(godel_arrow(a, b), godel_arrow(b, a)) != top_) {
        return LawCheck{false, {a, b}};
      }
    }
  }
  return LawCheck{};
}

LawCheck Lattice::semilinear_check(ArrowKind kind) const {
  for (int a = 0; a < size(); ++a) {
    for (int b = 0; b < size(); ++b) {
      if (b == a) continue;
      for (int c = 0; c < size(); ++c) {
        if (c == a) continue;
        int lhs = meet(implication(kind, a, b), implication(kind, a, c));
        int rhs = implication(kind, a, meet(b, c));
        if (lhs != rhs) return LawCheck{false, {a, b, c}};
      }
    }
  }
  return LawCheck{};
}

ClassificationReport Lattice::classify() const {
  return ClassificationReport{frame_check(), prelinear_check(), semilinear_check()};
}

bool Lattice::is_chain() const {
  for (int a = 0; a < size(); ++a) {
    for (int b = a + 1; b < size(); ++b) {
      if (!leq(a, b) && !leq(b, a)) return false;
    }
  }
  return true;
}

std::vector<std::pair<int, int>> Lattice::cover_pairs() const {
  std::vector<std::pair<int, int>> covers;
  const int n = size();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b || !leq(a, b)) continue;
      bool direct = true;
      for (int c = 0; c < n && direct; ++c) {
        if (c != a && c != b && leq(a, c) && leq(c, b)) direct = false;
      }
      if (direct) covers.emplace_back(a, b);
    }
  }
  std::sort(covers.begin(), covers.end());
  return covers;
}

bool Lattice::structurally_equal(const Lattice& other) const {
  return labels_ == other.labels_ && leq_ == other.leq_;
}

std::vector<std::uint64_t> subset_masks(int m, int subset_bound, int sample_count,
                                        std::uint64_t seed, bool* exhaustive) {
  std::vector<std::uint64_t> masks;
  const bool all = m <= subset_bound || (m < 63 && (1ull << m) <= static_cast<std::uint64_t>(sample_count));
  if (exhaustive) *exhaustive = all;
  if (all) {
    masks.reserve(1ull << m);
    for (std::uint64_t s = 0; s < (1ull << m); ++s) masks.push_back(s);
    return masks;
  }
  const std::uint64_t full = (m >= 64) ? ~0ull : ((1ull << m) - 1);
  std::set<std::uint64_t> seen{0, full};
  std::mt19937_64 rng(seed);
  while (seen.size() < static_cast<size_t>(sample_count)) {
    seen.insert(rng() & full);
  }
  masks.assign(seen.begin(), seen.end());
  return masks;
}

namespace {

std::string triple_text(const Lattice& l, int a, int b, int c) {
  return "(" + l.label(a) + ", " + l.label(b) + ", " + l.label(c) + ")";
}

}  // namespace

bool ArrowPropertiesReport::all_hold() const {
  for (const auto& p : properties) {
    if (!p.holds) return false;
  }
  return true;
}

ArrowPropertiesReport check_arrow_properties(const Lattice& l, const PropertyOptions& options) {
  ArrowPropertiesReport report;
  const int n = l.size();
  auto arrow = [&](int a, int b) { return l.godel_arrow(a, b); };

  PropertyResult p1{"1: a->a = top", true, ""};
  for (int a = 0; a < n && p1.holds; ++a) {
    if (arrow(a, a) != l.top()) {
      p1.holds = false;
      p1.witness = l.label(a);
    }
  }
  report.properties.push_back(p1);

  PropertyResult p2{"2: (a->b) /\\ (b->c) <= a->c", true, ""};
  for (int a = 0; a < n && p2.holds; ++a) {
    for (int b = 0; b < n && p2.holds; ++b) {
      for (int c = 0; c < n; ++c) {
        if (!l.leq(l.meet(arrow(a, b), arrow(b, c)), arrow(a, c))) {
          p2.holds = false;
          p2.witness = triple_text(l, a, b, c);
          break;
        }
      }
    }
  }
  report.properties.push_back(p2);

  PropertyResult p3{"3: a<=b implies a->x >= b->x", true, ""};
  PropertyResult p4{"4: a<=b implies x->a <= x->b", true, ""};
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (!l.leq(a, b)) continue;
      for (int x = 0; x < n; ++x) {
        if (p3.holds && !l.leq(arrow(b, x), arrow(a, x))) {
          p3.holds = false;
          p3.witness = triple_text(l, a, b, x);
        }
        if (p4.holds && !l.leq(arrow(x, a), arrow(x, b))) {
          p4.holds = false;
          p4.witness = triple_text(l, a, b, x);
        }
      }
    }
  }
  report.properties.push_back(p3);
  report.properties.push_back(p4);

  PropertyResult p5{"5': prelinear implies semilinear", true, ""};
  const LawCheck pre = l.prelinear_check();
  if (pre.holds) {
    const LawCheck semi = l.semilinear_check();
    if (!semi.holds) {
      p5.holds = false;
      p5.witness = triple_text(l, semi.witness[0], semi.witness[1], semi.witness[2]);
    }
  }
  report.properties.push_back(p5);

  PropertyResult p6{"6: inf{a_i->b} = sup{a_i}->b", true, ""};
  const auto masks = subset_masks(n, options.subset_bound, options.sample_count, options.seed,
                                  &report.subsets_exhaustive);
  for (std::uint64_t mask : masks) {
    if (mask == 0 || !p6.holds) continue;  // nonempty subsets
    std::vector<int> subset;
    for (int i = 0; i < n; ++i) {
      if (mask & (1ull << i)) subset.push_back(i);
    }
    const int sup = l.join_all(subset);
    for (int b = 0; b < n; ++b) {
      std::vector<int> arrows;
      arrows.reserve(subset.size());
      for (int a : subset) arrows.push_back(arrow(a, b));
      if (l.meet_all(arrows) != arrow(sup, b)) {
        p6.holds = false;
        std::ostringstream os;
        os << "S = {";
        for (size_t i = 0; i < subset.size(); ++i) os << (i ? ", " : "") << l.label(subset[i]);
        os << "}, b = " << l.label(b);
        p6.witness = os.str();
        break;
      }
    }
  }
  report.properties.push_back(p6);

  PropertyResult p7{"7: a<=b iff a->b = top", true, ""};
  for (int a = 0; a < n && p7.holds; ++a) {
    for (int b = 0; b < n; ++b) {
      if (l.leq(a, b) != (arrow(a, b) == l.top())) {
        p7.holds = false;
        p7.witness = pair_text(l, a, b);
        break;
      }
    }
  }
  report.properties.push_back(p7);

  PropertyResult p8{"8: a /\\ (a->b) <= b", true, ""};
  for (int a = 0; a < n && p8.holds; ++a) {
    for (int b = 0; b < n; ++b) {
      if (!l.leq(l.meet(a, arrow(a, b)), b)) {
        p8.holds = false;
        p8.witness = pair_text(l, a, b);
        break;
      }
    }
  }
  report.properties.push_back(p8);

  return report;
}

}  // namespace latcut
