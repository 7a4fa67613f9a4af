#include "latcut/enumerate.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <tuple>

namespace latcut {

namespace {

constexpr int kMaxSize = 8;

/// Partial order under construction, in some linear extension: element 0
/// is the bottom, element n-1 the top, and down[i] is the strict down-set
/// of i as a bitmask over earlier elements.
struct Builder {
  int n = 0;
  std::array<std::uint16_t, kMaxSize> down{};

  /// Lower bounds of {a, b} never change once both are placed, so meet
  /// uniqueness can be pruned as soon as the later of the two arrives.
  bool meets_ok(int i) const {
    const std::uint16_t with_i = static_cast<std::uint16_t>(down[static_cast<size_t>(i)] | (1u << i));
    for (int j = 0; j < i; ++j) {
      const std::uint16_t common =
          static_cast<std::uint16_t>(with_i & (down[static_cast<size_t>(j)] | (1u << j)));
      bool found = false;
      for (int g = i; g >= 0 && !found; --g) {
        if (!(common & (1u << g))) continue;
        const std::uint16_t below_g = static_cast<std::uint16_t>(down[static_cast<size_t>(g)] | (1u << g));
        if ((common & ~below_g) == 0) found = true;
      }
      if (!found) return false;
    }
    return true;
  }
};

std::vector<std::string> make_labels(int n) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(n));
  labels.emplace_back("bot");
  for (int i = 1; i + 1 < n; ++i) labels.emplace_back(1, static_cast<char>('a' + i - 1));
  if (n > 1) labels.emplace_back("top");
  return labels;
}

Lattice build(const Builder& b) {
  const auto labels = make_labels(b.n);
  std::vector<std::pair<std::string, std::string>> covers;
  for (int i = 0; i < b.n; ++i) {
    for (int j = 0; j < i; ++j) {
      if (!(b.down[static_cast<size_t>(i)] & (1u << j))) continue;
      bool direct = true;
      for (int k = 0; k < i && direct; ++k) {
        if (k != j && (b.down[static_cast<size_t>(i)] & (1u << k)) &&
            (b.down[static_cast<size_t>(k)] & (1u << j))) {
          direct = false;
        }
      }
      if (direct) covers.emplace_back(labels[static_cast<size_t>(j)], labels[static_cast<size_t>(i)]);
    }
  }
  return Lattice::from_covers(labels, std::move(covers));
}

using Profile = std::tuple<int, int, int>;  // (down-set size, up-set size, height)

std::string encode(const Lattice& l, const std::vector<int>& position_of) {
  const int n = l.size();
  std::string key(static_cast<size_t>(n) * static_cast<size_t>(n), '0');
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (l.leq(a, b)) {
        key[static_cast<size_t>(position_of[static_cast<size_t>(a)]) * static_cast<size_t>(n) +
            static_cast<size_t>(position_of[static_cast<size_t>(b)])] = '1';
      }
    }
  }
  return key;
}

}  // namespace

std::string canonical_key(const Lattice& l) {
  const int n = l.size();
  std::vector<Profile> profiles(static_cast<size_t>(n));
  for (int e = 0; e < n; ++e) {
    int down = 0, up = 0;
    for (int x = 0; x < n; ++x) {
      down += l.leq(x, e);
      up += l.leq(e, x);
    }
    profiles[static_cast<size_t>(e)] = {down, up, l.height(e)};
  }

  // Inner elements grouped by profile; the canonical key is minimised over
  // relabelings that keep bottom first, top last, and each profile group in
  // a fixed band of positions. Profiles are isomorphism invariants, so the
  // minimum is the same for isomorphic lattices.
  std::vector<int> inner;
  for (int e = 0; e < n; ++e) {
    if (e != l.bottom() && e != l.top()) inner.push_back(e);
  }
  std::stable_sort(inner.begin(), inner.end(), [&](int x, int y) {
    return profiles[static_cast<size_t>(x)] < profiles[static_cast<size_t>(y)];
  });

  std::vector<std::pair<size_t, size_t>> groups;  // [first, last) in `inner`
  for (size_t i = 0; i < inner.size();) {
    size_t j = i;
    while (j < inner.size() &&
           profiles[static_cast<size_t>(inner[j])] == profiles[static_cast<size_t>(inner[i])]) {
      ++j;
    }
    groups.emplace_back(i, j);
    i = j;
  }
  for (auto [first, last] : groups) std::sort(inner.begin() + static_cast<long>(first), inner.begin() + static_cast<long>(last));

  std::vector<int> position_of(static_cast<size_t>(n));
  std::string best;
  while (true) {
    position_of[static_cast<size_t>(l.bottom())] = 0;
    position_of[static_cast<size_t>(l.top())] = n - 1;
    for (size_t i = 0; i < inner.size(); ++i) position_of[static_cast<size_t>(inner[i])] = static_cast<int>(i) + 1;
    std::string key = encode(l, position_of);
    if (best.empty() || key < best) best = std::move(key);

    // Odometer over per-group permutations.
    size_t g = 0;
    for (; g < groups.size(); ++g) {
      auto [first, last] = groups[g];
      if (std::next_permutation(inner.begin() + static_cast<long>(first), inner.begin() + static_cast<long>(last))) break;
    }
    if (g == groups.size()) break;
  }
  if (n == 1) best = "1";
  return best;
}

std::vector<Lattice> enumerate_lattices(int n, bool distributive_only) {
  if (n < 2 || n > kMaxSize) {
    raise(Errc::BoundExceeded, "enumeration is supported for 2 <= n <= " + std::to_string(kMaxSize));
  }

  std::vector<Lattice> out;
  std::set<std::string> seen;
  Builder b;
  b.n = n;

  const std::uint16_t inner_full = static_cast<std::uint16_t>((1u << (n - 1)) - 1);

  std::function<void(int)> place = [&](int i) {
    if (i == n - 1) {
      b.down[static_cast<size_t>(i)] = inner_full;  // the top is above everything
      if (!b.meets_ok(i)) return;
      Lattice l = build(b);
      if (distributive_only && !l.is_frame()) return;
      if (seen.insert(canonical_key(l)).second) out.push_back(std::move(l));
      return;
    }
    // Candidate strict down-sets: any transitively closed mask over the
    // earlier elements that contains the bottom.
    for (std::uint16_t m = 1; m < (1u << i); m = static_cast<std::uint16_t>(m + 2)) {
      bool closed = true;
      for (int j = 0; j < i && closed; ++j) {
        if ((m & (1u << j)) && (b.down[static_cast<size_t>(j)] & ~m)) closed = false;
      }
      if (!closed) continue;
      b.down[static_cast<size_t>(i)] = m;
      if (!b.meets_ok(i)) continue;
      place(i + 1);
    }
  };

  place(1);
  return out;
}

LatticeStream::LatticeStream(int n, bool distributive_only)
    : items_(enumerate_lattices(n, distributive_only)) {}

std::optional<Lattice> LatticeStream::next() {
  if (pos_ >= items_.size()) return std::nullopt;
  return items_[pos_++];
}

const char* predicate_name(LatticePredicate p) {
  switch (p) {
    case LatticePredicate::NotPrelinear: return "not_prelinear";
    case LatticePredicate::NotSemilinear: return "not_semilinear";
    case LatticePredicate::PrelinearAndNotSemilinear: return "prelinear_and_not_semilinear";
    case LatticePredicate::SemilinearAndNotPrelinear: return "semilinear_and_not_prelinear";
  }
  return "unknown";
}

std::optional<LatticePredicate> parse_predicate(const std::string& name) {
  for (LatticePredicate p :
       {LatticePredicate::NotPrelinear, LatticePredicate::NotSemilinear,
        LatticePredicate::PrelinearAndNotSemilinear, LatticePredicate::SemilinearAndNotPrelinear}) {
    if (name == predicate_name(p)) return p;
  }
  return std::nullopt;
}

std::vector<SearchHit> search_lattices(int n, LatticePredicate predicate, bool distributive_only) {
  std::vector<SearchHit> hits;
  for (const Lattice& l : enumerate_lattices(n, distributive_only)) {
    ClassificationReport report = l.classify();
    bool matches = false;
    switch (predicate) {
      case LatticePredicate::NotPrelinear: matches = !report.prelinear.holds; break;
      case LatticePredicate::NotSemilinear: matches = !report.semilinear.holds; break;
      case LatticePredicate::PrelinearAndNotSemilinear:
        matches = report.prelinear.holds && !report.semilinear.holds;
        break;
      case LatticePredicate::SemilinearAndNotPrelinear:
        matches = report.semilinear.holds && !report.prelinear.holds;
        break;
    }
    if (matches) hits.push_back(SearchHit{l, std::move(report)});
  }
  return hits;
}

}  // namespace latcut
