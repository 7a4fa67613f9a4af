#include <doctest.h>

#include <algorithm>
#include <array>
#include <set>

#include "latcut/enumerate.hpp"
#include "support.hpp"

using namespace latcut;
using namespace latcut::testing;

namespace {

/// Independent oracle: filter every reflexive relation on n labeled points
/// down to bounded lattices, then count isomorphism classes by minimising
/// the order matrix over all label permutations. Completely separate from
/// the incremental generator.
struct OracleCounts {
  int all = 0;
  int distributive = 0;
};

OracleCounts oracle_counts(int n) {
  const int pairs = n * (n - 1);
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) slots.emplace_back(i, j);
    }
  }

  std::set<std::string> classes, distributive_classes;
  std::array<std::array<bool, 5>, 5> leq{};

  const auto canonical = [&](const auto& order) {
    std::array<int, 5> perm{};
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    std::string best;
    do {
      std::string key(static_cast<size_t>(n * n), '0');
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          if (order[static_cast<size_t>(i)][static_cast<size_t>(j)]) {
            key[static_cast<size_t>(perm[static_cast<size_t>(i)] * n + perm[static_cast<size_t>(j)])] = '1';
          }
        }
      }
      if (best.empty() || key < best) best = key;
    } while (std::next_permutation(perm.begin(), perm.begin() + n));
    return best;
  };

  for (long long mask = 0; mask < (1ll << pairs); ++mask) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) leq[static_cast<size_t>(i)][static_cast<size_t>(j)] = (i == j);
    }
    for (int s = 0; s < pairs; ++s) {
      if (mask & (1ll << s)) leq[static_cast<size_t>(slots[static_cast<size_t>(s)].first)][static_cast<size_t>(slots[static_cast<size_t>(s)].second)] = true;
    }

    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      for (int j = 0; j < n && ok; ++j) {
        if (i != j && leq[static_cast<size_t>(i)][static_cast<size_t>(j)] && leq[static_cast<size_t>(j)][static_cast<size_t>(i)]) ok = false;  // antisymmetry
        if (!leq[static_cast<size_t>(i)][static_cast<size_t>(j)]) continue;
        for (int k = 0; k < n; ++k) {
          if (leq[static_cast<size_t>(j)][static_cast<size_t>(k)] && !leq[static_cast<size_t>(i)][static_cast<size_t>(k)]) {
            ok = false;  // transitivity
            break;
          }
        }
      }
    }
    if (!ok) continue;

    int bottoms = 0, tops = 0;
    for (int i = 0; i < n; ++i) {
      bool below_all = true, above_all = true;
      for (int j = 0; j < n; ++j) {
        if (!leq[static_cast<size_t>(i)][static_cast<size_t>(j)]) below_all = false;
        if (!leq[static_cast<size_t>(j)][static_cast<size_t>(i)]) above_all = false;
      }
      bottoms += below_all ? 1 : 0;
      tops += above_all ? 1 : 0;
    }
    if (bottoms != 1 || tops != 1) continue;

    // Unique meets and joins for every pair.
    std::array<std::array<int, 5>, 5> meet{}, join{};
    for (int a = 0; a < n && ok; ++a) {
      for (int b = 0; b < n && ok; ++b) {
        int m = -1, j = -1;
        for (int c = 0; c < n; ++c) {
          if (leq[static_cast<size_t>(c)][static_cast<size_t>(a)] && leq[static_cast<size_t>(c)][static_cast<size_t>(b)]) {
            bool greatest = true;
            for (int d = 0; d < n; ++d) {
              if (leq[static_cast<size_t>(d)][static_cast<size_t>(a)] && leq[static_cast<size_t>(d)][static_cast<size_t>(b)] &&
                  !leq[static_cast<size_t>(d)][static_cast<size_t>(c)]) {
                greatest = false;
              }
            }
            if (greatest) m = c;
          }
          if (leq[static_cast<size_t>(a)][static_cast<size_t>(c)] && leq[static_cast<size_t>(b)][static_cast<size_t>(c)]) {
            bool least = true;
            for (int d = 0; d < n; ++d) {
              if (leq[static_cast<size_t>(a)][static_cast<size_t>(d)] && leq[static_cast<size_t>(b)][static_cast<size_t>(d)] &&
                  !leq[static_cast<size_t>(c)][static_cast<size_t>(d)]) {
                least = false;
              }
            }
            if (least) j = c;
          }
        }
        if (m < 0 || j < 0) ok = false;
        meet[static_cast<size_t>(a)][static_cast<size_t>(b)] = m;
        join[static_cast<size_t>(a)][static_cast<size_t>(b)] = j;
      }
    }
    if (!ok) continue;

    bool distributive = true;
    for (int a = 0; a < n && distributive; ++a) {
      for (int b = 0; b < n && distributive; ++b) {
        for (int c = 0; c < n; ++c) {
          if (meet[static_cast<size_t>(a)][static_cast<size_t>(join[static_cast<size_t>(b)][static_cast<size_t>(c)])] !=
              join[static_cast<size_t>(meet[static_cast<size_t>(a)][static_cast<size_t>(b)])][static_cast<size_t>(meet[static_cast<size_t>(a)][static_cast<size_t>(c)])]) {
            distributive = false;
            break;
          }
        }
      }
    }

    const std::string key = canonical(leq);
    classes.insert(key);
    if (distributive) distributive_classes.insert(key);
  }

  return OracleCounts{static_cast<int>(classes.size()), static_cast<int>(distributive_classes.size())};
}

bool isomorphic(const Lattice& a, const Lattice& b) {
  return a.size() == b.size() && canonical_key(a) == canonical_key(b);
}

}  // namespace

TEST_CASE("counts match the labeled-poset oracle") {
  for (int n = 2; n <= 5; ++n) {
    const OracleCounts expect = oracle_counts(n);
    CAPTURE(n);
    CHECK(static_cast<int>(enumerate_lattices(n, false).size()) == expect.all);
    CHECK(static_cast<int>(enumerate_lattices(n, true).size()) == expect.distributive);
  }
}

TEST_CASE("known class counts") {
  CHECK(enumerate_lattices(2, false).size() == 1);
  CHECK(enumerate_lattices(3, false).size() == 1);
  CHECK(enumerate_lattices(4, false).size() == 2);
  CHECK(enumerate_lattices(5, false).size() == 5);
  CHECK(enumerate_lattices(6, false).size() == 15);
  CHECK(enumerate_lattices(7, false).size() == 53);

  CHECK(enumerate_lattices(8, false).size() == 222);

  CHECK(enumerate_lattices(4, true).size() == 2);
  CHECK(enumerate_lattices(5, true).size() == 3);
  CHECK(enumerate_lattices(6, true).size() == 5);
  CHECK(enumerate_lattices(7, true).size() == 8);
}

TEST_CASE("every yielded lattice is structurally sound and classes are distinct") {
  for (int n = 2; n <= 6; ++n) {
    std::set<std::string> keys;
    for (const Lattice& l : enumerate_lattices(n, false)) {
      CHECK(l.size() == n);
      CHECK(keys.insert(canonical_key(l)).second);
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          CHECK(l.leq(a, b) == (l.meet(a, b) == a));
          CHECK(l.join(a, l.meet(a, b)) == a);
        }
      }
    }
  }
}

TEST_CASE("stream interface") {
  LatticeStream stream(4);
  CHECK(stream.total() == 2);
  int count = 0;
  while (stream.next()) ++count;
  CHECK(count == 2);
  CHECK_FALSE(stream.next().has_value());

  CHECK_THROWS_AS(LatticeStream(1), Error);
  CHECK_THROWS_AS(LatticeStream(9), Error);
}

TEST_CASE("canonical keys identify isomorphic lattices") {
  // The same lattice under a different labeling and cover order.
  const auto a = m5();
  const auto b = make(Lattice::from_covers(
      {"zero", "left", "right", "mid", "one"},
      {{"zero", "right"}, {"zero", "left"}, {"right", "mid"}, {"left", "mid"}, {"mid", "one"}}));
  CHECK(isomorphic(*a, *b));
  CHECK_FALSE(isomorphic(*a, *n5()));
  CHECK_FALSE(isomorphic(*a, *m3()));
}

TEST_CASE("searches reproduce the minimality statements") {
  CHECK(search_lattices(4, LatticePredicate::NotPrelinear).empty());
  CHECK(search_lattices(3, LatticePredicate::NotPrelinear).empty());

  const auto hits5 = search_lattices(5, LatticePredicate::SemilinearAndNotPrelinear);
  CHECK_FALSE(hits5.empty());
  CHECK(std::any_of(hits5.begin(), hits5.end(),
                    [&](const SearchHit& hit) { return isomorphic(hit.lattice, *m5()); }));
  CHECK(search_lattices(4, LatticePredicate::SemilinearAndNotPrelinear).empty());

  CHECK(search_lattices(5, LatticePredicate::NotSemilinear, true).empty());
  const auto hits6 = search_lattices(6, LatticePredicate::NotSemilinear, true);
  CHECK_FALSE(hits6.empty());
  CHECK(std::any_of(hits6.begin(), hits6.end(),
                    [&](const SearchHit& hit) { return isomorphic(hit.lattice, *n6()); }));

  // Among all distributive lattices up to 7 elements, prelinearity implies
  // semilinearity.
  for (int n = 2; n <= 7; ++n) {
    CHECK(search_lattices(n, LatticePredicate::PrelinearAndNotSemilinear, true).empty());
  }
}

TEST_CASE("predicate names round-trip") {
  for (LatticePredicate p :
       {LatticePredicate::NotPrelinear, LatticePredicate::NotSemilinear,
        LatticePredicate::PrelinearAndNotSemilinear, LatticePredicate::SemilinearAndNotPrelinear}) {
    CHECK(parse_predicate(predicate_name(p)) == p);
  }
  CHECK_FALSE(parse_predicate("nonsense").has_value());
}
