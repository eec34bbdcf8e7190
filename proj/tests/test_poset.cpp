#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "secant/errors.hpp"
#include "secant/poset.hpp"

using namespace secant;

namespace {

// The order written out from its definition, independent of the Poset class.
bool order_oracle(GridPoint p, GridPoint q, int b) {
  if (p == q) return true;
  if (p.row < q.row && p.col < q.col) return true;
  return p.col <= b && q.col >= b + 1 && p.col < q.col - b;
}

// Longest chain by trying every increasing sequence.
int chain_oracle(const std::vector<GridPoint>& s, int b) {
  int best = 0;
  std::function<void(int, int)> extend = [&](int last, int len) {
    best = std::max(best, len);
    for (std::size_t i = 0; i < s.size(); ++i)
      if (last < 0 || (s[static_cast<std::size_t>(last)] != s[i] && order_oracle(s[static_cast<std::size_t>(last)], s[i], b)))
        extend(static_cast<int>(i), len + 1);
  };
  extend(-1, 0);
  return best;
}

}  // namespace

TEST_CASE("parameters are validated") {
  CHECK_NOTHROW((SegreParams{2, 2, 1}.validate()));
  CHECK_THROWS_AS((SegreParams{1, 2, std::nullopt}.validate()), ValidationError);
  CHECK_THROWS_AS((SegreParams{3, 2, std::nullopt}.validate()), ValidationError);
  CHECK_THROWS_AS((SegreParams{2, 2, 0}.validate()), ValidationError);
  CHECK_THROWS_AS((SegreParams{8, 9, std::nullopt}.validate()), ValidationError);
  try {
    SegreParams{3, 2, std::nullopt}.validate();
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("a <= b") != std::string::npos);
  }
}

TEST_CASE("secant regime") {
  CHECK_NOTHROW((SegreParams{3, 3, 2}.require_secant_regime()));
  CHECK_THROWS_AS((SegreParams{3, 3, 3}.require_secant_regime()), UnsupportedRegimeError);
  CHECK_THROWS_AS((SegreParams{3, 9, 3}.require_secant_regime()), UnsupportedRegimeError);
  CHECK_THROWS_AS((SegreParams{3, 3, std::nullopt}.require_secant_regime()), ValidationError);
}

TEST_CASE("grid points and variables") {
  const Poset p(2, 2);
  CHECK(p.size() == 8);
  CHECK(p.points().size() == 8);
  CHECK(to_variable({1, 3 + 3}, 3) == VariableId{2, 1, 3});
  CHECK(to_variable({2, 1}, 3) == VariableId{1, 2, 1});
  CHECK(to_grid_point({2, 1, 3}, 3) == GridPoint{1, 6});
  for (int a = 2; a <= 4; ++a)
    for (int b = a; b <= 5; ++b)
      for (int i = 0; i < 2 * a * b; ++i) {
        CHECK(variable_index(variable_at(i, a, b), a, b) == i);
        const Poset q(a, b);
        CHECK(q.index_of(q.point_at(i)) == i);
      }
  CHECK_THROWS_AS((p.index_of({3, 1})), ValidationError);
  CHECK_THROWS_AS((p.index_of({1, 5})), ValidationError);
}

TEST_CASE("comparability examples") {
  const Poset p3(3, 3);
  CHECK(p3.preceq({1, 1}, {2, 2}));
  CHECK_FALSE(p3.preceq({2, 2}, {1, 1}));
  CHECK(p3.less({3, 1}, {1, 5}));
  CHECK_FALSE(p3.less({3, 1}, {1, 4}));
  CHECK_FALSE(p3.less({1, 1}, {1, 1}));
  CHECK(p3.preceq({1, 1}, {1, 1}));
  CHECK_THROWS_AS((p3.less({0, 1}, {1, 1})), ValidationError);
  CHECK_THROWS_AS((p3.preceq({1, 1}, {1, 7})), ValidationError);
}

TEST_CASE("the order is a partial order and matches its definition") {
  for (int a = 2; a <= 4; ++a)
    for (int b = a; b <= 4; ++b) {
      const Poset p(a, b);
      const auto& pts = p.points();
      for (const auto& x : pts)
        for (const auto& y : pts) {
          REQUIRE(p.preceq(x, y) == order_oracle(x, y, b));
          if (x != y && p.preceq(x, y)) REQUIRE_FALSE(p.preceq(y, x));
          for (const auto& z : pts)
            if (p.preceq(x, y) && p.preceq(y, z)) REQUIRE(p.preceq(x, z));
        }
    }
}

TEST_CASE("linear extension respects the order") {
  const Poset p(3, 4);
  const auto& ext = p.linear_extension();
  REQUIRE(ext.size() == 24u);
  std::vector<int> pos(24);
  for (std::size_t i = 0; i < ext.size(); ++i) pos[static_cast<std::size_t>(ext[i])] = static_cast<int>(i);
  for (int i = 0; i < 24; ++i)
    for (int j = 0; j < 24; ++j)
      if (p.less(p.point_at(i), p.point_at(j))) CHECK(pos[static_cast<std::size_t>(i)] < pos[static_cast<std::size_t>(j)]);
}

TEST_CASE("longest chain") {
  const Poset p2(2, 2);
  CHECK(p2.longest_chain(p2.points()) == 2);
  CHECK(chain_oracle(p2.points(), 2) == 2);
  CHECK(p2.longest_chain(std::vector<GridPoint>{}) == 0);
  const Poset p3(3, 3);
  CHECK(p3.longest_chain(std::vector<GridPoint>{{1, 1}, {2, 2}, {3, 5}}) == 3);
  // a path is an antichain
  const std::vector<GridPoint> path{{1, 4}, {1, 3}, {2, 3}, {2, 2}, {3, 2}, {3, 1}};
  CHECK(p3.longest_chain(path) == 1);
  CHECK(p3.is_antichain(p3.to_set(path)));
}

TEST_CASE("longest chain and Mirsky partition on random subsets") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int a = 2 + static_cast<int>(rng() % 3);
    const int b = a + static_cast<int>(rng() % 2);
    const Poset p(a, b);
    std::vector<GridPoint> s;
    for (const auto& x : p.points())
      if (rng() % 3 == 0) s.push_back(x);
    const int len = p.longest_chain(s);
    REQUIRE(len == chain_oracle(s, b));
    const auto parts = p.mirsky_partition(s);
    REQUIRE(static_cast<int>(parts.size()) == len);
    std::vector<GridPoint> all;
    for (const auto& part : parts) {
      CHECK_FALSE(part.empty());
      CHECK(p.is_antichain(p.to_set(part)));
      all.insert(all.end(), part.begin(), part.end());
    }
    std::sort(all.begin(), all.end());
    CHECK(all == s);
  }
}

TEST_CASE("Mirsky partition of singletons and chains") {
  const Poset p(3, 3);
  const auto single = p.mirsky_partition(std::vector<GridPoint>{{2, 2}});
  REQUIRE(single.size() == 1);
  CHECK(single[0] == std::vector<GridPoint>{{2, 2}});
  const std::vector<GridPoint> chain{{1, 1}, {2, 2}, {3, 5}};
  const auto parts = p.mirsky_partition(chain);
  REQUIRE(parts.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(parts[i] == std::vector<GridPoint>{chain[i]});
}

TEST_CASE("chain enumeration") {
  CHECK(Poset(2, 3).enumerate_chains(2).size() == 24);
  CHECK(Poset(2, 2).enumerate_chains(3).empty());
  CHECK(Poset(3, 4).enumerate_chains(1).size() == 24);
  for (int a = 2; a <= 3; ++a)
    for (int b = a; b <= 4; ++b) {
      const Poset p(a, b);
      std::size_t pairs = 0;
      for (const auto& x : p.points())
        for (const auto& y : p.points())
          if (x != y && order_oracle(x, y, b)) ++pairs;
      const auto chains = p.enumerate_chains(2);
      CHECK(chains.size() == pairs);
      CHECK(std::is_sorted(chains.begin(), chains.end()));
      for (const auto& c : p.enumerate_chains(3)) {
        CHECK(p.less(c[0], c[1]));
        CHECK(p.less(c[1], c[2]));
      }
    }
  CHECK(Poset(6, 6).enumerate_chains(4).size() == 13725);
}

TEST_CASE("lattice meet and join") {
  const LatticeElement u{2, 1, 3}, v{1, 2, 4};
  const auto [meet, join] = lattice_meet_join(u, v);
  CHECK(meet == LatticeElement{1, 1, 3});
  CHECK(join == LatticeElement{2, 2, 4});
  CHECK(lattice_meet_join(u, u) == std::make_pair(u, u));
  const LatticeElement lo{1, 1, 2}, hi{2, 2, 3};
  CHECK(lattice_leq(lo, hi));
  CHECK(lattice_meet_join(lo, hi) == std::make_pair(lo, hi));
  CHECK_FALSE(lattice_leq(u, v));
  CHECK_FALSE(lattice_leq(v, u));
}
