#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "secant/errors.hpp"
#include "secant/shelling.hpp"

using namespace secant;

namespace {

std::vector<SegreParams> small_instances() {
  std::vector<SegreParams> out;
  for (int a = 2; a <= 4; ++a)
    for (int b = a; b <= 4; ++b)
      for (int t = 1; t < a; ++t) out.push_back({a, b, t});
  return out;
}

HVector hv(std::initializer_list<long> v) {
  HVector h;
  for (long x : v) h.emplace_back(x);
  return h;
}

// h-vector from face counts gathered by visiting every subset of P.
HVector brute_h(const SegreParams& p) {
  const Poset poset(p);
  const int n = poset.size();
  const int d = (p.a + p.b) * *p.t;
  std::vector<BigInt> f(static_cast<std::size_t>(n + 1), 0);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    PointSet s;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1u) s.set(i);
    if (poset.longest_chain(s) <= *p.t) f[static_cast<std::size_t>(s.count())] += 1;
  }
  f.resize(static_cast<std::size_t>(d + 1));
  return h_from_f(f, d);
}

// r(F_i) by comparing with every earlier facet.
PointSet brute_restriction(const ShellingOrder& order, std::size_t i) {
  PointSet r;
  const auto& f = order.facets()[i].points;
  for (std::size_t k = 0; k < i; ++k) {
    const PointSet diff = f - order.facets()[k].points;
    if (diff.count() == 1) r |= diff;
  }
  return r;
}

// Starting points and down-then-left corners of the paths of a facet.
PointSet turns_and_starts(const Facet& f, const Poset& poset) {
  PointSet s;
  for (const auto& path : f.paths) {
    s.set(poset.index_of(path.points.front()));
    for (std::size_t k = 1; k + 1 < path.points.size(); ++k) {
      const auto& prev = path.points[k - 1];
      const auto& cur = path.points[k];
      const auto& next = path.points[k + 1];
      if (cur.row == prev.row + 1 && next.col == cur.col - 1) s.set(poset.index_of(cur));
    }
  }
  return s;
}

// The shelling condition checked literally over all triples.
bool brute_shells(const ShellingOrder& order) {
  const auto& fs = order.facets();
  for (std::size_t i = 1; i < fs.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      const PointSet lost = fs[i].points - fs[j].points;
      bool found = false;
      for (std::size_t k = 0; k < i && !found; ++k) {
        const PointSet d = fs[i].points - fs[k].points;
        found = d.count() == 1 && d.subset_of(lost);
      }
      if (!found) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("regions") {
  const int a = 3, b = 3;
  const Poset poset(a, b);
  for (const auto& x : poset.points()) {
    const auto open = open_region(x, a, b);
    const auto closed = closed_region(x, a, b);
    CHECK(open.subset_of(closed));
    CHECK(closed.test(poset.index_of(x)));
    CHECK_FALSE(open.test(poset.index_of(x)));
    for (const auto& y : poset.points()) {
      CHECK(closed.test(poset.index_of(y)) == (y.row >= x.row && y.col >= x.col));
      CHECK(open.test(poset.index_of(y)) == (y.row > x.row && y.col > x.col));
    }
  }
  const std::vector<GridPoint> g{{1, 5}, {2, 2}};
  CHECK(closed_region(g, a, b) == (closed_region(g[0], a, b) | closed_region(g[1], a, b)));
}

TEST_CASE("facet order on (3,3,2)") {
  const SegreParams p{3, 3, 2};
  const auto facets = collect_facets(p, 1000);
  REQUIRE(facets.size() == 57);
  for (const auto& f : facets) CHECK(facet_preceq(f, f, p));
  for (const auto& f : facets)
    for (const auto& g : facets) {
      if (!(f == g) && facet_preceq(f, g, p)) CHECK_FALSE(facet_preceq(g, f, p));
      if (!facet_preceq(f, g, p)) continue;
      for (const auto& h : facets)
        if (facet_preceq(g, h, p)) CHECK(facet_preceq(f, h, p));
    }
  // within one h-tuple the facet drawn along the right and bottom is the top
  std::map<std::vector<int>, std::vector<const Facet*>> by_tuple;
  for (const auto& f : facets) by_tuple[f.h_tuple()].push_back(&f);
  for (const auto& [h, group] : by_tuple) {
    std::vector<const Facet*> maximal;
    for (const Facet* f : group) {
      bool top = true;
      for (const Facet* g : group)
        if (g != f && facet_preceq(*f, *g, p)) top = false;
      if (top) maximal.push_back(f);
    }
    REQUIRE(maximal.size() == 1);
    const Facet& m = *maximal.front();
    for (const Facet* g : group) CHECK(facet_preceq(*g, m, p));
    // its last path makes its only turn at the bottom row
    const auto& last = m.paths.back().points;
    CHECK(last[static_cast<std::size_t>(p.a - 1)] == GridPoint{p.a, p.b + h.back()});
  }
}

TEST_CASE("shelling order extends the facet order and is deterministic") {
  for (const auto& p : std::vector<SegreParams>{{2, 2, 1}, {3, 3, 2}, {3, 4, 2}}) {
    const auto order = shelling_order(p);
    CHECK(order.certified());
    const auto& fs = order.facets();
    for (std::size_t i = 0; i < fs.size(); ++i)
      for (std::size_t j = 0; j < fs.size(); ++j)
        if (i != j && facet_preceq(fs[i], fs[j], p)) CHECK(i < j);
    for (const auto& f : fs) CHECK_FALSE((facet_preceq(f, fs.front(), p) && !(f == fs.front())));
    const auto again = shelling_order(p);
    CHECK(again.facets() == fs);
    for (std::size_t i = 0; i < fs.size(); ++i) CHECK(order.rank_of(fs[i].points) == i);
  }
  CHECK(shelling_order({2, 2, 1}).size() == 6);
}

TEST_CASE("certification") {
  CHECK(certify_shelling(shelling_order({2, 2, 1})).ok);
  CHECK(certify_shelling(shelling_order({3, 3, 2})).ok);
  for (const auto& p : small_instances()) {
    ShellingOptions opt;
    opt.certify = false;
    const auto order = shelling_order(p, opt);
    CHECK(certify_shelling(order).ok);
    CHECK(certify_shelling(order, 3).ok);
  }
  // the reverse of this order happens to shell as well
  const SegreParams p{3, 3, 2};
  auto facets = shelling_order(p).facets();
  std::reverse(facets.begin(), facets.end());
  CHECK(certify_shelling(ShellingOrder(p, facets)).ok);
  // a second facet meeting the first in less than a codimension-one face
  auto mutated = shelling_order(p).facets();
  const auto far = std::find_if(mutated.begin() + 1, mutated.end(), [&](const Facet& f) {
    return (f.points - mutated.front().points).count() >= 2;
  });
  REQUIRE(far != mutated.end());
  std::rotate(mutated.begin() + 1, far, far + 1);
  const auto cert = certify_shelling(ShellingOrder(p, mutated));
  CHECK_FALSE(cert.ok);
  REQUIRE(cert.witness);
  CHECK(*cert.witness == std::make_pair(std::size_t{1}, std::size_t{0}));
}

TEST_CASE("certifier agrees with the definition on shuffled orders") {
  std::mt19937 rng(3);
  int accepted = 0, rejected = 0;
  for (const auto& p : std::vector<SegreParams>{{2, 3, 1}, {3, 3, 1}, {3, 3, 2}}) {
    const auto base = shelling_order(p).facets();
    for (int trial = 0; trial < 40; ++trial) {
      auto facets = base;
      // keep a shelling prefix and shuffle the tail, so both verdicts occur
      const auto cut = facets.begin() + static_cast<long>(rng() % facets.size());
      std::shuffle(cut, facets.end(), rng);
      const ShellingOrder order(p, facets);
      const auto cert = certify_shelling(order);
      CHECK(cert.ok == brute_shells(order));
      ++(cert.ok ? accepted : rejected);
    }
  }
  CHECK(accepted > 0);
  CHECK(rejected > 0);
}

TEST_CASE("restriction sets") {
  for (const auto& p : std::vector<SegreParams>{{3, 3, 2}, {2, 4, 1}, {4, 4, 2}}) {
    const auto order = shelling_order(p);
    const Poset poset(p);
    CHECK(restriction_set(order, 0).empty());
    const auto sets = restriction_sets(order, 2);
    REQUIRE(sets.size() == order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      CHECK(sets[i] == restriction_set(order, i));
      CHECK(sets[i] == brute_restriction(order, i));
      CHECK(sets[i].count() <= p.a * *p.t);
      CHECK(sets[i].subset_of(turns_and_starts(order.facets()[i], poset)));
    }
  }
}

TEST_CASE("h-vector examples and agreement of the three methods") {
  for (auto m : {HMethod::shelling, HMethod::f_vector, HMethod::monomial})
    CHECK(h_vector({2, 2, 1}, m) == hv({1, 4, 1}));
  for (const auto& p : small_instances()) {
    const auto hs = h_vector(p, HMethod::shelling);
    CHECK(hs == h_vector(p, HMethod::f_vector));
    CHECK(hs == h_vector(p, HMethod::monomial));
    CHECK(poly_eval_at_one(hs) == degree(p));
    CHECK(hs[0] == 1);
    CHECK(hs[1] == dimension(p).codimension);
  }
  for (const auto& p : std::vector<SegreParams>{{2, 2, 1}, {2, 3, 1}, {3, 3, 1}, {3, 3, 2}})
    CHECK(h_vector(p, HMethod::monomial) == brute_h(p));
}

TEST_CASE("h-vector regressions") {
  CHECK(h_vector({2, 3, 1}, HMethod::monomial) == hv({1, 7, 4}));
  CHECK(h_vector({3, 3, 2}, HMethod::monomial) == hv({1, 6, 21, 20, 9}));
  CHECK(h_vector({3, 6, 2}, HMethod::monomial) == hv({1, 18, 171, 600, 990, 648, 176}));
  CHECK(h_vector({4, 4, 3}, HMethod::monomial) == hv({1, 8, 36, 120, 195, 192, 100}));
  CHECK(h_vector({5, 5, 3}, HMethod::monomial) ==
        hv({1, 20, 210, 1540, 6880, 19656, 36790, 43820, 34155, 17260, 5403, 1050, 100}));
}

TEST_CASE("regularity") {
  CHECK(regularity(h_vector({2, 2, 1}, HMethod::monomial)) == 2);
  CHECK(regularity(h_vector({2, 4, 1}, HMethod::monomial)) == 2);
  CHECK(regularity(h_vector({3, 6, 2}, HMethod::monomial)) == 6);
  for (const auto& p : small_instances()) {
    const auto order = shelling_order(p);
    int max_r = 0;
    for (const auto& r : restriction_sets(order)) max_r = std::max(max_r, r.count());
    const int reg = regularity(h_vector(p, HMethod::monomial));
    CHECK(max_r == reg);
    CHECK(reg <= p.a * *p.t);
    if (p.b >= 2 * *p.t) CHECK(reg == p.a * *p.t);
  }
}

TEST_CASE("symmetry") {
  CHECK(gorenstein_symmetry(h_vector({2, 2, 1}, HMethod::monomial)));
  const auto h442 = h_vector({4, 4, 2}, HMethod::shelling);
  CHECK(gorenstein_symmetry(h442));
  CHECK(h442.back() == 1);
  // (2,3,1) is recorded, not asserted: top entry 4, not symmetric
  const auto h231 = h_vector({2, 3, 1}, HMethod::monomial);
  CHECK(h231.back() == 4);
  CHECK_FALSE(gorenstein_symmetry(h231));
}

TEST_CASE("Hilbert series") {
  for (const auto& p : small_instances()) {
    const auto s = hilbert_series(p);
    CHECK(s.pole_order == (p.a + p.b) * *p.t);
    CHECK(poly_eval_at_one(s.numerator) == degree(p));
  }
}

TEST_CASE("h from f") {
  // boundary of a triangle: f = (1, 3, 3), d = 2
  CHECK(h_from_f({1, 3, 3}, 2) == hv({1, 1, 1}));
  CHECK(h_from_f({1, 4, 4}, 2) == hv({1, 2, 1}));
}

TEST_CASE("budgets") {
  ShellingOptions small;
  small.max_facets = 100;
  CHECK_THROWS_AS((shelling_order({4, 4, 2}, small)), BudgetExceededError);
  try {
    collect_facets({4, 4, 2}, 100);
  } catch (const BudgetExceededError& e) {
    CHECK(std::string(e.what()).find("1830") != std::string::npos);
  }
  CHECK_THROWS_AS((f_vector({4, 4, 2}, 10)), BudgetExceededError);
  HVectorOptions opt;
  opt.monomial.max_memo_entries = 5;
  CHECK_THROWS_AS((h_vector({4, 4, 2}, HMethod::monomial, opt)), BudgetExceededError);
  CHECK_THROWS_AS((h_vector({3, 3, 3}, HMethod::monomial)), UnsupportedRegimeError);
}

TEST_CASE("method names") {
  CHECK(parse_h_method("shelling") == HMethod::shelling);
  CHECK(parse_h_method("f-vector") == HMethod::f_vector);
  CHECK(parse_h_method("monomial") == HMethod::monomial);
  CHECK(to_string(HMethod::f_vector) == "f_vector");
  CHECK_THROWS_AS(parse_h_method("magic"), ValidationError);
}

TEST_CASE("squarefree K-polynomial") {
  // (x0) in one variable: K = 1 - x
  PointSet x0;
  x0.set(0);
  CHECK(squarefree_k_polynomial({x0}) == hv({1, -1}));
  // (x0 x1): K = 1 - x^2
  PointSet x01 = x0;
  x01.set(1);
  CHECK(squarefree_k_polynomial({x01}) == hv({1, 0, -1}));
  // (x0, x1): K = (1 - x)^2
  PointSet x1;
  x1.set(1);
  CHECK(squarefree_k_polynomial({x0, x1}) == hv({1, -2, 1}));
  CHECK(squarefree_k_polynomial({}) == hv({1}));
  CHECK(minimalize({x01, x0}) == std::vector<PointSet>{x0});
  CHECK(divide_by_one_minus_x_power(hv({1, -2, 1}), 2) == hv({1}));
  CHECK_THROWS_AS((divide_by_one_minus_x_power(hv({1, 1}), 1)), Error);
}
