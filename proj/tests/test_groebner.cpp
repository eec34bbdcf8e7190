#include <doctest.h>

#include <set>

#include "secant/errors.hpp"
#include "secant/groebner.hpp"

using namespace secant;

namespace {

const Field Q = Field::rationals();

Polynomial poly(const Ring& r, std::vector<std::pair<std::vector<VariableId>, long>> terms) {
  std::vector<Term> out;
  for (auto& [vars, c] : terms) out.push_back({r.monomial(vars), Scalar(c)});
  return Polynomial(std::move(out), r.field());
}

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) != k) continue;
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(i);
    out.push_back(s);
  }
  return out;
}

}  // namespace

TEST_CASE("fields") {
  const auto f5 = Field::prime(5);
  CHECK(f5.characteristic() == 5);
  CHECK(f5.name() == "F_5");
  CHECK(f5.normalize(Scalar(-1)) == 4);
  CHECK(f5.normalize(Scalar(1, 2)) == 3);
  CHECK(f5.mul(3, f5.inv(3)) == 1);
  CHECK(Field::parse("F2") == Field::prime(2));
  CHECK(Field::parse("q").is_rational());
  CHECK_THROWS_AS(Field::prime(4), ValidationError);
  CHECK_THROWS_AS(Field::parse("f9"), ValidationError);
  CHECK_THROWS_AS(Field::parse("r"), ValidationError);
  CHECK_THROWS_AS(Q.inv(0), Error);
}

TEST_CASE("ring and term order") {
  const Ring r = build_ring({2, 2, std::nullopt}, Q);
  CHECK(r.num_variables() == 8);
  CHECK(r.monomial({{1, 1, 1}}) > r.monomial({{1, 1, 2}}));
  CHECK(r.monomial({{1, 2, 2}}) > r.monomial({{2, 1, 1}}));
  CHECK(r.name(0) == "x111");
  CHECK(r.name(7) == "x222");
  const auto m = symbolic_unfolding(2, 2, UnfoldingKind::second);
  const auto minor = minor_polynomial(r, m, {0, 1}, {0, 1});
  CHECK(minor.leading_monomial() == r.monomial({{1, 1, 1}, {1, 2, 2}}));
  CHECK(r.to_string(minor) == "x111*x122 - x112*x121");
  CHECK_THROWS_AS(Ring(6, 7, Q), BudgetExceededError);
  CHECK_THROWS_AS(r.monomial({{1, 3, 1}}), ValidationError);
}

TEST_CASE("polynomial arithmetic") {
  const Ring r(2, 2, Field::prime(3));
  const auto x = r.var({1, 1, 1});
  const auto y = r.var({2, 2, 2});
  const auto f = x.add(y, r.field());
  CHECK(f.size() == 2);
  CHECK(f.sub(f, r.field()).is_zero());
  // (x + y)^3 = x^3 + y^3 in characteristic 3
  const auto cube = f.mul(f, r.field()).mul(f, r.field());
  CHECK(cube.size() == 2);
  CHECK(f.scale(3, r.field()).is_zero());
  CHECK(Polynomial::constant(5, r.field()) == Polynomial::constant(2, r.field()));
  CHECK(f.scale(2, r.field()).monic(r.field()) == f);
}

TEST_CASE("symbolic unfoldings follow the block layout") {
  const auto s = symbolic_unfolding(3, 3, UnfoldingKind::second);
  CHECK(s.rows == 3);
  CHECK(s.cols == 6);
  CHECK(s.at(0, 0) == VariableId{1, 1, 1});
  CHECK(s.at(0, 3) == VariableId{2, 1, 1});
  CHECK(s.at(2, 5) == VariableId{2, 3, 3});
  const auto t = symbolic_unfolding(2, 3, UnfoldingKind::third);
  CHECK(t.rows == 3);
  CHECK(t.cols == 4);
  CHECK(t.at(2, 0) == VariableId{1, 1, 3});
  CHECK(t.at(0, 3) == VariableId{2, 2, 1});
}

TEST_CASE("minor counts") {
  const Ring r(2, 2, Q);
  CHECK(unfolding_minors(r, UnfoldingKind::second, 2).size() == 6);
  CHECK(unfolding_minors(r, UnfoldingKind::third, 2).size() == 6);
  CHECK(all_unfolding_minors(r, 2).size() == 10);
  CHECK(unfolding_minors(r, UnfoldingKind::second, 3).empty());
  CHECK(all_unfolding_minors(r, 3).empty());
  CHECK(all_unfolding_minors(Ring(3, 3, Q), 3).size() == 38);
  for (const auto& p : all_unfolding_minors(Ring(3, 4, Q), 2)) CHECK(p.leading().coeff == 1);
}

TEST_CASE("the term order is diagonal") {
  for (int a = 2; a <= 4; ++a)
    for (int b = a; b <= 4; ++b) {
      const Ring r(a, b, Q);
      const Poset poset(a, b);
      for (auto kind : {UnfoldingKind::second, UnfoldingKind::third}) {
        const auto m = symbolic_unfolding(a, b, kind);
        for (int s = 1; s <= std::min(m.rows, m.cols); ++s) {
          const auto cols = subsets(m.cols, s);
          for (const auto& rows : subsets(m.rows, s))
            for (const auto& c : cols) {
              const auto p = minor_polynomial(r, m, rows, c);
              REQUIRE(p.leading_monomial() == diagonal_monomial(r, m, rows, c));
              // the diagonal is a chain of P
              std::vector<GridPoint> pts;
              for (std::size_t i = 0; i < rows.size(); ++i) pts.push_back(to_grid_point(m.at(rows[i], c[i]), b));
              REQUIRE(poset.longest_chain(pts) == s);
            }
        }
      }
    }
}

TEST_CASE("comparable pairs are exactly the 2-minor diagonals") {
  for (int a = 2; a <= 4; ++a)
    for (int b = a; b <= 4; ++b) {
      const Ring r(a, b, Q);
      const Poset poset(a, b);
      std::set<Monomial> diagonals;
      for (const auto& p : all_unfolding_minors(r, 2)) diagonals.insert(p.leading_monomial());
      std::set<Monomial> chains;
      for (const auto& c : poset.enumerate_chains(2))
        chains.insert(r.monomial({to_variable(c[0], b), to_variable(c[1], b)}));
      CHECK(diagonals == chains);
    }
}

TEST_CASE("Hibi generators") {
  const Ring r(2, 4, Q);
  const auto rel = hibi_relation(r, {2, 1, 3}, {1, 2, 4});
  CHECK(rel == poly(r, {{{{2, 1, 3}, {1, 2, 4}}, 1}, {{{1, 1, 3}, {2, 2, 4}}, -1}}));
  // one 2-minor of each unfolding add up to it
  bool found = false;
  for (const auto& m2 : unfolding_minors(r, UnfoldingKind::second, 2))
    for (const auto& m3 : unfolding_minors(r, UnfoldingKind::third, 2))
      for (int s2 : {-1, 1})
        for (int s3 : {-1, 1})
          if (m2.scale(s2, Q).add(m3.scale(s3, Q), Q) == rel) found = true;
  CHECK(found);
  // comparable pairs give nothing; count of incomparable pairs for (2,2)
  const Ring r22(2, 2, Q);
  const auto gens = hibi_generators(r22);
  CHECK(gens.size() == 9);
  for (const auto& g : gens) CHECK(g.size() == 2);
  CHECK(hibi_generators(Ring(2, 3, Q)).size() == 24);
}

TEST_CASE("reduction") {
  const Ring r(2, 4, Q);
  const auto minors = all_unfolding_minors(r, 2);
  CHECK(reduce(minors[3], minors, Q).is_zero());
  CHECK(reduce(hibi_relation(r, {2, 1, 3}, {1, 2, 4}), minors, Q).is_zero());
  const auto standard = Polynomial::monomial(r.monomial({{1, 1, 4}, {1, 2, 3}}), 1, Q);
  CHECK(reduce(standard, minors, Q) == standard);
  const auto x = Polynomial::monomial(r.monomial({{1, 1, 1}}), 2, Q);
  CHECK(reduce(x, {}, Q) == x);
}

TEST_CASE("Groebner certification of the minors") {
  for (auto [a, b] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 3}, {2, 4}, {3, 4}}) {
    const Ring r(a, b, Q);
    const auto check = is_groebner(all_unfolding_minors(r, 2), Q);
    CHECK(check.ok);
    CHECK(check.spairs_checked > 0);
  }
  const Ring r(3, 3, Q);
  CHECK(is_groebner(all_unfolding_minors(r, 3), Q).ok);
  // regression: the Hibi generators alone are not a Groebner basis here
  const auto hibi = is_groebner(hibi_generators(Ring(2, 2, Q)), Q);
  CHECK_FALSE(hibi.ok);
  REQUIRE(hibi.failing_pair);
  CHECK_FALSE(hibi.failing_remainder.is_zero());
}

TEST_CASE("initial ideal is the chain ideal") {
  for (int a = 2; a <= 4; ++a)
    for (int b = a; b <= 4; ++b)
      for (int t = 1; t < a; ++t) {
        const Ring r(a, b, Q);
        const auto minors = all_unfolding_minors(r, t + 1);
        const auto g = GroebnerBasis::certify(minors, Q);
        const auto ini = initial_ideal(g);
        CHECK(ini == chain_ideal(r, t + 1));
        CHECK(ini.is_squarefree());
        CHECK(ini.generators().size() == Poset(a, b).enumerate_chains(t + 1).size());
      }
  CHECK(initial_ideal(GroebnerBasis::certify(all_unfolding_minors(Ring(2, 3, Q), 2), Q)).generators().size() == 24);
  CHECK_THROWS_AS(GroebnerBasis::certify(hibi_generators(Ring(2, 2, Q)), Q), ValidationError);
}

TEST_CASE("Buchberger completion") {
  const Ring r(2, 2, Q);
  const auto minors = all_unfolding_minors(r, 2);
  BuchbergerStats stats;
  const auto g = buchberger(minors, Q, {}, &stats);
  CHECK(stats.basis_elements_added == 0);
  CHECK(buchberger(g.polynomials(), Q).polynomials() == g.polynomials());
  CHECK(is_groebner(g.polynomials(), Q).ok);
  const auto lead = g.leading_monomials();
  for (std::size_t i = 1; i < lead.size(); ++i) CHECK(lead[i - 1] > lead[i]);
  // Hibi generators complete to the same reduced basis
  CHECK(buchberger(hibi_generators(r), Q).polynomials() == g.polynomials());
  const Ring r23(2, 3, Q);
  CHECK(buchberger(hibi_generators(r23), Q).polynomials() == buchberger(all_unfolding_minors(r23, 2), Q).polynomials());
}

TEST_CASE("field independence") {
  for (const auto& p : std::vector<SegreParams>{{2, 3, 1}, {3, 3, 2}, {3, 4, 1}}) {
    std::vector<MonomialIdeal> ideals;
    for (const auto* name : {"q", "f2", "f3", "f7"}) {
      const Ring r(p.a, p.b, Field::parse(name));
      ideals.push_back(initial_ideal(buchberger(all_unfolding_minors(r, *p.t + 1), r.field())));
    }
    for (const auto& ini : ideals) CHECK(ini == ideals.front());
  }
}

TEST_CASE("budgets") {
  const Ring r(3, 3, Q);
  GroebnerBudget tight;
  tight.max_spairs = 5;
  CHECK_THROWS_AS(is_groebner(all_unfolding_minors(r, 2), Q, tight), BudgetExceededError);
  CHECK_THROWS_AS(buchberger(hibi_generators(r), Q, tight), BudgetExceededError);
  GroebnerBudget few;
  few.max_generators = 10;
  CHECK_THROWS_AS(is_groebner(all_unfolding_minors(r, 2), Q, few), BudgetExceededError);
  GroebnerBudget narrow;
  narrow.max_variables = 4;
  CHECK_THROWS_AS(is_groebner(all_unfolding_minors(r, 2), Q, narrow), BudgetExceededError);
}

TEST_CASE("monomial ideals") {
  const Ring r(2, 2, Q);
  const auto x = r.monomial({{1, 1, 1}});
  const auto xy = r.monomial({{1, 1, 1}, {1, 2, 2}});
  const auto y2 = r.monomial({{1, 2, 2}, {1, 2, 2}});
  const MonomialIdeal ideal({xy, x, y2, x});
  CHECK(ideal.generators().size() == 2);
  CHECK(ideal.contains(xy));
  CHECK_FALSE(ideal.contains(r.monomial({{1, 2, 2}})));
  CHECK_FALSE(ideal.is_squarefree());
}
