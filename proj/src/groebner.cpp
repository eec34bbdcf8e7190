#include "secant/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

#include "secant/errors.hpp"

namespace secant {

SymbolicUnfolding symbolic_unfolding(int a, int b, UnfoldingKind kind) {
  SymbolicUnfolding m;
  m.kind = kind;
  if (kind == UnfoldingKind::second) {
    m.rows = a;
    m.cols = 2 * b;
    for (int i = 1; i <= a; ++i)
      for (int c = 1; c <= 2 * b; ++c)
        m.entries.push_back(c <= b ? VariableId{1, i, c} : VariableId{2, i, c - b});
  } else {
    m.rows = b;
    m.cols = 2 * a;
    for (int j = 1; j <= b; ++j)
      for (int c = 1; c <= 2 * a; ++c)
        m.entries.push_back(c <= a ? VariableId{1, c, j} : VariableId{2, c - a, j});
  }
  return m;
}

namespace {

std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  std::iota(cur.begin(), cur.end(), 0);
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

int permutation_sign(const std::vector<int>& perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inversions;
  return inversions % 2 ? -1 : 1;
}

}  // namespace

Polynomial minor_polynomial(const Ring& ring, const SymbolicUnfolding& m, const std::vector<int>& rows,
                            const std::vector<int>& cols) {
  if (rows.size() != cols.size()) throw ValidationError("minor needs as many rows as columns");
  std::vector<int> perm(rows.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Term> terms;
  do {
    std::vector<VariableId> factors;
    factors.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      factors.push_back(m.at(rows[i], cols[static_cast<std::size_t>(perm[i])]));
    terms.push_back({ring.monomial(factors), Scalar(permutation_sign(perm))});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Polynomial(std::move(terms), ring.field());
}

Monomial diagonal_monomial(const Ring& ring, const SymbolicUnfolding& m, const std::vector<int>& rows,
                           const std::vector<int>& cols) {
  std::vector<VariableId> factors;
  for (std::size_t i = 0; i < rows.size(); ++i) factors.push_back(m.at(rows[i], cols[i]));
  return ring.monomial(factors);
}

std::vector<Polynomial> unfolding_minors(const Ring& ring, UnfoldingKind kind, int s) {
  const auto m = symbolic_unfolding(ring.a(), ring.b(), kind);
  std::vector<Polynomial> out;
  if (s < 1 || s > std::min(m.rows, m.cols)) return out;
  const auto row_sets = combinations(m.rows, s);
  const auto col_sets = combinations(m.cols, s);
  for (const auto& r : row_sets)
    for (const auto& c : col_sets) out.push_back(minor_polynomial(ring, m, r, c).monic(ring.field()));
  return out;
}

std::vector<Polynomial> all_unfolding_minors(const Ring& ring, int s) {
  auto out = unfolding_minors(ring, UnfoldingKind::second, s);
  std::set<std::vector<std::tuple<Monomial, std::string>>> seen;
  auto key = [](const Polynomial& p) {
    std::vector<std::tuple<Monomial, std::string>> k;
    for (const auto& t : p.terms()) k.emplace_back(t.monomial, t.coeff.get_str());
    return k;
  };
  for (const auto& p : out) seen.insert(key(p));
  for (auto& p : unfolding_minors(ring, UnfoldingKind::third, s))
    if (seen.insert(key(p)).second) out.push_back(std::move(p));
  return out;
}

Polynomial hibi_relation(const Ring& ring, const LatticeElement& alpha, const LatticeElement& beta) {
  const auto [meet, join] = lattice_meet_join(alpha, beta);
  auto var = [](const LatticeElement& e) { return VariableId{e.i, e.j, e.k}; };
  const Field& f = ring.field();
  std::vector<Term> terms{{ring.monomial({var(alpha), var(beta)}), Scalar(1)},
                          {ring.monomial({var(meet), var(join)}), Scalar(-1)}};
  return Polynomial(std::move(terms), f);
}

std::vector<Polynomial> hibi_generators(const Ring& ring) {
  std::vector<LatticeElement> elems;
  for (int idx = 0; idx < ring.num_variables(); ++idx) {
    const auto v = ring.variable(idx);
    elems.push_back({v.slice, v.second, v.third});
  }
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (!lattice_leq(elems[i], elems[j]) && !lattice_leq(elems[j], elems[i]))
        out.push_back(hibi_relation(ring, elems[i], elems[j]));
  return out;
}

Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& g, const Field& field) {
  Polynomial p = f;
  std::vector<Term> remainder;
  while (!p.is_zero()) {
    const Term lead = p.leading();
    const Polynomial* divisor = nullptr;
    for (const auto& q : g)
      if (!q.is_zero() && q.leading_monomial().divides(lead.monomial)) {
        divisor = &q;
        break;
      }
    if (divisor) {
      p = p.sub_multiple(field.div(lead.coeff, divisor->leading().coeff),
                         lead.monomial / divisor->leading_monomial(), *divisor, field);
    } else {
      remainder.push_back(lead);
      p = p.sub(Polynomial::monomial(lead.monomial, lead.coeff, field), field);
    }
  }
  return Polynomial(std::move(remainder), field);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const Field& field) {
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial left = Polynomial::monomial(l / f.leading_monomial(), field.inv(f.leading().coeff), field).mul(f, field);
  return left.sub_multiple(field.inv(g.leading().coeff), l / g.leading_monomial(), g, field);
}

namespace {

void check_input_budget(const std::vector<Polynomial>& g, const GroebnerBudget& budget) {
  if (g.size() > budget.max_generators)
    throw BudgetExceededError(std::to_string(g.size()) + " generators exceed the cap of " +
                              std::to_string(budget.max_generators));
  for (const auto& p : g)
    for (const auto& t : p.terms())
      for (int v : t.monomial.support())
        if (v >= budget.max_variables)
          throw BudgetExceededError("polynomial uses variable " + std::to_string(v) + " beyond the cap of " +
                                    std::to_string(budget.max_variables));
}

}  // namespace

GroebnerCheck is_groebner(const std::vector<Polynomial>& g, const Field& field, const GroebnerBudget& budget) {
  check_input_budget(g, budget);
  GroebnerCheck check;
  for (std::size_t j = 0; j < g.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (g[i].is_zero() || g[j].is_zero()) continue;
      if (g[i].leading_monomial().coprime(g[j].leading_monomial())) {
        ++check.spairs_skipped;
        continue;
      }
      if (check.spairs_checked >= budget.max_spairs)
        throw BudgetExceededError("S-pair budget of " + std::to_string(budget.max_spairs) + " exhausted after " +
                                  std::to_string(check.spairs_checked) + " reductions");
      ++check.spairs_checked;
      Polynomial r = reduce(s_polynomial(g[i], g[j], field), g, field);
      if (!r.is_zero()) {
        check.ok = false;
        check.failing_pair = std::make_pair(i, j);
        check.failing_remainder = std::move(r);
        return check;
      }
    }
  }
  return check;
}

namespace {

struct PairKey {
  int degree;
  Monomial lcm;
  std::size_t i;
  std::size_t j;
  friend bool operator<(const PairKey& l, const PairKey& r) {
    return std::tie(l.degree, l.lcm, l.i, l.j) < std::tie(r.degree, r.lcm, r.i, r.j);
  }
};

}  // namespace

GroebnerBasis buchberger(const std::vector<Polynomial>& input, const Field& field, const GroebnerBudget& budget,
                         BuchbergerStats* stats) {
  check_input_budget(input, budget);
  BuchbergerStats local;
  BuchbergerStats& st = stats ? *stats : local;

  std::vector<Polynomial> basis;
  for (const auto& p : input)
    if (!p.is_zero()) basis.push_back(p.monic(field));

  std::set<PairKey> queue;
  auto add_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      const Monomial& li = basis[i].leading_monomial();
      const Monomial& lj = basis[j].leading_monomial();
      if (li.coprime(lj)) {
        ++st.spairs_skipped;
        continue;
      }
      const Monomial l = lcm(li, lj);
      queue.insert({l.degree(), l, i, j});
    }
    st.max_queue = std::max(st.max_queue, queue.size());
  };
  for (std::size_t j = 0; j < basis.size(); ++j) add_pairs(j);

  while (!queue.empty()) {
    const PairKey pk = *queue.begin();
    queue.erase(queue.begin());
    if (st.spairs_processed >= budget.max_spairs)
      throw BudgetExceededError("Buchberger S-pair budget of " + std::to_string(budget.max_spairs) +
                                " exhausted: basis size " + std::to_string(basis.size()) + ", queue " +
                                std::to_string(queue.size()) + ", added " + std::to_string(st.basis_elements_added));
    ++st.spairs_processed;
    Polynomial r = reduce(s_polynomial(basis[pk.i], basis[pk.j], field), basis, field);
    if (r.is_zero()) continue;
    basis.push_back(r.monic(field));
    ++st.basis_elements_added;
    if (basis.size() > budget.max_generators)
      throw BudgetExceededError("Buchberger basis grew past " + std::to_string(budget.max_generators) + " elements");
    add_pairs(basis.size() - 1);
  }

  // Minimal basis: drop elements whose leading monomial is divisible by an
  // earlier-kept or another element's leading monomial.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& li = basis[i].leading_monomial();
      const Monomial& lj = basis[j].leading_monomial();
      if (lj.divides(li) && (lj != li || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    reduced.push_back(reduce(minimal[i], others, field).monic(field));
  }
  std::sort(reduced.begin(), reduced.end(),
            [](const Polynomial& l, const Polynomial& r) { return l.leading_monomial() > r.leading_monomial(); });
  return GroebnerBasis(std::move(reduced), field);
}

GroebnerBasis GroebnerBasis::certify(std::vector<Polynomial> g, const Field& field, const GroebnerBudget& budget) {
  const auto check = is_groebner(g, field, budget);
  if (!check.ok)
    throw ValidationError("refusing uncertified input: S-pair (" + std::to_string(check.failing_pair->first) + ", " +
                          std::to_string(check.failing_pair->second) + ") has a nonzero remainder");
  return GroebnerBasis(std::move(g), field);
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& p : polys_)
    if (!p.is_zero()) out.push_back(p.leading_monomial());
  return out;
}

MonomialIdeal::MonomialIdeal(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& l, const Monomial& r) {
    const int dl = l.degree(), dr = r.degree();
    return dl != dr ? dl < dr : l > r;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (const auto& m : gens) {
    bool redundant = false;
    for (const auto& k : gens_)
      if (k.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) gens_.push_back(m);
  }
  std::sort(gens_.begin(), gens_.end(), std::greater<>());
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
}

MonomialIdeal initial_ideal(const GroebnerBasis& g) { return MonomialIdeal(g.leading_monomials()); }

MonomialIdeal chain_ideal(const Ring& ring, int len) {
  const Poset poset(ring.a(), ring.b());
  std::vector<Monomial> gens;
  for (const auto& chain : poset.enumerate_chains(len)) {
    std::vector<VariableId> vars;
    for (const auto& p : chain) vars.push_back(to_variable(p, ring.b()));
    gens.push_back(ring.monomial(vars));
  }
  return MonomialIdeal(std::move(gens));
}

}  // namespace secant
