#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "secant/poset.hpp"
#include "secant/polynomial.hpp"

namespace secant {

enum class UnfoldingKind { second, third };

// Matrix of variables. second: a x 2b, [X | Y]; third: b x 2a, [X^T | Y^T].
struct SymbolicUnfolding {
  UnfoldingKind kind = UnfoldingKind::second;
  int rows = 0;
  int cols = 0;
  std::vector<VariableId> entries;  // row-major

  const VariableId& at(int r, int c) const { return entries[static_cast<std::size_t>(r * cols + c)]; }
};

SymbolicUnfolding symbolic_unfolding(int a, int b, UnfoldingKind kind);

struct Minor {
  UnfoldingKind kind = UnfoldingKind::second;
  std::vector<int> rows;  // 0-based
  std::vector<int> cols;
};

// Determinant of the submatrix as a polynomial (permutation expansion, ±1
// coefficients, not normalized).
Polynomial minor_polynomial(const Ring& ring, const SymbolicUnfolding& m, const std::vector<int>& rows,
                            const std::vector<int>& cols);

// Product of the diagonal entries of the submatrix.
Monomial diagonal_monomial(const Ring& ring, const SymbolicUnfolding& m, const std::vector<int>& rows,
                           const std::vector<int>& cols);

// All s-minors of one unfolding, monic, in lexicographic order of (rows, cols).
// Empty when s exceeds a matrix dimension.
std::vector<Polynomial> unfolding_minors(const Ring& ring, UnfoldingKind kind, int s);

// s-minors of both unfoldings with duplicates (X- or Y-block minors shared by
// both unfoldings) kept once: the second unfolding's list followed by the
// third unfolding's minors not already present.
std::vector<Polynomial> all_unfolding_minors(const Ring& ring, int s);

// x_alpha x_beta - x_{alpha ^ beta} x_{alpha v beta} over incomparable pairs of
// [2] x [a] x [b], each unordered pair once, alpha before beta in variable order.
std::vector<Polynomial> hibi_generators(const Ring& ring);

Polynomial hibi_relation(const Ring& ring, const LatticeElement& alpha, const LatticeElement& beta);

// Full normal form; divisor = first element of G whose leading monomial
// divides the current term.
Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& g, const Field& field);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const Field& field);

struct GroebnerBudget {
  int max_variables = kMaxVariables;
  std::size_t max_generators = 5000;
  std::size_t max_spairs = 1'000'000;
};

struct GroebnerCheck {
  bool ok = true;
  std::size_t spairs_checked = 0;   // S-polynomials reduced
  std::size_t spairs_skipped = 0;   // coprime leading monomials
  std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
  Polynomial failing_remainder;
};

// Buchberger's criterion. Stops at the first S-pair with nonzero remainder.
GroebnerCheck is_groebner(const std::vector<Polynomial>& g, const Field& field, const GroebnerBudget& budget = {});

struct BuchbergerStats {
  std::size_t spairs_processed = 0;
  std::size_t spairs_skipped = 0;
  std::size_t basis_elements_added = 0;
  std::size_t max_queue = 0;
};

class GroebnerBasis;

// Reduced Gröbner basis, sorted by decreasing leading monomial. Pairs are
// selected by smallest lcm degree, then smallest lcm, then index.
GroebnerBasis buchberger(const std::vector<Polynomial>& g, const Field& field, const GroebnerBudget& budget = {},
                         BuchbergerStats* stats = nullptr);

// A polynomial list known to satisfy Buchberger's criterion. Only obtainable
// from buchberger() or certify().
class GroebnerBasis {
 public:
  // ValidationError when `g` fails the criterion.
  static GroebnerBasis certify(std::vector<Polynomial> g, const Field& field, const GroebnerBudget& budget = {});

  const std::vector<Polynomial>& polynomials() const { return polys_; }
  const Field& field() const { return field_; }
  std::vector<Monomial> leading_monomials() const;

 private:
  GroebnerBasis(std::vector<Polynomial> g, Field field) : polys_(std::move(g)), field_(field) {}
  friend GroebnerBasis buchberger(const std::vector<Polynomial>&, const Field&, const GroebnerBudget&,
                                  BuchbergerStats*);

  std::vector<Polynomial> polys_;
  Field field_;
};

// Minimal generators, sorted by decreasing monomial.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  explicit MonomialIdeal(std::vector<Monomial> gens);

  const std::vector<Monomial>& generators() const { return gens_; }
  bool contains(const Monomial& m) const;
  bool is_squarefree() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::vector<Monomial> gens_;
};

MonomialIdeal initial_ideal(const GroebnerBasis& g);

// Monomials x_{p_1} ... x_{p_len} of the len-chains of P: the generators of J_t
// for len = t+1.
MonomialIdeal chain_ideal(const Ring& ring, int len);

}  // namespace secant
