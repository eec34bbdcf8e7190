#pragma once

#include <cstddef>
#include <vector>

#include "secant/counting.hpp"
#include "secant/point_set.hpp"
#include "secant/poset.hpp"

namespace secant {

// Univariate polynomial with big-integer coefficients, constant term first.
using IntPolynomial = std::vector<BigInt>;

IntPolynomial poly_mul(const IntPolynomial& l, const IntPolynomial& r);
IntPolynomial poly_add(const IntPolynomial& l, const IntPolynomial& r);
void poly_trim(IntPolynomial& p);
BigInt poly_eval_at_one(const IntPolynomial& p);

// Exact division by (1 - x)^k. Throws Error when the remainder is nonzero.
IntPolynomial divide_by_one_minus_x_power(IntPolynomial p, int k);

struct MonomialHilbertOptions {
  std::size_t max_memo_entries = 5'000'000;
};

struct MonomialHilbertStats {
  std::size_t calls = 0;
  std::size_t memo_hits = 0;
  std::size_t memo_entries = 0;
};

// K-polynomial of R/I for a squarefree monomial ideal given by its generators
// (each a set of variables): HS(R/I) = K(x) / (1-x)^n in n variables.
// Pivots on the most frequent variable of the minimal generators and memoizes
// on the canonical generator set. BudgetExceededError past max_memo_entries.
IntPolynomial squarefree_k_polynomial(std::vector<PointSet> generators,
                                      const MonomialHilbertOptions& options = {},
                                      MonomialHilbertStats* stats = nullptr);

// Removes generators that are supersets of other generators; sorted result.
std::vector<PointSet> minimalize(std::vector<PointSet> generators);

// Squarefree monomials of the (len)-chains of P, as point sets.
std::vector<PointSet> chain_ideal_generators(const Poset& poset, int len);

}  // namespace secant
