#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "secant/poset.hpp"

namespace secant {

using BigInt = mpz_class;

// C(n, k), and 0 when k < 0, n < 0 or k > n.
BigInt binomial(const BigInt& n, const BigInt& k);
BigInt binomial(long n, long k);

// Determinant of a square integer matrix by fraction-free (Bareiss)
// elimination. Row-major storage.
BigInt bareiss_determinant(std::vector<BigInt> m, std::size_t n);

// Single-path counts between the sources (1, b+h_i) and sinks (a, h_j):
// entry (i, j) = C(a+b-h_j+h_i-1, a-1).
std::vector<BigInt> gv_matrix(const SegreParams& params, const std::vector<int>& h);

BigInt gv_determinant(const SegreParams& params, const std::vector<int>& h);

struct TupleDeterminant {
  std::vector<int> h;
  BigInt determinant;
};

// Sum of the determinants over all h-tuples: the multiplicity of the
// secant ring and the number of facets of the associated complex.
BigInt degree(const SegreParams& params);
std::vector<TupleDeterminant> degree_terms(const SegreParams& params);

// Counts vertex-disjoint path tuples for one h-tuple by enumeration.
BigInt count_nonintersecting(const SegreParams& params, const std::vector<int>& h);

// Sum of count_nonintersecting over all h-tuples, spread over `jobs` threads.
BigInt brute_force_degree(const SegreParams& params, unsigned jobs = 1);

struct Dimensions {
  int dimension = 0;    // (a+b)t
  int codimension = 0;  // 2ab - (a+b)t
};

Dimensions dimension(const SegreParams& params);

// (a+b-1)! / ((a-1)! (b-1)!), the degree of the Segre variety itself.
BigInt segre_degree(int a, int b);

}  // namespace secant
