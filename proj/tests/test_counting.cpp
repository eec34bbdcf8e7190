#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "secant/complex.hpp"
#include "secant/counting.hpp"
#include "secant/errors.hpp"

using namespace secant;

namespace {

BigInt factorial(long n) {
  BigInt r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

// Leibniz expansion, independent of elimination.
BigInt permutation_determinant(const std::vector<BigInt>& m, std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  BigInt total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    BigInt term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= m[i * n + perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

TEST_CASE("binomial") {
  CHECK(binomial(3, 1) == 3);
  CHECK(binomial(7, 0) == 1);
  CHECK(binomial(11, 5) == 462);
  CHECK(binomial(11, 5) == factorial(11) / (factorial(5) * factorial(6)));
  CHECK(binomial(3, 4) == 0);
  CHECK(binomial(-1, 0) == 0);
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(BigInt(60), BigInt(30)) == BigInt("118264581564861424"));
}

TEST_CASE("Bareiss determinant matches the permutation expansion") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    std::vector<BigInt> m(n * n);
    for (auto& x : m) x = static_cast<long>(rng() % 21) - 10;
    if (trial % 5 == 0 && n > 1)
      for (std::size_t j = 0; j < n; ++j) m[n + j] = m[j] * 3;  // singular
    CHECK(bareiss_determinant(m, n) == permutation_determinant(m, n));
  }
  CHECK(bareiss_determinant({}, 0) == 1);
}

TEST_CASE("Gessel-Viennot matrix entries") {
  const SegreParams p{3, 3, 2};
  const auto g = gv_matrix(p, {1, 3});
  REQUIRE(g.size() == 4);
  CHECK(g[0] == 10);
  CHECK(g[1] == 3);
  CHECK(g[2] == 21);
  CHECK(g[3] == 10);
  CHECK(gv_determinant(p, {1, 2}) == 10);
  CHECK(gv_determinant(p, {1, 3}) == 37);
}

TEST_CASE("non-intersecting path counts") {
  CHECK(count_nonintersecting({3, 3, 2}, {1, 2}) == 10);
  CHECK(count_nonintersecting({3, 3, 2}, {1, 3}) == 37);
  for (int h = 1; h <= 4; ++h) CHECK(count_nonintersecting({3, 4, 1}, {h}) == binomial(6, 2));
  CHECK_THROWS_AS((count_nonintersecting({3, 3, 2}, {2, 2})), ValidationError);
}

TEST_CASE("degree examples") {
  CHECK(degree({2, 2, 1}) == 6);
  CHECK(degree({3, 3, 2}) == 57);
  CHECK(degree({4, 4, 2}) == 1830);
  CHECK(degree({6, 6, 3}) == 28206234);
  CHECK_THROWS_AS((degree({3, 5, 3})), UnsupportedRegimeError);
  CHECK_THROWS_AS((degree({3, 3, std::nullopt})), ValidationError);
}

TEST_CASE("degree equals the facet count") {
  for (int a = 2; a <= 4; ++a)
    for (int b = a; b <= 5; ++b)
      for (int t = 1; t < a; ++t) {
        const SegreParams p{a, b, t};
        const BigInt brute = brute_force_degree(p);
        CHECK(degree(p) == brute);
        CHECK(brute_force_degree(p, 3) == brute);
        CHECK(BigInt(static_cast<unsigned long>(count_facet_tuples(p))) == brute);
        BigInt sum = 0;
        for (const auto& term : degree_terms(p)) {
          CHECK(term.determinant >= 0);
          CHECK(term.determinant == count_nonintersecting(p, term.h));
          sum += term.determinant;
        }
        CHECK(sum == brute);
      }
}

TEST_CASE("t = 1 gives the Segre degree") {
  for (int a = 2; a <= 8; ++a)
    for (int b = a; b <= 8; ++b) {
      CHECK(degree({a, b, 1}) == factorial(a + b - 2) / (factorial(a - 1) * factorial(b - 1)) * (a + b - 1));
      CHECK(degree({a, b, 1}) == segre_degree(a, b));
    }
}

TEST_CASE("dimension") {
  CHECK(dimension({2, 2, 1}).dimension == 4);
  CHECK(dimension({6, 6, 3}).dimension == 36);
  CHECK(dimension({6, 6, 3}).codimension == 36);
  CHECK(dimension({3, 3, 2}).dimension == 12);
  CHECK(dimension({3, 3, 2}).codimension == 6);
}
