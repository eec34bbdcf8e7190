#include "secant/counting.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <thread>
#include <utility>

#include "secant/complex.hpp"
#include "secant/errors.hpp"

namespace secant {

BigInt binomial(const BigInt& n, const BigInt& k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), k.get_ui());
  return out;
}

BigInt binomial(long n, long k) { return binomial(BigInt(n), BigInt(k)); }

BigInt bareiss_determinant(std::vector<BigInt> m, std::size_t n) {
  if (n == 0) return 1;
  auto at = [&](std::size_t r, std::size_t c) -> BigInt& { return m[r * n + c]; };
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    for (std::size_t r = k + 1; r < n; ++r)
      if (abs(at(r, k)) > abs(at(piv, k))) piv = r;
    if (at(piv, k) == 0) return 0;
    if (piv != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(at(k, c), at(piv, c));
      sign = -sign;
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      for (std::size_t c = k + 1; c < n; ++c) {
        at(r, c) = at(r, c) * at(k, k) - at(r, k) * at(k, c);
        mpz_divexact(at(r, c).get_mpz_t(), at(r, c).get_mpz_t(), prev.get_mpz_t());
      }
      at(r, k) = 0;
    }
    prev = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

std::vector<BigInt> gv_matrix(const SegreParams& params, const std::vector<int>& h) {
  const std::size_t t = h.size();
  std::vector<BigInt> m(t * t);
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < t; ++j)
      m[i * t + j] = binomial(params.a + params.b - h[j] + h[i] - 1, params.a - 1);
  return m;
}

BigInt gv_determinant(const SegreParams& params, const std::vector<int>& h) {
  return bareiss_determinant(gv_matrix(params, h), h.size());
}

std::vector<TupleDeterminant> degree_terms(const SegreParams& params) {
  params.require_secant_regime();
  std::vector<TupleDeterminant> out;
  for (auto& hs : h_tuples(params.b, params.secant())) {
    BigInt d = gv_determinant(params, hs);
    out.push_back({std::move(hs), std::move(d)});
  }
  return out;
}

BigInt degree(const SegreParams& params) {
  BigInt sum = 0;
  for (const auto& term : degree_terms(params)) sum += term.determinant;
  return sum;
}

BigInt count_nonintersecting(const SegreParams& params, const std::vector<int>& h) {
  SegreParams p = params;
  p.t = static_cast<int>(h.size());
  std::uint64_t n = 0;
  enumerate_facets_for(p, h, [&](const Facet&) { ++n; });
  return BigInt(static_cast<unsigned long>(n));
}

BigInt brute_force_degree(const SegreParams& params, unsigned jobs) {
  params.require_secant_regime();
  const auto tuples = h_tuples(params.b, params.secant());
  std::vector<std::uint64_t> counts(tuples.size(), 0);
  const auto paths = enumerate_all_paths(params);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tuples.size(); i = next++) {
      // Inline disjoint-tuple count; avoids rebuilding the path table per tuple.
      const auto& hs = tuples[i];
      std::uint64_t n = 0;
      PointSet used;
      auto rec = [&](auto&& self, std::size_t depth) -> void {
        if (depth == hs.size()) {
          ++n;
          return;
        }
        for (const Path& p : paths[static_cast<std::size_t>(hs[depth])]) {
          if (p.mask.intersects(used)) continue;
          used |= p.mask;
          self(self, depth + 1);
          used -= p.mask;
        }
      };
      rec(rec, 0);
      counts[i] = n;
    }
  };
  jobs = std::max(1u, jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  BigInt sum = 0;
  for (auto c : counts) sum += BigInt(static_cast<unsigned long>(c));
  return sum;
}

Dimensions dimension(const SegreParams& params) {
  params.require_secant_regime();
  const int d = (params.a + params.b) * params.secant();
  return {d, 2 * params.a * params.b - d};
}

BigInt segre_degree(int a, int b) {
  BigInt num, d1, d2;
  mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(a + b - 1));
  mpz_fac_ui(d1.get_mpz_t(), static_cast<unsigned long>(a - 1));
  mpz_fac_ui(d2.get_mpz_t(), static_cast<unsigned long>(b - 1));
  return num / (d1 * d2);
}

}  // namespace secant
