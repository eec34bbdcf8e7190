#include "secant/hilbert.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <unordered_map>

#include "secant/errors.hpp"

namespace secant {

IntPolynomial poly_mul(const IntPolynomial& l, const IntPolynomial& r) {
  if (l.empty() || r.empty()) return {};
  IntPolynomial out(l.size() + r.size() - 1, 0);
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (l[i] == 0) continue;
    for (std::size_t j = 0; j < r.size(); ++j) out[i + j] += l[i] * r[j];
  }
  poly_trim(out);
  return out;
}

IntPolynomial poly_add(const IntPolynomial& l, const IntPolynomial& r) {
  IntPolynomial out(std::max(l.size(), r.size()), 0);
  for (std::size_t i = 0; i < l.size(); ++i) out[i] += l[i];
  for (std::size_t i = 0; i < r.size(); ++i) out[i] += r[i];
  poly_trim(out);
  return out;
}

void poly_trim(IntPolynomial& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

BigInt poly_eval_at_one(const IntPolynomial& p) {
  BigInt s = 0;
  for (const auto& c : p) s += c;
  return s;
}

IntPolynomial divide_by_one_minus_x_power(IntPolynomial p, int k) {
  for (int step = 0; step < k; ++step) {
    poly_trim(p);
    if (p.empty()) return p;
    // p = (1 - x) q  <=>  q_i = p_0 + ... + p_i, and the full sum vanishes.
    IntPolynomial q(p.size() - 1);
    BigInt acc = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      acc += p[i];
      q[i] = acc;
    }
    acc += p.back();
    if (acc != 0) throw Error("polynomial is not divisible by (1-x)^" + std::to_string(k));
    p = std::move(q);
  }
  poly_trim(p);
  return p;
}

std::vector<PointSet> minimalize(std::vector<PointSet> gens) {
  std::sort(gens.begin(), gens.end(),
            [](const PointSet& l, const PointSet& r) { return l.count() < r.count(); });
  std::vector<PointSet> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& m : out)
      if (m.subset_of(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct KeyHash {
  std::size_t operator()(const std::vector<PointSet>& v) const noexcept {
    std::size_t h = v.size() * 0x9E3779B97F4A7C15ull;
    PointSetHash ph;
    for (const auto& s : v) h = (h ^ ph(s)) * 0x100000001B3ull;
    return h;
  }
};

class KPolynomialSolver {
 public:
  KPolynomialSolver(const MonomialHilbertOptions& options, MonomialHilbertStats* stats)
      : options_(options), stats_(stats) {}

  // `gens` must be minimal and sorted.
  IntPolynomial solve(const std::vector<PointSet>& gens) {
    if (stats_) ++stats_->calls;
    if (gens.empty()) return {1};
    if (gens.front().empty()) return {};  // unit ideal
    if (gens.size() == 1) return one_minus_x_power_term(gens.front().count());

    if (auto it = memo_.find(gens); it != memo_.end()) {
      if (stats_) ++stats_->memo_hits;
      return it->second;
    }

    IntPolynomial result = compute(gens);
    if (memo_.size() >= options_.max_memo_entries)
      throw BudgetExceededError("monomial Hilbert recursion exceeded " +
                                std::to_string(options_.max_memo_entries) + " memo entries");
    memo_.emplace(gens, result);
    if (stats_) stats_->memo_entries = memo_.size();
    return result;
  }

 private:
  static IntPolynomial one_minus_x_power_term(int d) {
    IntPolynomial p(static_cast<std::size_t>(d) + 1, 0);
    p[0] = 1;
    p[static_cast<std::size_t>(d)] -= 1;
    poly_trim(p);
    return p;
  }

  IntPolynomial compute(const std::vector<PointSet>& gens) {
    std::array<int, PointSet::kCapacity> freq{};
    PointSet support;
    int total = 0;
    for (const auto& g : gens) {
      g.for_each([&](int v) { ++freq[static_cast<std::size_t>(v)]; });
      support |= g;
      total += g.count();
    }

    // Pairwise coprime generators form a regular sequence.
    if (total == support.count()) {
      IntPolynomial p{1};
      for (const auto& g : gens) p = poly_mul(p, one_minus_x_power_term(g.count()));
      return p;
    }

    if (auto parts = components(gens, support); parts.size() > 1) {
      IntPolynomial p{1};
      for (auto& part : parts) {
        std::sort(part.begin(), part.end());
        p = poly_mul(p, solve(part));
      }
      return p;
    }

    int pivot = -1;
    for (int v = support.first(); v >= 0; v = support.next(v))
      if (pivot < 0 || freq[static_cast<std::size_t>(v)] > freq[static_cast<std::size_t>(pivot)]) pivot = v;

    std::vector<PointSet> without;  // generators not divisible by the pivot
    std::vector<PointSet> quotient;  // generators divided by the pivot
    for (const auto& g : gens) {
      if (g.test(pivot)) {
        PointSet q = g;
        q.reset(pivot);
        quotient.push_back(q);
      } else {
        without.push_back(g);
      }
    }

    // I = (I + x) and (I : x): K(I) = (1-x) K(without) + x K(I : x).
    IntPolynomial k_sum = solve(without);
    k_sum = poly_mul(k_sum, {1, -1});

    // `quotient` and `without` are each minimal; only elements of `without`
    // can be multiples of a quotient element.
    std::vector<PointSet> colon = quotient;
    for (const auto& g : without) {
      bool redundant = false;
      for (const auto& q : quotient)
        if (q.subset_of(g)) {
          redundant = true;
          break;
        }
      if (!redundant) colon.push_back(g);
    }
    std::sort(colon.begin(), colon.end());
    IntPolynomial k_colon = solve(colon);
    k_colon.insert(k_colon.begin(), BigInt(0));
    return poly_add(k_sum, k_colon);
  }

  static std::vector<std::vector<PointSet>> components(const std::vector<PointSet>& gens,
                                                       const PointSet& support) {
    std::array<int, PointSet::kCapacity> parent{};
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[static_cast<std::size_t>(v)] != v) {
        parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
        v = parent[static_cast<std::size_t>(v)];
      }
      return v;
    };
    for (const auto& g : gens) {
      const int root = find(g.first());
      g.for_each([&](int v) { parent[static_cast<std::size_t>(find(v))] = root; });
    }
    std::array<int, PointSet::kCapacity> slot{};
    slot.fill(-1);
    int n = 0;
    support.for_each([&](int v) {
      const int r = find(v);
      if (slot[static_cast<std::size_t>(r)] < 0) slot[static_cast<std::size_t>(r)] = n++;
    });
    std::vector<std::vector<PointSet>> parts(static_cast<std::size_t>(n));
    for (const auto& g : gens)
      parts[static_cast<std::size_t>(slot[static_cast<std::size_t>(find(g.first()))])].push_back(g);
    return parts;
  }

  MonomialHilbertOptions options_;
  MonomialHilbertStats* stats_;
  std::unordered_map<std::vector<PointSet>, IntPolynomial, KeyHash> memo_;
};

}  // namespace

IntPolynomial squarefree_k_polynomial(std::vector<PointSet> generators,
                                      const MonomialHilbertOptions& options,
                                      MonomialHilbertStats* stats) {
  KPolynomialSolver solver(options, stats);
  return solver.solve(minimalize(std::move(generators)));
}

std::vector<PointSet> chain_ideal_generators(const Poset& poset, int len) {
  std::vector<PointSet> gens;
  for (const auto& chain : poset.enumerate_chains(len)) gens.push_back(poset.to_set(chain));
  return gens;
}

}  // namespace secant
