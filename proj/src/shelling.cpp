#include "secant/shelling.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <queue>
#include <thread>

#include "secant/errors.hpp"

namespace secant {

namespace {

int point_index(int row, int col, int b) { return (row - 1) * 2 * b + (col - 1); }

template <class Fn>
void parallel_for(std::size_t n, unsigned jobs, Fn&& fn) {
  jobs = std::max(1u, jobs);
  if (jobs == 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned j = 0; j < jobs; ++j)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) fn(i);
    });
}

}  // namespace

PointSet closed_region(const GridPoint& x, int a, int b) {
  PointSet s;
  for (int i = x.row; i <= a; ++i)
    for (int j = x.col; j <= 2 * b; ++j) s.set(point_index(i, j, b));
  return s;
}

PointSet open_region(const GridPoint& x, int a, int b) {
  PointSet s;
  for (int i = x.row + 1; i <= a; ++i)
    for (int j = x.col + 1; j <= 2 * b; ++j) s.set(point_index(i, j, b));
  return s;
}

PointSet closed_region(const std::vector<GridPoint>& g, int a, int b) {
  PointSet s;
  for (const auto& x : g) s |= closed_region(x, a, b);
  return s;
}

bool facet_preceq(const Facet& f, const Facet& g, const SegreParams& params) {
  if (f.paths.size() != g.paths.size() || static_cast<int>(f.paths.size()) != params.secant())
    throw ValidationError("facet_preceq: facets do not match the parameters");
  for (std::size_t i = 0; i < f.paths.size(); ++i)
    if (!g.paths[i].mask.subset_of(closed_region(f.paths[i].points, params.a, params.b))) return false;
  return true;
}

ShellingOrder::ShellingOrder(SegreParams params, std::vector<Facet> facets)
    : params_(std::move(params)), facets_(std::move(facets)) {
  rank_.reserve(facets_.size());
  for (std::size_t i = 0; i < facets_.size(); ++i)
    if (!rank_.emplace(facets_[i].points, i).second)
      throw ValidationError("shelling order lists the same facet twice");
}

std::optional<std::size_t> ShellingOrder::rank_of(const PointSet& points) const {
  if (auto it = rank_.find(points); it != rank_.end()) return it->second;
  return std::nullopt;
}

std::vector<Facet> collect_facets(const SegreParams& params, std::size_t max_facets) {
  params.require_secant_regime();
  const BigInt expected = degree(params);
  if (expected > BigInt(static_cast<unsigned long>(max_facets)))
    throw BudgetExceededError("complex has " + expected.get_str() + " facets for " + params.to_string() +
                              ", above the facet budget of " + std::to_string(max_facets));
  std::vector<Facet> out;
  out.reserve(expected.get_ui());
  enumerate_facets(params, [&](const Facet& f) { out.push_back(f); });
  return out;
}

ShellingOrder shelling_order(const SegreParams& params, const ShellingOptions& options) {
  std::vector<Facet> facets = collect_facets(params, options.max_facets);
  const std::size_t n = facets.size();
  const std::size_t t = static_cast<std::size_t>(params.secant());

  // Tie-break key: sorted point list. Point indices increase with (row, col).
  std::vector<std::vector<int>> keys(n);
  for (std::size_t i = 0; i < n; ++i) keys[i] = facets[i].points.indices();
  std::vector<std::size_t> by_key(n);
  for (std::size_t i = 0; i < n; ++i) by_key[i] = i;
  std::sort(by_key.begin(), by_key.end(), [&](std::size_t l, std::size_t r) { return keys[l] < keys[r]; });
  std::vector<std::size_t> key_rank(n);
  for (std::size_t i = 0; i < n; ++i) key_rank[by_key[i]] = i;

  std::vector<PointSet> regions(n * t);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < t; ++k)
      regions[i * t + k] = closed_region(facets[i].paths[k].points, params.a, params.b);

  auto precedes = [&](std::size_t f, std::size_t g) {
    for (std::size_t k = 0; k < t; ++k)
      if (!facets[g].paths[k].mask.subset_of(regions[f * t + k])) return false;
    return true;
  };

  std::vector<std::uint32_t> indegree(n, 0);
  parallel_for(n, options.jobs, [&](std::size_t g) {
    std::uint32_t d = 0;
    for (std::size_t f = 0; f < n; ++f)
      if (f != g && precedes(f, g)) ++d;
    indegree[g] = d;
  });

  using Item = std::pair<std::size_t, std::size_t>;  // (key rank, facet)
  std::priority_queue<Item, std::vector<Item>, std::greater<>> ready;
  for (std::size_t i = 0; i < n; ++i)
    if (indegree[i] == 0) ready.push({key_rank[i], i});

  std::vector<Facet> ordered;
  ordered.reserve(n);
  std::vector<char> done(n, 0);
  while (!ready.empty()) {
    const std::size_t f = ready.top().second;
    ready.pop();
    done[f] = 1;
    ordered.push_back(facets[f]);
    for (std::size_t g = 0; g < n; ++g)
      if (!done[g] && g != f && precedes(f, g) && --indegree[g] == 0) ready.push({key_rank[g], g});
  }
  if (ordered.size() != n)
    throw Error("facet relation is not a partial order (cycle among " + std::to_string(n - ordered.size()) +
                " facets)");

  ShellingOrder order(params, std::move(ordered));
  if (options.certify) {
    const auto cert = certify_shelling(order, options.jobs);
    if (!cert.ok)
      throw Error("constructed order is not a shelling: facet " + std::to_string(cert.witness->first) +
                  " vs earlier facet " + std::to_string(cert.witness->second));
    order.mark_certified(true);
  }
  return order;
}

PointSet restriction_set(const ShellingOrder& order, std::size_t index) {
  const auto& params = order.params();
  const PointSet& f = order.facets().at(index).points;
  const int n = params.num_points();
  PointSet r;
  f.for_each([&](int x) {
    PointSet base = f;
    base.reset(x);
    for (int y = 0; y < n; ++y) {
      if (f.test(y)) continue;
      PointSet g = base;
      g.set(y);
      // Every facet is in the order, so membership is the facet test.
      if (auto k = order.rank_of(g); k && *k < index) {
        r.set(x);
        return;
      }
    }
  });
  return r;
}

std::vector<PointSet> restriction_sets(const ShellingOrder& order, unsigned jobs) {
  std::vector<PointSet> out(order.size());
  parallel_for(order.size(), jobs, [&](std::size_t i) { out[i] = restriction_set(order, i); });
  return out;
}

ShellingCertificate certify_shelling(const ShellingOrder& order, unsigned jobs) {
  const auto r = restriction_sets(order, jobs);
  const auto& facets = order.facets();
  std::vector<std::size_t> failing(facets.size(), SIZE_MAX);
  parallel_for(facets.size(), jobs, [&](std::size_t i) {
    for (std::size_t j = 0; j < i; ++j)
      if (!(facets[i].points - facets[j].points).intersects(r[i])) {
        failing[i] = j;
        return;
      }
  });
  ShellingCertificate cert;
  for (std::size_t i = 0; i < facets.size(); ++i)
    if (failing[i] != SIZE_MAX) {
      cert.ok = false;
      cert.witness = std::make_pair(i, failing[i]);
      break;
    }
  return cert;
}

std::string to_string(HMethod m) {
  switch (m) {
    case HMethod::shelling:
      return "shelling";
    case HMethod::f_vector:
      return "f_vector";
    case HMethod::monomial:
      return "monomial";
  }
  return "?";
}

HMethod parse_h_method(const std::string& s) {
  if (s == "shelling") return HMethod::shelling;
  if (s == "f_vector" || s == "f-vector" || s == "fvector") return HMethod::f_vector;
  if (s == "monomial") return HMethod::monomial;
  throw ValidationError("unknown h-vector method '" + s + "' (expected shelling, f_vector or monomial)");
}

std::vector<BigInt> f_vector(const SegreParams& params, std::size_t max_states) {
  params.require_secant_regime();
  const Poset poset(params);
  const int t = params.secant();
  const int n = poset.size();
  const auto& order = poset.linear_extension();

  // State after deciding the first i vertices of the linear extension: for
  // each vertex, the longest chain among chosen predecessors (capped at t).
  // Only entries of undecided vertices are kept, so equal futures merge.
  using Counts = std::vector<std::uint64_t>;
  std::unordered_map<std::string, Counts> layer;
  layer.emplace(std::string(static_cast<std::size_t>(n), '\0'), Counts{1});

  auto add_into = [](Counts& dst, const Counts& src, std::size_t shift) {
    if (dst.size() < src.size() + shift) dst.resize(src.size() + shift, 0);
    for (std::size_t k = 0; k < src.size(); ++k)
      if (__builtin_add_overflow(dst[k + shift], src[k], &dst[k + shift]))
        throw BudgetExceededError("face count overflowed 64 bits");
  };

  for (int step = 0; step < n; ++step) {
    const int v = order[static_cast<std::size_t>(step)];
    std::unordered_map<std::string, Counts> next;
    next.reserve(layer.size() * 2);
    for (auto& [state, counts] : layer) {
      const int level = static_cast<unsigned char>(state[static_cast<std::size_t>(v)]) + 1;
      std::string skip = state;
      skip[static_cast<std::size_t>(v)] = 0;
      add_into(next[skip], counts, 0);
      if (level <= t) {
        std::string take = skip;
        poset.successors(v).for_each([&](int w) {
          auto& m = take[static_cast<std::size_t>(w)];
          if (static_cast<unsigned char>(m) < level) m = static_cast<char>(level);
        });
        add_into(next[take], counts, 1);
      }
    }
    if (next.size() > max_states)
      throw BudgetExceededError("f-vector state space exceeded " + std::to_string(max_states) + " states");
    layer = std::move(next);
  }

  Counts total;
  for (const auto& [state, counts] : layer) add_into(total, counts, 0);
  std::vector<BigInt> f;
  for (auto c : total) f.emplace_back(static_cast<unsigned long>(c));
  return f;
}

HVector h_from_f(const std::vector<BigInt>& f, int d) {
  HVector h(static_cast<std::size_t>(d) + 1, 0);
  for (int k = 0; k <= d; ++k) {
    BigInt acc = 0;
    for (int i = 0; i <= k && i < static_cast<int>(f.size()); ++i) {
      BigInt term = binomial(d - i, k - i) * f[static_cast<std::size_t>(i)];
      if ((k - i) % 2) acc -= term;
      else acc += term;
    }
    h[static_cast<std::size_t>(k)] = acc;
  }
  poly_trim(h);
  return h;
}

HVector h_vector(const SegreParams& params, HMethod method, const HVectorOptions& options) {
  params.require_secant_regime();
  const auto dims = dimension(params);
  switch (method) {
    case HMethod::shelling: {
      const ShellingOrder order = shelling_order(params, options.shelling);
      HVector h(static_cast<std::size_t>(dims.dimension) + 1, 0);
      for (const auto& r : restriction_sets(order, options.shelling.jobs)) h[static_cast<std::size_t>(r.count())] += 1;
      poly_trim(h);
      return h;
    }
    case HMethod::f_vector:
      return h_from_f(f_vector(params, options.max_f_vector_states), dims.dimension);
    case HMethod::monomial: {
      const Poset poset(params);
      auto k = squarefree_k_polynomial(chain_ideal_generators(poset, params.secant() + 1), options.monomial);
      return divide_by_one_minus_x_power(std::move(k), dims.codimension);
    }
  }
  throw ValidationError("unknown h-vector method");
}

HilbertSeries hilbert_series(const SegreParams& params, HMethod method, const HVectorOptions& options) {
  return {h_vector(params, method, options), dimension(params).dimension};
}

int regularity(const HVector& h) {
  for (std::size_t i = h.size(); i-- > 0;)
    if (h[i] != 0) return static_cast<int>(i);
  return -1;
}

bool gorenstein_symmetry(const HVector& h) {
  const int d = regularity(h);
  for (int i = 0; i <= d; ++i)
    if (h[static_cast<std::size_t>(i)] != h[static_cast<std::size_t>(d - i)]) return false;
  return true;
}

}  // namespace secant
