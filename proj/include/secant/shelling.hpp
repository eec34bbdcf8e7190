#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "secant/complex.hpp"
#include "secant/counting.hpp"
#include "secant/hilbert.hpp"
#include "secant/point_set.hpp"
#include "secant/poset.hpp"

namespace secant {

// R̄_x = {(i,j) in P : i >= u, j >= v} for x = (u,v).
PointSet closed_region(const GridPoint& x, int a, int b);
// R_x = {(i,j) in P : i > u, j > v}.
PointSet open_region(const GridPoint& x, int a, int b);
// Union of closed_region over the points of `g`.
PointSet closed_region(const std::vector<GridPoint>& g, int a, int b);

// F ⪯ G iff path i of G lies in R̄ of path i of F for every i.
bool facet_preceq(const Facet& f, const Facet& g, const SegreParams& params);

struct ShellingOptions {
  std::size_t max_facets = 250'000;
  bool certify = true;
  unsigned jobs = 1;
};

struct ShellingCertificate {
  bool ok = true;
  // First (i, j) with j < i violating the shelling condition, 0-based.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

// Facets in a fixed total order, with a point-set -> position index.
class ShellingOrder {
 public:
  ShellingOrder(SegreParams params, std::vector<Facet> facets);

  const SegreParams& params() const { return params_; }
  const std::vector<Facet>& facets() const { return facets_; }
  std::size_t size() const { return facets_.size(); }
  std::optional<std::size_t> rank_of(const PointSet& points) const;

  bool certified() const { return certified_; }
  void mark_certified(bool v) { certified_ = v; }

 private:
  SegreParams params_;
  std::vector<Facet> facets_;
  std::unordered_map<PointSet, std::size_t, PointSetHash> rank_;
  bool certified_ = false;
};

// All facets of the complex, in enumeration order. BudgetExceededError
// (quoting the degree) when there are more than max_facets.
std::vector<Facet> collect_facets(const SegreParams& params, std::size_t max_facets);

// Topological sort of ⪯, ties broken by the lexicographic order of the sorted
// point lists. Certified before returning unless options.certify is false;
// a failed certification raises Error with the witness.
ShellingOrder shelling_order(const SegreParams& params, const ShellingOptions& options = {});

// For all j < i: some k < i and x with F_i \ F_k = {x} ⊆ F_i \ F_j.
ShellingCertificate certify_shelling(const ShellingOrder& order, unsigned jobs = 1);

// {x in F : some earlier facet F'' has F \ F'' = {x}}.
PointSet restriction_set(const ShellingOrder& order, std::size_t index);
std::vector<PointSet> restriction_sets(const ShellingOrder& order, unsigned jobs = 1);

enum class HMethod { shelling, f_vector, monomial };
std::string to_string(HMethod m);
HMethod parse_h_method(const std::string& s);

using HVector = std::vector<BigInt>;

struct HVectorOptions {
  ShellingOptions shelling;
  MonomialHilbertOptions monomial;
  std::size_t max_f_vector_states = 20'000'000;
};

// h_i = #{F : |r(F)| = i} for the shelling method; the alternating transform
// of the f-vector; or the Hilbert numerator of R/J_t divided by
// (1-x)^codim for the monomial method. Trailing zeros trimmed.
HVector h_vector(const SegreParams& params, HMethod method, const HVectorOptions& options = {});

// Face counts f_{-1}, f_0, ..., f_{d-1} of the complex whose faces are the
// subsets of P without a (t+1)-chain. Counted by a dynamic program over a
// linear extension, independent of facets and shellings.
std::vector<BigInt> f_vector(const SegreParams& params, std::size_t max_states = 20'000'000);

// h_k = sum_{i<=k} (-1)^{k-i} C(d-i, k-i) f_{i-1}.
HVector h_from_f(const std::vector<BigInt>& f, int d);

struct HilbertSeries {
  IntPolynomial numerator;  // h-polynomial
  int pole_order = 0;       // power of (1-x) in the denominator
};

HilbertSeries hilbert_series(const SegreParams& params, HMethod method = HMethod::monomial,
                             const HVectorOptions& options = {});

// max{i : h_i != 0}.
int regularity(const HVector& h);

// h_i = h_{d-i} for d the top nonzero index.
bool gorenstein_symmetry(const HVector& h);

}  // namespace secant
