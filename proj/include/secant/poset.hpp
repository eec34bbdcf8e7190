#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "secant/point_set.hpp"

namespace secant {

// Shape (2, a, b) of the tensor and the secant index t.
struct SegreParams {
  int a = 2;
  int b = 2;
  std::optional<int> t;

  // Throws ValidationError unless 2 <= a <= b, 2ab fits a PointSet, and t >= 1
  // when present.
  void validate() const;

  // validate() plus the secant regime 1 <= t <= a-1. Throws
  // UnsupportedRegimeError for t >= min(2a, b) (trivial ideal) and t >= a.
  void require_secant_regime() const;

  int secant() const;  // t, or ValidationError when absent
  int num_points() const { return 2 * a * b; }
  std::string to_string() const;
};

// Position in the a x 2b grid P. Columns 1..b hold the first slice, b+1..2b the
// second. Ordered lexicographically by (row, col).
struct GridPoint {
  int row = 1;
  int col = 1;
  friend constexpr auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

// Tensor coordinate x_{slice, second, third}.
struct VariableId {
  int slice = 1;
  int second = 1;
  int third = 1;
  friend constexpr auto operator<=>(const VariableId&, const VariableId&) = default;
};

// Element of the distributive lattice [2] x [a] x [b].
struct LatticeElement {
  int i = 1;
  int j = 1;
  int k = 1;
  friend constexpr auto operator<=>(const LatticeElement&, const LatticeElement&) = default;
};

VariableId to_variable(const GridPoint& p, int b);
GridPoint to_grid_point(const VariableId& v, int b);

// Position of a variable in the diagonal lex order (0 is largest):
// x_111 > x_112 > ... > x_1ab > x_211 > ... > x_2ab.
int variable_index(const VariableId& v, int a, int b);
VariableId variable_at(int index, int a, int b);

// Componentwise (min, max).
std::pair<LatticeElement, LatticeElement> lattice_meet_join(const LatticeElement& u,
                                                            const LatticeElement& v);
bool lattice_leq(const LatticeElement& u, const LatticeElement& v);

using Chain = std::vector<GridPoint>;

// The grid P with the order
//   (x,y) <= (z,w)  iff  equal, or x<z and y<w, or y<=b, w>=b+1, y<w-b.
// Immutable after construction.
class Poset {
 public:
  explicit Poset(int a, int b);
  explicit Poset(const SegreParams& params) : Poset(params.a, params.b) {}

  int a() const { return a_; }
  int b() const { return b_; }
  int size() const { return 2 * a_ * b_; }

  // All points in lexicographic (row, col) order.
  const std::vector<GridPoint>& points() const { return points_; }

  bool contains(const GridPoint& p) const;
  int index_of(const GridPoint& p) const;  // ValidationError when outside P
  GridPoint point_at(int index) const;

  // Reflexive order.
  bool preceq(const GridPoint& p, const GridPoint& q) const;
  // Strict order p < q.
  bool less(const GridPoint& p, const GridPoint& q) const;

  // Strict predecessors of the point with the given index.
  const PointSet& predecessors(int index) const { return below_[static_cast<std::size_t>(index)]; }
  const PointSet& successors(int index) const { return above_[static_cast<std::size_t>(index)]; }

  // Point indices in a linear extension of the order (first slice, then the
  // second, each row-major).
  const std::vector<int>& linear_extension() const { return linear_; }

  PointSet to_set(const std::vector<GridPoint>& pts) const;
  std::vector<GridPoint> to_points(const PointSet& s) const;

  // Number of elements of a longest chain inside s; 0 for the empty set.
  int longest_chain(const PointSet& s) const;
  int longest_chain(const std::vector<GridPoint>& s) const { return longest_chain(to_set(s)); }

  // Mirsky decomposition: part k holds the elements whose longest chain ending
  // there has k+1 elements. Parts are antichains, sorted by (row, col).
  std::vector<std::vector<GridPoint>> mirsky_partition(const PointSet& s) const;
  std::vector<std::vector<GridPoint>> mirsky_partition(const std::vector<GridPoint>& s) const {
    return mirsky_partition(to_set(s));
  }

  bool is_antichain(const PointSet& s) const;

  // All chains p_1 < ... < p_len, sorted lexicographically as point lists.
  std::vector<Chain> enumerate_chains(int len) const;

 private:
  int a_;
  int b_;
  std::vector<GridPoint> points_;
  std::vector<PointSet> below_;
  std::vector<PointSet> above_;
  std::vector<int> linear_;
};

Poset build_poset(const SegreParams& params);

}  // namespace secant
