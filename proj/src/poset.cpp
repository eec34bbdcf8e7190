#include "secant/poset.hpp"

#include <algorithm>
#include <sstream>

#include "secant/errors.hpp"

namespace secant {

void SegreParams::validate() const {
  if (a < 2) throw ValidationError("a must satisfy a >= 2 (got a=" + std::to_string(a) + ")");
  if (a > b)
    throw ValidationError("a must satisfy a <= b (got a=" + std::to_string(a) +
                          ", b=" + std::to_string(b) + ")");
  if (2 * a * b > PointSet::kCapacity)
    throw ValidationError("2ab must be at most " + std::to_string(PointSet::kCapacity) +
                          " (got " + std::to_string(2 * a * b) + ")");
  if (t && *t < 1) throw ValidationError("t must satisfy t >= 1 (got t=" + std::to_string(*t) + ")");
}

void SegreParams::require_secant_regime() const {
  validate();
  const int tt = secant();
  if (tt >= std::min(2 * a, b))
    throw UnsupportedRegimeError("t=" + std::to_string(tt) + " >= min(2a,b)=" +
                                 std::to_string(std::min(2 * a, b)) +
                                 ": the secant ideal is trivial; supported regime is 1 <= t <= a-1");
  if (tt >= a)
    throw UnsupportedRegimeError("t=" + std::to_string(tt) + " >= a=" + std::to_string(a) +
                                 ": a generic determinantal ideal, outside the supported regime "
                                 "1 <= t <= a-1 (t < a)");
}

int SegreParams::secant() const {
  if (!t) throw ValidationError("t is required for this operation");
  return *t;
}

std::string SegreParams::to_string() const {
  std::ostringstream os;
  os << "(a=" << a << ", b=" << b;
  if (t) os << ", t=" << *t;
  os << ")";
  return os.str();
}

VariableId to_variable(const GridPoint& p, int b) {
  if (p.col <= b) return {1, p.row, p.col};
  return {2, p.row, p.col - b};
}

GridPoint to_grid_point(const VariableId& v, int b) {
  return {v.second, v.slice == 1 ? v.third : v.third + b};
}

int variable_index(const VariableId& v, int a, int b) {
  return (v.slice - 1) * a * b + (v.second - 1) * b + (v.third - 1);
}

VariableId variable_at(int index, int a, int b) {
  const int ab = a * b;
  return {index / ab + 1, (index % ab) / b + 1, index % b + 1};
}

std::pair<LatticeElement, LatticeElement> lattice_meet_join(const LatticeElement& u,
                                                            const LatticeElement& v) {
  return {{std::min(u.i, v.i), std::min(u.j, v.j), std::min(u.k, v.k)},
          {std::max(u.i, v.i), std::max(u.j, v.j), std::max(u.k, v.k)}};
}

bool lattice_leq(const LatticeElement& u, const LatticeElement& v) {
  return u.i <= v.i && u.j <= v.j && u.k <= v.k;
}

Poset::Poset(int a, int b) : a_(a), b_(b) {
  SegreParams{a, b, std::nullopt}.validate();
  const int n = size();
  points_.reserve(static_cast<std::size_t>(n));
  for (int r = 1; r <= a_; ++r)
    for (int c = 1; c <= 2 * b_; ++c) points_.push_back({r, c});

  below_.assign(static_cast<std::size_t>(n), PointSet{});
  above_.assign(static_cast<std::size_t>(n), PointSet{});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (less(points_[static_cast<std::size_t>(i)], points_[static_cast<std::size_t>(j)])) {
        above_[static_cast<std::size_t>(i)].set(j);
        below_[static_cast<std::size_t>(j)].set(i);
      }

  for (int i = 0; i < n; ++i)
    if (points_[static_cast<std::size_t>(i)].col <= b_) linear_.push_back(i);
  for (int i = 0; i < n; ++i)
    if (points_[static_cast<std::size_t>(i)].col > b_) linear_.push_back(i);
}

bool Poset::contains(const GridPoint& p) const {
  return p.row >= 1 && p.row <= a_ && p.col >= 1 && p.col <= 2 * b_;
}

int Poset::index_of(const GridPoint& p) const {
  if (!contains(p))
    throw ValidationError("point (" + std::to_string(p.row) + "," + std::to_string(p.col) +
                          ") is outside P for a=" + std::to_string(a_) + ", b=" + std::to_string(b_));
  return (p.row - 1) * 2 * b_ + (p.col - 1);
}

GridPoint Poset::point_at(int index) const {
  if (index < 0 || index >= size()) throw ValidationError("point index out of range");
  return points_[static_cast<std::size_t>(index)];
}

bool Poset::preceq(const GridPoint& p, const GridPoint& q) const {
  if (!contains(p) || !contains(q)) {
    index_of(contains(p) ? q : p);  // throws with the offending point
  }
  if (p == q) return true;
  if (p.row < q.row && p.col < q.col) return true;
  return p.col <= b_ && q.col >= b_ + 1 && p.col < q.col - b_;
}

bool Poset::less(const GridPoint& p, const GridPoint& q) const { return p != q && preceq(p, q); }

PointSet Poset::to_set(const std::vector<GridPoint>& pts) const {
  PointSet s;
  for (const auto& p : pts) s.set(index_of(p));
  return s;
}

std::vector<GridPoint> Poset::to_points(const PointSet& s) const {
  std::vector<GridPoint> out;
  s.for_each([&](int i) { out.push_back(points_[static_cast<std::size_t>(i)]); });
  return out;
}

int Poset::longest_chain(const PointSet& s) const {
  std::vector<int> level(static_cast<std::size_t>(size()), 0);
  int best = 0;
  for (int v : linear_) {
    if (!s.test(v)) continue;
    int l = 0;
    (below_[static_cast<std::size_t>(v)] & s).for_each(
        [&](int u) { l = std::max(l, level[static_cast<std::size_t>(u)]); });
    level[static_cast<std::size_t>(v)] = l + 1;
    best = std::max(best, l + 1);
  }
  return best;
}

std::vector<std::vector<GridPoint>> Poset::mirsky_partition(const PointSet& s) const {
  std::vector<int> level(static_cast<std::size_t>(size()), 0);
  int height = 0;
  for (int v : linear_) {
    if (!s.test(v)) continue;
    int l = 0;
    (below_[static_cast<std::size_t>(v)] & s).for_each(
        [&](int u) { l = std::max(l, level[static_cast<std::size_t>(u)]); });
    level[static_cast<std::size_t>(v)] = l + 1;
    height = std::max(height, l + 1);
  }
  std::vector<std::vector<GridPoint>> parts(static_cast<std::size_t>(height));
  s.for_each([&](int v) {
    parts[static_cast<std::size_t>(level[static_cast<std::size_t>(v)] - 1)].push_back(
        points_[static_cast<std::size_t>(v)]);
  });
  return parts;
}

bool Poset::is_antichain(const PointSet& s) const {
  bool ok = true;
  s.for_each([&](int v) {
    if (below_[static_cast<std::size_t>(v)].intersects(s)) ok = false;
  });
  return ok;
}

std::vector<Chain> Poset::enumerate_chains(int len) const {
  std::vector<Chain> out;
  if (len < 1) return out;
  std::vector<int> stack;
  auto extend = [&](auto&& self, int last) -> void {
    if (static_cast<int>(stack.size()) == len) {
      Chain c;
      for (int i : stack) c.push_back(points_[static_cast<std::size_t>(i)]);
      out.push_back(std::move(c));
      return;
    }
    const PointSet& next = last < 0 ? PointSet{} : above_[static_cast<std::size_t>(last)];
    if (last < 0) {
      for (int v = 0; v < size(); ++v) {
        stack.push_back(v);
        self(self, v);
        stack.pop_back();
      }
      return;
    }
    next.for_each([&](int v) {
      stack.push_back(v);
      self(self, v);
      stack.pop_back();
    });
  };
  extend(extend, -1);
  std::sort(out.begin(), out.end());
  return out;
}

Poset build_poset(const SegreParams& params) {
  params.validate();
  return Poset(params);
}

}  // namespace secant
