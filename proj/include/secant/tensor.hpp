#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "secant/polynomial.hpp"
#include "secant/poset.hpp"

namespace secant {

// Dense rational matrix, row-major.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols)) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& at(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  const Scalar& at(int r, int c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }

  ExactMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Scalar> data_;
};

struct Elimination {
  int rank = 0;
  std::vector<int> pivot_rows;  // original row indices, in pivot order
  std::vector<int> pivot_cols;
};

// Fraction-free elimination on the row-scaled integer matrix, pivoting on the
// entry of largest magnitude in each column. The first k pivot rows and
// columns always span a nonsingular k x k submatrix.
Elimination eliminate(const ExactMatrix& m);
int rank(const ExactMatrix& m);
// Square matrices only.
Scalar determinant(const ExactMatrix& m);

// Tensor of shape 2 x a x b. Entry (i,j,k) sits at the variable index of
// x_{ijk}, so tensors and ring variables share one layout.
class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(int a, int b) : a_(a), b_(b), data_(static_cast<std::size_t>(2 * a * b)) {}

  int a() const { return a_; }
  int b() const { return b_; }
  std::size_t size() const { return data_.size(); }
  // 1-based indices.
  Scalar& at(int i, int j, int k) { return data_[offset(i, j, k)]; }
  const Scalar& at(int i, int j, int k) const { return data_[offset(i, j, k)]; }
  const Scalar& flat(std::size_t idx) const { return data_[idx]; }
  Scalar& flat(std::size_t idx) { return data_[idx]; }

  friend bool operator==(const Tensor3&, const Tensor3&) = default;

 private:
  std::size_t offset(int i, int j, int k) const {
    return static_cast<std::size_t>((i - 1) * a_ * b_ + (j - 1) * b_ + (k - 1));
  }
  int a_ = 0;
  int b_ = 0;
  std::vector<Scalar> data_;
};

// k = 1: 2 x ab, columns (j,k). k = 2: a x 2b = [X | Y]. k = 3: b x 2a =
// [X^T | Y^T]. ValidationError for other k.
ExactMatrix unfold(const Tensor3& t, int k);
Tensor3 fold(const ExactMatrix& m, int k, int a, int b);

// u (x) v (x) w.
Tensor3 outer_product(const std::vector<Scalar>& u, const std::vector<Scalar>& v, const std::vector<Scalar>& w);
Tensor3 add(const Tensor3& x, const Tensor3& y);

struct SampleRange {
  std::int64_t lo = -10;
  std::int64_t hi = 10;
};

// Sum of r outer products with integer factors drawn uniformly from `range`.
Tensor3 random_rank_tensor(int a, int b, int r, std::uint64_t seed, SampleRange range = {});
// Independent uniform entries.
Tensor3 random_dense_tensor(int a, int b, std::uint64_t seed, SampleRange range = {});

struct WitnessMinor {
  int unfolding = 2;  // 2 or 3
  std::vector<int> rows;  // 0-based
  std::vector<int> cols;
  Scalar value;
};

struct Membership {
  bool member = false;
  int rank2 = 0;
  int rank3 = 0;
  std::optional<WitnessMinor> witness;  // present iff !member
};

// Vanishing of all (t+1)-minors of the second and third unfoldings.
// Over Q this decides membership in the zero set of the secant ideal; it does
// not decide whether the point is a sum of t rational rank-one tensors.
Membership membership(const Tensor3& t, int secant);

// Recomputes the minor from the tensor; true iff it equals w.value and is nonzero.
bool verify_witness(const Tensor3& t, const WitnessMinor& w);

// Substitutes tensor entries for the ring variables. Requires a ring over Q of
// the tensor's shape.
Scalar evaluate(const Ring& ring, const Polynomial& f, const Tensor3& t);

// Exact scalar from an integer or a "p/q" string.
Scalar parse_scalar(const nlohmann::json& j);
nlohmann::json scalar_to_json(const Scalar& s);

// Accepts nested slice-major arrays [[row, ...], [row, ...]] or
// {"shape": [2, a, b], "entries": [...]} with entries in slice-major order.
Tensor3 tensor_from_json(const nlohmann::json& j);
nlohmann::json tensor_to_json(const Tensor3& t);

}  // namespace secant
