#include "secant/tensor.hpp"

#include <algorithm>
#include <random>
#include <utility>

#include "secant/counting.hpp"
#include "secant/errors.hpp"

namespace secant {

ExactMatrix ExactMatrix::submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
  ExactMatrix out(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c)
      out.at(static_cast<int>(r), static_cast<int>(c)) = at(rows[r], cols[c]);
  return out;
}

namespace {

// Each row multiplied by the lcm of its denominators. Returns the integer
// matrix and the product of the multipliers.
std::pair<std::vector<BigInt>, BigInt> integer_rows(const ExactMatrix& m) {
  std::vector<BigInt> out(static_cast<std::size_t>(m.rows() * m.cols()));
  BigInt scale = 1;
  for (int r = 0; r < m.rows(); ++r) {
    BigInt l = 1;
    for (int c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(r, c).get_den_mpz_t());
    for (int c = 0; c < m.cols(); ++c) {
      const Scalar v = m.at(r, c) * l;
      out[static_cast<std::size_t>(r * m.cols() + c)] = v.get_num();
    }
    scale *= l;
  }
  return {std::move(out), scale};
}

}  // namespace

Elimination eliminate(const ExactMatrix& m) {
  auto [a, scale] = integer_rows(m);
  (void)scale;
  const int rows = m.rows(), cols = m.cols();
  auto at = [&](int r, int c) -> BigInt& { return a[static_cast<std::size_t>(r * cols + c)]; };
  std::vector<int> row_id(static_cast<std::size_t>(rows));
  for (int i = 0; i < rows; ++i) row_id[static_cast<std::size_t>(i)] = i;

  Elimination e;
  BigInt prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int best = -1;
    for (int i = r; i < rows; ++i)
      if (sgn(at(i, c)) != 0 && (best < 0 || mpz_cmpabs(at(i, c).get_mpz_t(), at(best, c).get_mpz_t()) > 0)) best = i;
    if (best < 0) continue;
    if (best != r) {
      for (int j = 0; j < cols; ++j) std::swap(at(r, j), at(best, j));
      std::swap(row_id[static_cast<std::size_t>(r)], row_id[static_cast<std::size_t>(best)]);
    }
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        BigInt v = at(r, c) * at(i, j) - at(i, c) * at(r, j);
        mpz_divexact(at(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, c) = 0;
    }
    prev = at(r, c);
    e.pivot_rows.push_back(row_id[static_cast<std::size_t>(r)]);
    e.pivot_cols.push_back(c);
    ++r;
  }
  e.rank = r;
  return e;
}

int rank(const ExactMatrix& m) { return eliminate(m).rank; }

Scalar determinant(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw ValidationError("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  auto [a, scale] = integer_rows(m);
  Scalar d(bareiss_determinant(std::move(a), static_cast<std::size_t>(m.rows())));
  d /= scale;
  d.canonicalize();
  return d;
}

ExactMatrix unfold(const Tensor3& t, int k) {
  const int a = t.a(), b = t.b();
  switch (k) {
    case 1: {
      ExactMatrix m(2, a * b);
      for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= a; ++j)
          for (int l = 1; l <= b; ++l) m.at(i - 1, (j - 1) * b + (l - 1)) = t.at(i, j, l);
      return m;
    }
    case 2: {
      ExactMatrix m(a, 2 * b);
      for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= a; ++j)
          for (int l = 1; l <= b; ++l) m.at(j - 1, (i - 1) * b + (l - 1)) = t.at(i, j, l);
      return m;
    }
    case 3: {
      ExactMatrix m(b, 2 * a);
      for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= a; ++j)
          for (int l = 1; l <= b; ++l) m.at(l - 1, (i - 1) * a + (j - 1)) = t.at(i, j, l);
      return m;
    }
    default:
      throw ValidationError("unfolding index must be 1, 2 or 3, got " + std::to_string(k));
  }
}

Tensor3 fold(const ExactMatrix& m, int k, int a, int b) {
  Tensor3 t(a, b);
  const int rows = k == 1 ? 2 : k == 2 ? a : b;
  const int cols = k == 1 ? a * b : k == 2 ? 2 * b : 2 * a;
  if (k < 1 || k > 3) throw ValidationError("unfolding index must be 1, 2 or 3, got " + std::to_string(k));
  if (m.rows() != rows || m.cols() != cols) throw ValidationError("matrix shape does not match the unfolding");
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= a; ++j)
      for (int l = 1; l <= b; ++l) {
        if (k == 1) t.at(i, j, l) = m.at(i - 1, (j - 1) * b + (l - 1));
        else if (k == 2) t.at(i, j, l) = m.at(j - 1, (i - 1) * b + (l - 1));
        else t.at(i, j, l) = m.at(l - 1, (i - 1) * a + (j - 1));
      }
  return t;
}

Tensor3 outer_product(const std::vector<Scalar>& u, const std::vector<Scalar>& v, const std::vector<Scalar>& w) {
  if (u.size() != 2) throw ValidationError("first factor must have length 2");
  Tensor3 t(static_cast<int>(v.size()), static_cast<int>(w.size()));
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= t.a(); ++j)
      for (int k = 1; k <= t.b(); ++k)
        t.at(i, j, k) = u[static_cast<std::size_t>(i - 1)] * v[static_cast<std::size_t>(j - 1)] *
                        w[static_cast<std::size_t>(k - 1)];
  return t;
}

Tensor3 add(const Tensor3& x, const Tensor3& y) {
  if (x.a() != y.a() || x.b() != y.b()) throw ValidationError("tensor shapes differ");
  Tensor3 t = x;
  for (std::size_t i = 0; i < t.size(); ++i) t.flat(i) += y.flat(i);
  return t;
}

namespace {

void check_range(const SampleRange& range) {
  if (range.lo > range.hi) throw ValidationError("empty sampling range");
}

std::vector<Scalar> draw(std::mt19937_64& rng, std::uniform_int_distribution<std::int64_t>& dist, int n) {
  std::vector<Scalar> v;
  v.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v.emplace_back(mpz_class(std::to_string(dist(rng))));
  return v;
}

}  // namespace

Tensor3 random_rank_tensor(int a, int b, int r, std::uint64_t seed, SampleRange range) {
  SegreParams{a, b, std::nullopt}.validate();
  if (r < 1) throw ValidationError("rank must be at least 1");
  check_range(range);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> dist(range.lo, range.hi);
  Tensor3 t(a, b);
  for (int s = 0; s < r; ++s) {
    const auto u = draw(rng, dist, 2);
    const auto v = draw(rng, dist, a);
    const auto w = draw(rng, dist, b);
    t = add(t, outer_product(u, v, w));
  }
  return t;
}

Tensor3 random_dense_tensor(int a, int b, std::uint64_t seed, SampleRange range) {
  SegreParams{a, b, std::nullopt}.validate();
  check_range(range);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> dist(range.lo, range.hi);
  Tensor3 t(a, b);
  const auto v = draw(rng, dist, static_cast<int>(t.size()));
  for (std::size_t i = 0; i < t.size(); ++i) t.flat(i) = v[i];
  return t;
}

Membership membership(const Tensor3& t, int secant) {
  if (secant < 1) throw ValidationError("t must be at least 1");
  Membership out;
  const auto m2 = unfold(t, 2);
  const auto m3 = unfold(t, 3);
  const auto e2 = eliminate(m2);
  const auto e3 = eliminate(m3);
  out.rank2 = e2.rank;
  out.rank3 = e3.rank;
  out.member = e2.rank <= secant && e3.rank <= secant;
  if (!out.member) {
    const bool second = e2.rank > secant;
    const auto& e = second ? e2 : e3;
    const auto& m = second ? m2 : m3;
    WitnessMinor w;
    w.unfolding = second ? 2 : 3;
    w.rows.assign(e.pivot_rows.begin(), e.pivot_rows.begin() + secant + 1);
    w.cols.assign(e.pivot_cols.begin(), e.pivot_cols.begin() + secant + 1);
    std::sort(w.rows.begin(), w.rows.end());
    std::sort(w.cols.begin(), w.cols.end());
    w.value = determinant(m.submatrix(w.rows, w.cols));
    out.witness = std::move(w);
  }
  return out;
}

bool verify_witness(const Tensor3& t, const WitnessMinor& w) {
  if (w.unfolding != 2 && w.unfolding != 3) return false;
  if (w.rows.size() != w.cols.size() || w.rows.empty()) return false;
  const auto m = unfold(t, w.unfolding);
  for (int r : w.rows)
    if (r < 0 || r >= m.rows()) return false;
  for (int c : w.cols)
    if (c < 0 || c >= m.cols()) return false;
  const Scalar d = determinant(m.submatrix(w.rows, w.cols));
  return d != 0 && d == w.value;
}

Scalar evaluate(const Ring& ring, const Polynomial& f, const Tensor3& t) {
  if (!ring.field().is_rational()) throw ValidationError("evaluation needs a polynomial over Q");
  if (ring.a() != t.a() || ring.b() != t.b())
    throw ValidationError("tensor shape (2," + std::to_string(t.a()) + "," + std::to_string(t.b()) +
                          ") does not match the ring (2," + std::to_string(ring.a()) + "," +
                          std::to_string(ring.b()) + ")");
  Scalar sum = 0;
  for (const auto& term : f.terms()) {
    Scalar v = term.coeff;
    for (int i = 0; i < ring.num_variables(); ++i)
      for (int e = 0; e < term.monomial.exp[static_cast<std::size_t>(i)]; ++e) v *= t.flat(static_cast<std::size_t>(i));
    sum += v;
  }
  return sum;
}

Scalar parse_scalar(const nlohmann::json& j) {
  if (j.is_number_integer()) return Scalar(mpz_class(j.dump()));
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    Scalar v;
    if (s.empty() || v.set_str(s, 10) != 0 || v.get_den() == 0)
      throw ValidationError("not an exact rational: '" + s + "'");
    v.canonicalize();
    return v;
  }
  throw ValidationError("tensor entries must be integers or \"p/q\" strings, got " + j.dump());
}

nlohmann::json scalar_to_json(const Scalar& s) {
  if (s.get_den() == 1 && s.get_num().fits_slong_p()) return s.get_num().get_si();
  return s.get_str();
}

Tensor3 tensor_from_json(const nlohmann::json& j) {
  if (j.is_object()) {
    if (!j.contains("shape") || !j.contains("entries")) throw ValidationError("tensor object needs shape and entries");
    const auto& shape = j.at("shape");
    if (!shape.is_array() || shape.size() != 3 || !shape[0].is_number_integer() || shape[0].get<int>() != 2 ||
        !shape[1].is_number_integer() || !shape[2].is_number_integer())
      throw ValidationError("shape must be [2, a, b]");
    const int a = shape[1].get<int>(), b = shape[2].get<int>();
    SegreParams{a, b, std::nullopt}.validate();
    const auto& entries = j.at("entries");
    Tensor3 t(a, b);
    if (!entries.is_array() || entries.size() != t.size())
      throw ValidationError("expected " + std::to_string(t.size()) + " entries");
    for (std::size_t i = 0; i < t.size(); ++i) t.flat(i) = parse_scalar(entries[i]);
    return t;
  }
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || !j[1].is_array())
    throw ValidationError("tensor must be two slices of a x b rows");
  const int a = static_cast<int>(j[0].size());
  if (a == 0 || !j[0][0].is_array()) throw ValidationError("slices must be nonempty matrices");
  const int b = static_cast<int>(j[0][0].size());
  SegreParams{a, b, std::nullopt}.validate();
  Tensor3 t(a, b);
  for (int i = 0; i < 2; ++i) {
    const auto& slice = j[static_cast<std::size_t>(i)];
    if (static_cast<int>(slice.size()) != a) throw ValidationError("slices have different row counts");
    for (int r = 0; r < a; ++r) {
      const auto& row = slice[static_cast<std::size_t>(r)];
      if (!row.is_array() || static_cast<int>(row.size()) != b) throw ValidationError("ragged tensor rows");
      for (int c = 0; c < b; ++c) t.at(i + 1, r + 1, c + 1) = parse_scalar(row[static_cast<std::size_t>(c)]);
    }
  }
  return t;
}

nlohmann::json tensor_to_json(const Tensor3& t) {
  auto out = nlohmann::json::array();
  for (int i = 1; i <= 2; ++i) {
    auto slice = nlohmann::json::array();
    for (int j = 1; j <= t.a(); ++j) {
      auto row = nlohmann::json::array();
      for (int k = 1; k <= t.b(); ++k) row.push_back(scalar_to_json(t.at(i, j, k)));
      slice.push_back(std::move(row));
    }
    out.push_back(std::move(slice));
  }
  return out;
}

}  // namespace secant
