#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "secant/poset.hpp"

namespace secant {

using Scalar = mpq_class;

// Coefficient field: the rationals or F_p. F_p elements are kept as integers
// in [0, p) inside an mpq_class so both fields share one polynomial type.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint32_t p);  // ValidationError unless p is prime
  // "q", "f2", "f3", "f<p>" (case-insensitive).
  static Field parse(const std::string& name);

  bool is_rational() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }
  std::string name() const;  // "Q" or "F_p"

  Scalar normalize(const Scalar& x) const;
  Scalar add(const Scalar& x, const Scalar& y) const { return normalize(x + y); }
  Scalar sub(const Scalar& x, const Scalar& y) const { return normalize(x - y); }
  Scalar mul(const Scalar& x, const Scalar& y) const { return normalize(x * y); }
  Scalar neg(const Scalar& x) const { return normalize(-x); }
  Scalar inv(const Scalar& x) const;  // Error on zero
  Scalar div(const Scalar& x, const Scalar& y) const { return mul(x, inv(y)); }

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

inline constexpr int kMaxVariables = 72;

// Dense exponent vector. Variable 0 is the largest in the lex order, so the
// lexicographic comparison of the exponent arrays is the monomial order.
struct Monomial {
  std::array<std::uint8_t, kMaxVariables> exp{};

  int degree() const;
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  bool is_squarefree() const;
  std::vector<int> support() const;

  friend Monomial operator*(const Monomial& l, const Monomial& r);
  // Requires r | l.
  friend Monomial operator/(const Monomial& l, const Monomial& r);
  friend Monomial lcm(const Monomial& l, const Monomial& r);

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& l, const Monomial& r) {
    return l.exp <=> r.exp;
  }
};

struct Term {
  Monomial monomial;
  Scalar coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

// Terms sorted by strictly decreasing monomial, no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  // Sorts, merges equal monomials, drops zeros.
  Polynomial(std::vector<Term> terms, const Field& field);

  static Polynomial constant(const Scalar& c, const Field& field);
  static Polynomial monomial(const Monomial& m, const Scalar& c, const Field& field);

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  const Term& leading() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  int total_degree() const;

  Polynomial add(const Polynomial& o, const Field& f) const;
  Polynomial sub(const Polynomial& o, const Field& f) const;
  Polynomial mul(const Polynomial& o, const Field& f) const;
  Polynomial scale(const Scalar& c, const Field& f) const;
  // this - c * m * o
  Polynomial sub_multiple(const Scalar& c, const Monomial& m, const Polynomial& o, const Field& f) const;
  Polynomial monic(const Field& f) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Term> terms_;
};

// Polynomial ring on the 2ab tensor variables with the diagonal lex order
// x_111 > x_112 > ... > x_1ab > x_211 > ... > x_2ab.
class Ring {
 public:
  Ring(int a, int b, Field field);

  int a() const { return a_; }
  int b() const { return b_; }
  int num_variables() const { return 2 * a_ * b_; }
  const Field& field() const { return field_; }

  int index(const VariableId& v) const { return variable_index(v, a_, b_); }
  VariableId variable(int index) const { return variable_at(index, a_, b_); }
  Monomial monomial(const std::vector<VariableId>& factors) const;
  Polynomial var(const VariableId& v) const;

  // Variable names x111 ... x2ab; polynomials as "x113*x224 - x124*x213".
  std::string name(int index) const;
  std::string to_string(const Monomial& m) const;
  std::string to_string(const Polynomial& p) const;

 private:
  int a_;
  int b_;
  Field field_;
};

// Validates params and the variable cap; 2ab <= kMaxVariables.
Ring build_ring(const SegreParams& params, const Field& field);

}  // namespace secant
