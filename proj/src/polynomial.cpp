#include "secant/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "secant/errors.hpp"

namespace secant {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p)) throw ValidationError("field characteristic " + std::to_string(p) + " is not prime");
  return Field(p);
}

Field Field::parse(const std::string& name) {
  std::string s;
  for (char c : name) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s == "q" || s == "qq" || s == "rationals") return rationals();
  if (s.size() >= 2 && s[0] == 'f') {
    std::string digits = s.substr(s[1] == '_' ? 2 : 1);
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) &&
        digits.size() < 10)
      return prime(static_cast<std::uint32_t>(std::stoul(digits)));
  }
  throw ValidationError("unknown field '" + name + "' (expected q, f2, f3 or f<prime>)");
}

std::string Field::name() const { return p_ == 0 ? "Q" : "F_" + std::to_string(p_); }

Scalar Field::normalize(const Scalar& x) const {
  if (p_ == 0) return x;
  const mpz_class p(static_cast<unsigned long>(p_));
  mpz_class num = x.get_num() % p;
  if (num < 0) num += p;
  if (x.get_den() == 1) return Scalar(num);
  mpz_class den = x.get_den() % p;
  if (den == 0) throw Error("denominator vanishes in " + name());
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  mpz_class r = (num * inv) % p;
  return Scalar(r);
}

Scalar Field::inv(const Scalar& x) const {
  if (x == 0) throw Error("division by zero in " + name());
  if (p_ == 0) return 1 / x;
  const mpz_class p(static_cast<unsigned long>(p_));
  mpz_class inv;
  const mpz_class v = x.get_num();
  mpz_invert(inv.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
  return Scalar(inv);
}

int Monomial::degree() const {
  int d = 0;
  for (auto e : exp) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (int i = 0; i < kMaxVariables; ++i)
    if (exp[static_cast<std::size_t>(i)] > other.exp[static_cast<std::size_t>(i)]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (int i = 0; i < kMaxVariables; ++i)
    if (exp[static_cast<std::size_t>(i)] && other.exp[static_cast<std::size_t>(i)]) return false;
  return true;
}

bool Monomial::is_squarefree() const {
  return std::all_of(exp.begin(), exp.end(), [](std::uint8_t e) { return e <= 1; });
}

std::vector<int> Monomial::support() const {
  std::vector<int> out;
  for (int i = 0; i < kMaxVariables; ++i)
    if (exp[static_cast<std::size_t>(i)]) out.push_back(i);
  return out;
}

Monomial operator*(const Monomial& l, const Monomial& r) {
  Monomial m;
  for (std::size_t i = 0; i < m.exp.size(); ++i) {
    const int e = l.exp[i] + r.exp[i];
    if (e > 255) throw Error("monomial exponent overflow");
    m.exp[i] = static_cast<std::uint8_t>(e);
  }
  return m;
}

Monomial operator/(const Monomial& l, const Monomial& r) {
  Monomial m;
  for (std::size_t i = 0; i < m.exp.size(); ++i) m.exp[i] = static_cast<std::uint8_t>(l.exp[i] - r.exp[i]);
  return m;
}

Monomial lcm(const Monomial& l, const Monomial& r) {
  Monomial m;
  for (std::size_t i = 0; i < m.exp.size(); ++i) m.exp[i] = std::max(l.exp[i], r.exp[i]);
  return m;
}

Polynomial::Polynomial(std::vector<Term> terms, const Field& field) {
  std::sort(terms.begin(), terms.end(), [](const Term& l, const Term& r) { return l.monomial > r.monomial; });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().monomial == t.monomial) {
      terms_.back().coeff = field.add(terms_.back().coeff, t.coeff);
      if (terms_.back().coeff == 0) terms_.pop_back();
      continue;
    }
    t.coeff = field.normalize(t.coeff);
    if (t.coeff != 0) terms_.push_back(std::move(t));
  }
}

Polynomial Polynomial::constant(const Scalar& c, const Field& field) {
  return Polynomial({Term{Monomial{}, c}}, field);
}

Polynomial Polynomial::monomial(const Monomial& m, const Scalar& c, const Field& field) {
  return Polynomial({Term{m, c}}, field);
}

int Polynomial::total_degree() const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

namespace {

// Merge of two sorted term lists: l + sign * r.
std::vector<Term> merge(const std::vector<Term>& l, const std::vector<Term>& r, bool subtract, const Field& f) {
  std::vector<Term> out;
  out.reserve(l.size() + r.size());
  std::size_t i = 0, j = 0;
  while (i < l.size() || j < r.size()) {
    if (j == r.size() || (i < l.size() && l[i].monomial > r[j].monomial)) {
      out.push_back(l[i++]);
    } else if (i == l.size() || r[j].monomial > l[i].monomial) {
      out.push_back({r[j].monomial, subtract ? f.neg(r[j].coeff) : r[j].coeff});
      ++j;
    } else {
      Scalar c = subtract ? f.sub(l[i].coeff, r[j].coeff) : f.add(l[i].coeff, r[j].coeff);
      if (c != 0) out.push_back({l[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial Polynomial::add(const Polynomial& o, const Field& f) const {
  Polynomial p;
  p.terms_ = merge(terms_, o.terms_, false, f);
  return p;
}

Polynomial Polynomial::sub(const Polynomial& o, const Field& f) const {
  Polynomial p;
  p.terms_ = merge(terms_, o.terms_, true, f);
  return p;
}

Polynomial Polynomial::mul(const Polynomial& o, const Field& f) const {
  std::vector<Term> all;
  all.reserve(terms_.size() * o.terms_.size());
  for (const auto& x : terms_)
    for (const auto& y : o.terms_) all.push_back({x.monomial * y.monomial, f.mul(x.coeff, y.coeff)});
  return Polynomial(std::move(all), f);
}

Polynomial Polynomial::scale(const Scalar& c, const Field& f) const {
  Polynomial p;
  if (f.normalize(c) == 0) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.monomial, f.mul(t.coeff, c)});
  return p;
}

Polynomial Polynomial::sub_multiple(const Scalar& c, const Monomial& m, const Polynomial& o, const Field& f) const {
  Polynomial shifted;
  shifted.terms_.reserve(o.terms_.size());
  for (const auto& t : o.terms_) shifted.terms_.push_back({t.monomial * m, f.mul(t.coeff, c)});
  return sub(shifted, f);
}

Polynomial Polynomial::monic(const Field& f) const {
  if (is_zero()) return *this;
  return scale(f.inv(leading().coeff), f);
}

Ring::Ring(int a, int b, Field field) : a_(a), b_(b), field_(field) {
  SegreParams{a, b, std::nullopt}.validate();
  if (num_variables() > kMaxVariables)
    throw BudgetExceededError("ring needs " + std::to_string(num_variables()) + " variables, above the cap of " +
                              std::to_string(kMaxVariables));
}

Monomial Ring::monomial(const std::vector<VariableId>& factors) const {
  Monomial m;
  for (const auto& v : factors) {
    const int i = index(v);
    if (i < 0 || i >= num_variables() || v.slice < 1 || v.slice > 2 || v.second < 1 || v.second > a_ ||
        v.third < 1 || v.third > b_)
      throw ValidationError("variable outside the (2,a,b) ring");
    m.exp[static_cast<std::size_t>(i)] += 1;
  }
  return m;
}

Polynomial Ring::var(const VariableId& v) const { return Polynomial::monomial(monomial({v}), 1, field_); }

std::string Ring::name(int index) const {
  const auto v = variable(index);
  return "x" + std::to_string(v.slice) + std::to_string(v.second) + std::to_string(v.third);
}

std::string Ring::to_string(const Monomial& m) const {
  std::string out;
  for (int i = 0; i < num_variables(); ++i) {
    for (int e = 0; e < m.exp[static_cast<std::size_t>(i)]; ++e) {
      if (!out.empty()) out += '*';
      out += name(i);
    }
  }
  return out.empty() ? "1" : out;
}

std::string Ring::to_string(const Polynomial& p) const {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms()) {
    Scalar c = t.coeff;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) os << (negative ? "-" : "");
    else os << (negative ? " - " : " + ");
    const bool unit_monomial = t.monomial == Monomial{};
    if (c != 1 || unit_monomial) {
      os << c.get_str();
      if (!unit_monomial) os << '*';
    }
    if (!unit_monomial) os << to_string(t.monomial);
    first = false;
  }
  return os.str();
}

Ring build_ring(const SegreParams& params, const Field& field) {
  params.validate();
  return Ring(params.a, params.b, field);
}

}  // namespace secant
