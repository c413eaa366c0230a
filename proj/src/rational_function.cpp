#include "suq2/rational_function.hpp"

#include <algorithm>
#include <utility>

#include "suq2/errors.hpp"

namespace suq2::qalgebra {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(const Rational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + b.scaled(-1); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::scaled(const Rational& c) const {
  std::vector<Rational> out = coeffs_;
  for (auto& x : out) x *= c;
  return Polynomial(std::move(out));
}

void Polynomial::divmod(const Polynomial& a, const Polynomial& b, Polynomial& quot, Polynomial& rem) {
  if (b.is_zero()) throw Error("polynomial division by zero");
  std::vector<Rational> r = a.coeffs_;
  const int db = b.degree();
  std::vector<Rational> qc(a.degree() >= db ? static_cast<std::size_t>(a.degree() - db + 1) : 0);
  for (int d = a.degree(); d >= db; --d) {
    const Rational f = r[static_cast<std::size_t>(d)] / b.leading();
    if (f == 0) continue;
    qc[static_cast<std::size_t>(d - db)] = f;
    for (int k = 0; k <= db; ++k) r[static_cast<std::size_t>(d - db + k)] -= f * b.coeffs_[static_cast<std::size_t>(k)];
  }
  quot = Polynomial(std::move(qc));
  rem = Polynomial(std::move(r));
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial quot, rem;
    divmod(a, b, quot, rem);
    a = std::move(b);
    b = std::move(rem);
  }
  if (a.is_zero()) return a;
  return a.scaled(Rational(1) / a.leading());
}

double Polynomial::evaluate(double q) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + it->get_d();
  return acc;
}

LaurentQ Polynomial::to_laurent() const {
  LaurentQ out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    out += LaurentQ::monomial(static_cast<int>(i), coeffs_[i]);
  return out;
}

// ------------------------------------------------------------------------

RationalFunction::RationalFunction(long c) : num_(Rational(c)), den_(Rational(1)) {}

RationalFunction::RationalFunction(const LaurentQ& x) : den_(Rational(1)) {
  if (x.is_zero()) return;
  const int shift = std::min(0, x.min_exponent());
  std::vector<Rational> c(static_cast<std::size_t>(x.max_exponent() - shift + 1));
  for (const auto& [e, v] : x.coefficients()) c[static_cast<std::size_t>(e - shift)] = v;
  num_ = Polynomial(std::move(c));
  if (shift < 0) {
    std::vector<Rational> d(static_cast<std::size_t>(-shift + 1));
    d.back() = 1;
    den_ = Polynomial(std::move(d));
  }
  normalize();
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(Rational(1));
    return;
  }
  const Polynomial g = Polynomial::gcd(num_, den_);
  if (g.degree() > 0) {
    Polynomial quot, rem;
    Polynomial::divmod(num_, g, quot, rem);
    num_ = quot;
    Polynomial::divmod(den_, g, quot, rem);
    den_ = quot;
  }
  const Rational lead = den_.leading();
  if (lead != 1) {
    num_ = num_.scaled(Rational(1) / lead);
    den_ = den_.scaled(Rational(1) / lead);
  }
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a) {
  RationalFunction out = a;
  out.num_ = out.num_.scaled(-1);
  return out;
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw Error("division by zero rational function");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

double RationalFunction::evaluate(double q) const { return num_.evaluate(q) / den_.evaluate(q); }

std::string RationalFunction::to_string() const {
  return "(" + num_.to_laurent().to_string() + ")/(" + den_.to_laurent().to_string() + ")";
}

}  // namespace suq2::qalgebra
