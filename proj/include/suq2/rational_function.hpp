#pragma once

#include <string>
#include <vector>

#include "suq2/laurent.hpp"

namespace suq2::qalgebra {

/// Polynomial in q over the rationals, ascending coefficients, no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  explicit Polynomial(const Rational& constant);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& leading() const { return coeffs_.back(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  Polynomial scaled(const Rational& c) const;
  /// Quotient and remainder; divisor must be nonzero.
  static void divmod(const Polynomial& a, const Polynomial& b, Polynomial& quot, Polynomial& rem);
  static Polynomial gcd(Polynomial a, Polynomial b);

  double evaluate(double q) const;
  LaurentQ to_laurent() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Element of Q(q) kept as num/den with gcd(num, den) = 1 and den monic.
class RationalFunction {
 public:
  RationalFunction() : den_(Rational(1)) {}
  RationalFunction(long c);  // NOLINT(google-explicit-constructor)
  explicit RationalFunction(const LaurentQ& x);
  RationalFunction(Polynomial num, Polynomial den);

  bool is_zero() const { return num_.is_zero(); }
  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  double evaluate(double q) const;
  /// "(num)/(den)" with both sides in LaurentQ text form.
  std::string to_string() const;

 private:
  void normalize();
  Polynomial num_;
  Polynomial den_;
};

}  // namespace suq2::qalgebra
