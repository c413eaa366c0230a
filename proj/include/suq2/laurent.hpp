#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <string_view>

namespace suq2::qalgebra {

/// Exact rational number.
using Rational = mpq_class;

/// Laurent polynomial in the formal parameter q with rational coefficients.
///
/// Stored sparsely as exponent -> coefficient; zero coefficients are never
/// kept, so structural equality is mathematical equality.
class LaurentQ {
 public:
  LaurentQ() = default;
  LaurentQ(long constant);  // NOLINT(google-explicit-constructor)
  explicit LaurentQ(const Rational& constant);

  /// c * q^exponent
  static LaurentQ monomial(int exponent, const Rational& c = 1);
  static LaurentQ q_pow(int exponent) { return monomial(exponent); }

  bool is_zero() const { return coeffs_.empty(); }
  const std::map<int, Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(int exponent) const;

  /// Lowest and highest exponents; undefined on zero.
  int min_exponent() const { return coeffs_.begin()->first; }
  int max_exponent() const { return coeffs_.rbegin()->first; }

  LaurentQ& operator+=(const LaurentQ& other);
  LaurentQ& operator-=(const LaurentQ& other);
  LaurentQ& operator*=(const LaurentQ& other);

  friend LaurentQ operator+(LaurentQ a, const LaurentQ& b) { return a += b; }
  friend LaurentQ operator-(LaurentQ a, const LaurentQ& b) { return a -= b; }
  friend LaurentQ operator*(const LaurentQ& a, const LaurentQ& b);
  friend LaurentQ operator-(const LaurentQ& a);
  friend bool operator==(const LaurentQ& a, const LaurentQ& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Multiply by q^shift.
  LaurentQ shifted(int shift) const;

  double evaluate(double q) const;
  Rational evaluate(const Rational& q) const;

  /// Canonical text, e.g. "1*q^0 + -3/2*q^2"; zero prints as "0".
  std::string to_string() const;
  static LaurentQ parse(std::string_view text);

 private:
  void add_term(int exponent, const Rational& c);

  std::map<int, Rational> coeffs_;
};

}  // namespace suq2::qalgebra
