#include <doctest.h>

#include <cmath>
#include <random>

#include "suq2/errors.hpp"
#include "suq2/laurent.hpp"
#include "suq2/rational_function.hpp"
#include "test_support.hpp"

using namespace suq2;
using namespace suq2::qalgebra;

TEST_CASE("Laurent polynomials keep no zero coefficients") {
  const LaurentQ x = LaurentQ::monomial(2, 3) + LaurentQ::monomial(-1, Rational(1, 2));
  const LaurentQ z = x - x;
  CHECK(z.is_zero());
  CHECK(z.coefficients().empty());
  CHECK((LaurentQ::monomial(4, 0)).is_zero());
}

TEST_CASE("Laurent arithmetic on small examples") {
  const LaurentQ q = LaurentQ::q_pow(1);
  const LaurentQ qi = LaurentQ::q_pow(-1);
  CHECK(q * qi == LaurentQ(1));
  const LaurentQ s = (q + qi) * (q + qi);
  CHECK(s == LaurentQ::q_pow(2) + LaurentQ(2) + LaurentQ::q_pow(-2));
  CHECK(s.min_exponent() == -2);
  CHECK(s.max_exponent() == 2);
  CHECK(q.shifted(3) == LaurentQ::q_pow(4));
  CHECK(s.coefficient(0) == Rational(2));
  CHECK(s.coefficient(1) == Rational(0));
}

TEST_CASE("Laurent text round trip") {
  std::mt19937_64 rng(7);
  CHECK(LaurentQ().to_string() == "0");
  CHECK(LaurentQ::parse("0").is_zero());
  for (int k = 0; k < 50; ++k) {
    const LaurentQ x = testing_support::random_laurent(rng, 4, 5);
    CHECK(LaurentQ::parse(x.to_string()) == x);
  }
  CHECK_THROWS_AS(LaurentQ::parse("3*x^2"), ParseError);
}

TEST_CASE("evaluation at a numeric q is a ring homomorphism") {
  std::mt19937_64 rng(11);
  for (double q : {0.3, 0.5, 0.8}) {
    for (int k = 0; k < 40; ++k) {
      const LaurentQ a = testing_support::random_laurent(rng);
      const LaurentQ b = testing_support::random_laurent(rng);
      const double scale = 1.0 + std::abs(a.evaluate(q) * b.evaluate(q));
      CHECK(std::abs((a + b).evaluate(q) - (a.evaluate(q) + b.evaluate(q))) <= 1e-12 * scale);
      CHECK(std::abs((a * b).evaluate(q) - a.evaluate(q) * b.evaluate(q)) <= 1e-12 * scale);
    }
  }
}

TEST_CASE("exact evaluation at a rational point") {
  const LaurentQ x = LaurentQ::q_pow(2) - LaurentQ::monomial(-1, 3);
  CHECK(x.evaluate(Rational(1, 2)) == Rational(1, 4) - Rational(6));
}

TEST_CASE("ring axioms hold on random Laurent polynomials") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 40; ++k) {
    const LaurentQ a = testing_support::random_laurent(rng);
    const LaurentQ b = testing_support::random_laurent(rng);
    const LaurentQ c = testing_support::random_laurent(rng);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
  }
}

TEST_CASE("rational functions reduce to lowest terms") {
  const Polynomial one_plus_q2({Rational(1), Rational(0), Rational(1)});
  const RationalFunction f(Polynomial(Rational(1)), one_plus_q2);
  const RationalFunction g = f * RationalFunction(LaurentQ(1) + LaurentQ::q_pow(2));
  CHECK(g == RationalFunction(1));
  CHECK(std::abs(f.evaluate(0.5) - 0.8) < 1e-15);
  CHECK((f - f).is_zero());
  CHECK(f / f == RationalFunction(1));
}

TEST_CASE("polynomial gcd") {
  // (1 + q)(1 - q) and (1 + q)^2 share 1 + q.
  const Polynomial a({Rational(1), Rational(0), Rational(-1)});
  const Polynomial b({Rational(1), Rational(2), Rational(1)});
  CHECK(Polynomial::gcd(a, b) == Polynomial({Rational(1), Rational(1)}));
}

TEST_CASE("q must lie strictly inside (0,1) for numeric work") {
  CHECK_THROWS_AS(require_q_in_open_unit_interval(1.0), QOutOfRange);
  CHECK_THROWS_AS(require_q_in_open_unit_interval(0.0), QOutOfRange);
  CHECK_THROWS_AS(require_q_in_open_unit_interval(-0.5), QOutOfRange);
  CHECK_NOTHROW(require_q_in_open_unit_interval(0.999));
}
