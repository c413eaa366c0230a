#include <doctest.h>

#include <cmath>
#include <random>

#include "suq2/errors.hpp"
#include "suq2/haar.hpp"
#include "suq2/suites.hpp"
#include "test_support.hpp"

using namespace suq2;
using namespace suq2::qalgebra;

namespace {

// Closed form on (gamma gamma*)^b, independent of both the GNS and the solver.
double power_of_gg(double q, int b) { return (1 - q * q) / (1 - std::pow(q, 2 * b + 2)); }

}  // namespace

TEST_CASE("Haar state on small elements") {
  CHECK(haar(AlgebraElement::one(), 0.5, 4) == doctest::Approx(1.0));
  CHECK(haar(AlgebraElement(Generator::alpha), 0.5, 4) == 0.0);
  const AlgebraElement gsg = AlgebraElement(Generator::gammaStar) * AlgebraElement(Generator::gamma);
  CHECK(std::abs(haar(gsg, 0.5, 4) - 0.8) < 1e-14);
}

TEST_CASE("Haar state matches the closed form on (gamma gamma*)^b") {
  for (double q : {0.3, 0.5, 0.8})
    for (int b = 0; b <= 6; ++b) {
      const AlgebraElement x(PBWMonomial{Kind::plain, 0, b, b});
      CHECK(std::abs(haar(x, q, 12) - power_of_gg(q, b)) < 1e-13);
    }
}

TEST_CASE("Haar state vanishes off weight zero") {
  for (const auto& m : monomials_up_to_degree(4)) {
    const auto w = weights(m);
    if (w.left != 0 || w.right != 0) CHECK(haar(AlgebraElement(m), 0.5, 8) == 0.0);
  }
}

TEST_CASE("Haar state input validation") {
  CHECK_THROWS_AS(haar(AlgebraElement(PBWMonomial{Kind::plain, 0, 3, 3}), 0.5, 4), CutoffTooSmall);
  CHECK_THROWS_AS(haar(AlgebraElement::one(), 1.0, 4), QOutOfRange);
}

TEST_CASE("invariance oracle by hand at degree 2") {
  const HaarOracle o = haar_invariance_oracle(2);
  CHECK(o.rank_defect == 0);
  CHECK(o.at(PBWMonomial::one()) == RationalFunction(1));
  const Polynomial one_plus_q2({Rational(1), Rational(0), Rational(1)});
  CHECK(o.at(PBWMonomial{Kind::plain, 0, 1, 1}) == RationalFunction(Polynomial(Rational(1)), one_plus_q2));
  CHECK(o.at(PBWMonomial{Kind::plain, 1, 1, 0}).is_zero());
}

TEST_CASE("invariance oracle agrees with the GNS vacuum expectation") {
  const HaarOracle o = haar_invariance_oracle(4);
  CHECK(o.rank_defect == 0);
  CHECK(o.values.size() == 3);
  for (double q : {0.3, 0.5, 0.8})
    for (const auto& [m, v] : o.values) CHECK(std::abs(v.evaluate(q) - haar(AlgebraElement(m), q, 8)) <= 1e-10);
}

TEST_CASE("Haar state is left invariant numerically") {
  // (id (x) h) Delta(x) = h(x) 1 at q = 0.5 for monomials up to degree 4.
  const double q = 0.5;
  for (const auto& m : monomials_up_to_degree(4)) {
    const TensorElement d = comultiply(AlgebraElement(m));
    std::map<PBWMonomial, double> lhs;
    for (const auto& [k, c] : d.terms()) lhs[k[0]] += c.evaluate(q) * haar(AlgebraElement(k[1]), q, 8);
    const double hx = haar(AlgebraElement(m), q, 8);
    for (const auto& [k, v] : lhs) CHECK(std::abs(v - (k.is_one() ? hx : 0.0)) < 1e-12);
  }
}

TEST_CASE("Haar state is positive on x* x") {
  std::mt19937_64 rng(4242);
  for (int k = 0; k < 25; ++k) {
    const auto x = testing_support::random_element(rng, 3, 4);
    if (x.is_zero()) continue;
    CHECK(haar(star(x) * x, 0.5, 8) > 0.0);
  }
}

TEST_CASE("modular property on a few pairs") {
  const double q = 0.3;
  const auto monos = monomials_up_to_degree(2);
  for (const auto& x : monos)
    for (const auto& y : monos) {
      const AlgebraElement X(x), Y(y);
      CHECK(std::abs(haar(X * Y, q, 8) - haar(Y * modular_twist(X), q, 8)) <= 1e-12);
    }
}

TEST_CASE("Haar suite passes at default settings") {
  suites::HaarSuiteOptions o;
  o.cutoff = 8;
  const Report r = suites::haar_suite(o);
  INFO(r.to_text());
  CHECK(r.pass());
}

TEST_CASE("Hopf suite passes through degree 3") {
  const Report r = suites::check_hopf(3);
  INFO(r.to_text());
  CHECK(r.pass());
}
