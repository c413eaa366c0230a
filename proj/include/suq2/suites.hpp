#pragma once

#include <cstdint>
#include <optional>

#include "suq2/algebra.hpp"
#include "suq2/report.hpp"

/// Verification suites over the exact algebra and the Haar state.
namespace suq2::suites {

/// Hopf *-algebra axioms on every PBW monomial of degree <= degree, all exact:
/// coassociativity, counit, antipode convolution, S(S(x*)*) = x,
/// S^{-1} = delta -> S(.) <- delta^{-1}, the *-compatibility of Delta, and
/// normal_form against the independent rewriting system with its critical pairs.
Report check_hopf(int degree);

struct HaarSuiteOptions {
  double q = 0.5;
  int cutoff = 20;
  double tol = 1e-10;
  std::uint64_t seed = 42;
  int modular_degree = 3;
  int oracle_degree = 4;
  int positivity_samples = 16;
  std::optional<qalgebra::AlgebraElement> element;
};

/// Modular property over monomial pairs, agreement with the invariance
/// oracle and the closed form on (gamma gamma*)^b, and positivity of
/// haar(x* x) on seeded random elements.
Report haar_suite(const HaarSuiteOptions& opts);

}  // namespace suq2::suites
