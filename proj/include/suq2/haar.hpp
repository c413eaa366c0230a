#pragma once

#include <map>
#include <vector>

#include "suq2/algebra.hpp"
#include "suq2/rational_function.hpp"

namespace suq2::qalgebra {

/// Haar state as the vacuum expectation <Omega, pi(x) Omega> in the GNS
/// representation truncated at twol <= cutoff.
///
/// Throws QOutOfRange unless 0 < q < 1, and CutoffTooSmall when
/// x.degree() > cutoff.
double haar(const AlgebraElement& x, double q, int cutoff);

/// Exact Haar values recovered from left invariance alone.
struct HaarOracle {
  int max_degree = 0;
  /// Values on weight-zero monomials (wt_L = wt_R = 0) of degree <= max_degree.
  std::map<PBWMonomial, RationalFunction> values;
  /// Every monomial whose value the truncated system pins down.
  std::map<PBWMonomial, RationalFunction> determined;
  /// Number of unknowns left free by the truncated system.
  int rank_defect = 0;
  std::vector<PBWMonomial> undetermined;

  /// Value on a determined monomial; throws SingularSystem otherwise.
  const RationalFunction& at(const PBWMonomial& m) const;
};

/// Solves (id (x) phi)Delta(x) = phi(x) 1 and phi(1) = 1 over Q(q) for all
/// monomials x of degree <= max_degree. Throws SingularSystem when a
/// weight-zero monomial is left undetermined or the system is inconsistent.
HaarOracle haar_invariance_oracle(int max_degree);

}  // namespace suq2::qalgebra
