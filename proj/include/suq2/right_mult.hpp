#pragma once

#include <array>
#include <vector>

#include "suq2/gns.hpp"

namespace suq2::gns {

/// Right multiplication R(x) Lambda(y) = Lambda(y x) on the GNS space,
/// reconstructed from the cyclic vector.
///
/// Every basis vector e at level twol >= 1 is written as
///   e = (pi(g) e' - c_low e'') / c_up
/// with e' one level down, g the generator whose upward coefficient c_up is
/// largest in modulus, and e'' the single lower-level component of pi(g) e'.
/// Unwinding this gives e = Lambda(w_e) for a polynomial w_e, and then
///   R(h) e = (pi(g) R(h) e' - c_low R(h) e'') / c_up,   R(h) vacuum = pi(h) vacuum.
/// The induced normalization of e^{(l)}_{ij} against matrix coefficients is
/// whatever the left action fixes; nothing downstream depends on it.
class RightRegular {
 public:
  /// Throws RankDeficient if some basis vector has no usable upward path.
  RightRegular(const TruncatedSpace& space, double q);

  const TruncatedSpace& space() const { return space_; }
  double q() const { return q_; }

  /// R(g) truncated to the space. Exact on interior(1).
  const SparseOperator& generator(Generator g) const;
  /// R(y) as an antihomomorphism: R(g_1 ... g_n) = R(g_n) ... R(g_1).
  /// Exact on interior(y.degree()).
  SparseOperator represent(const AlgebraElement& y) const;

  /// Untruncated R(g) e for a basis vector of the space.
  const SparseVector& image(Generator g, std::size_t pos) const;

 private:
  TruncatedSpace space_;
  double q_;
  std::array<std::vector<SparseVector>, 4> images_;
  std::array<SparseOperator, 4> gens_;
};

SparseOperator build_right_mult(Generator g, const TruncatedSpace& space, double q);

}  // namespace suq2::gns
