#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "suq2/algebra.hpp"
#include "suq2/report.hpp"
#include "suq2/sparse_operator.hpp"

/// Truncated Peter-Weyl picture of L^2(SU_q(2)) and the GNS representation.
///
/// All labels are stored in twice-units: twol = 2l, twoi = 2i, twoj = 2j.
namespace suq2::gns {

using qalgebra::AlgebraElement;
using qalgebra::Generator;

struct PWIndex {
  int twol = 0;
  int twoi = 0;
  int twoj = 0;

  /// |i|, |j| <= l and i, j congruent to l mod 1.
  bool valid() const;
  friend auto operator<=>(const PWIndex&, const PWIndex&) = default;
};

/// Basis e^{(l)}_{ij} for 2l <= twolmax, ordered by (twol, twoi, twoj).
class TruncatedSpace {
 public:
  explicit TruncatedSpace(int twolmax);

  int twolmax() const { return twolmax_; }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<PWIndex>& basis() const { return basis_; }
  const PWIndex& at(std::size_t pos) const { return basis_[pos]; }

  bool contains(const PWIndex& e) const { return e.valid() && e.twol <= twolmax_; }
  /// Position of e in the basis; e must be contained.
  std::size_t index_of(const PWIndex& e) const;
  std::optional<std::size_t> find(const PWIndex& e) const;

  /// Positions with twol <= twolmax - margin.
  std::vector<std::size_t> interior(int margin) const;

  static std::size_t dimension_for(int twolmax);

 private:
  int twolmax_;
  std::vector<PWIndex> basis_;
};

enum class CoefficientKind { aPlus, aMinus, cPlus, cMinus };

/// Closed-form GNS coefficients a_{+-}(l,i,j), c_{+-}(l,i,j). Zero whenever
/// the target label leaves the admissible range. Throws QOutOfRange.
double coefficient(CoefficientKind kind, const PWIndex& e, double q);

/// Finitely supported vectors in the untruncated space.
using SparseVector = std::map<PWIndex, double>;

/// pi(g) applied to a finitely supported vector; components with
/// twol > twolmax (when given) are dropped.
SparseVector apply_generator(Generator g, const SparseVector& v, double q,
                             std::optional<int> twolmax = std::nullopt);
/// pi(x) v for an algebra element.
SparseVector apply_element(const AlgebraElement& x, const SparseVector& v, double q,
                           std::optional<int> twolmax = std::nullopt);

inline SparseVector vacuum() { return {{PWIndex{0, 0, 0}, 1.0}}; }

SparseOperator build_left_mult(Generator g, const TruncatedSpace& space, double q);

/// Left regular representation on a fixed truncation, generator matrices cached.
class LeftRegular {
 public:
  LeftRegular(const TruncatedSpace& space, double q);

  const TruncatedSpace& space() const { return space_; }
  double q() const { return q_; }
  const SparseOperator& generator(Generator g) const;
  /// Exact on interior(x.degree()).
  SparseOperator represent(const AlgebraElement& x) const;

 private:
  TruncatedSpace space_;
  double q_;
  std::array<SparseOperator, 4> gens_;
};

SparseOperator represent(const AlgebraElement& x, const TruncatedSpace& space, double q);

/// The five defining relations plus unitarity of the fundamental matrix,
/// measured on interior(2). Failures are reported, never thrown.
Report verify_relations(const TruncatedSpace& space, double q, double tol);

/// H_k = { e^{(l)}_{ij} : 2j = -k }, positions in basis order.
std::vector<std::size_t> weight_subspace(const TruncatedSpace& space, int k);

/// Number of V_l sectors of H_k at the given twol (0 or 1 for this action).
int sector_count(const TruncatedSpace& space, int k, int twol);

}  // namespace suq2::gns
