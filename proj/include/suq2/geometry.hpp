#pragma once

#include <map>
#include <vector>

#include "suq2/algebra.hpp"
#include "suq2/gns.hpp"
#include "suq2/report.hpp"
#include "suq2/right_mult.hpp"

/// Podles sphere, line bundles, the Dirac operator and the Drinfeld-double
/// adjoint action, all on truncations of L^2(SU_q(2)).
namespace suq2::geometry {

using gns::SparseOperator;
using gns::TruncatedSpace;
using qalgebra::AlgebraElement;
using qalgebra::Generator;

/// gamma* gamma, alpha gamma*, gamma alpha*: the weight-zero generators.
std::vector<AlgebraElement> podles_generators();

struct GenerationCount {
  int degree = 0;
  int weight_zero_monomials = 0;  // PBW monomials with wt_R = 0, degree <= degree
  int span_rank = 0;              // rank of products of Podles generators of degree <= degree
};

/// Dimension count certifying that the Podles generators span the weight-zero
/// part in each degree. The rank is taken exactly over Q at q = 1/3.
GenerationCount podles_generation_count(int degree);

/// Section space of E_k: the H_k part of a truncation, in basis order.
class SectionSpace {
 public:
  SectionSpace(const TruncatedSpace& space, int k);

  int k() const { return k_; }
  std::size_t size() const { return positions_.size(); }
  /// Positions inside the ambient truncated space.
  const std::vector<std::size_t>& positions() const { return positions_; }
  int twol_at(std::size_t local) const { return levels_[local]; }
  /// twol -> number of V_l sectors.
  std::map<int, int> sectors() const;

 private:
  int k_;
  std::vector<std::size_t> positions_;
  std::vector<int> levels_;
  std::vector<int> twoi_;
};

/// H_+ (+) H_- with H_+- = L^2(E_{+-1}); local order is all of H_+, then H_-.
class SpinorSpace {
 public:
  explicit SpinorSpace(const TruncatedSpace& space);

  const TruncatedSpace& space() const { return space_; }
  const SectionSpace& plus() const { return plus_; }
  const SectionSpace& minus() const { return minus_; }
  std::size_t size() const { return plus_.size() + minus_.size(); }
  int grading(std::size_t local) const { return local < plus_.size() ? 1 : -1; }
  int twol_at(std::size_t local) const;

  /// Positions of the spinor basis inside the ambient space.
  std::vector<std::size_t> ambient_positions() const;
  /// Compress an ambient operator onto the spinor space.
  SparseOperator compress(const SparseOperator& ambient) const;
  /// Local positions with lo <= twol <= hi.
  std::vector<std::size_t> band(int lo, int hi) const;

 private:
  TruncatedSpace space_;
  SectionSpace plus_;
  SectionSpace minus_;
};

/// [[0, upper], [lower, 0]] with upper : H_- -> H_+ and lower : H_+ -> H_-.
struct OddOperator {
  SparseOperator upper;
  SparseOperator lower;

  SparseOperator full() const;
};

/// [a]_q = (q^a - q^{-a}) / (q - q^{-1}).
double q_number(double a, double q);

/// D^{+-} e^{(l)}_{i,-+1/2} = [l + 1/2]_q e^{(l)}_{i,+-1/2}, sectors matched by i.
OddOperator build_dirac(const TruncatedSpace& space, double q);
/// Same intertwiner with every scalar replaced by 1.
OddOperator build_phase(const TruncatedSpace& space, double q);

/// |D| per sector against [l+1/2]_q, F^2 = 1 and F = F* exactly, ker D = 0.
Report spectrum_report(const TruncatedSpace& space, double q, double tol);

/// ||P [F, A] P|| for P the projection onto sectors L0 <= twol <= upper_twol.
std::vector<double> tail_norms(const SparseOperator& spinor_op, const SpinorSpace& spinors,
                               const std::vector<int>& cutoffs, int upper_twol);

struct DecayOptions {
  int twolmax = 26;
  std::vector<int> cutoffs = {4, 8, 12, 16, 20};
  double decay_threshold = 1e-6;
};

/// Tail norms of [F, pi(x)] for a weight-homogeneous x with wt_R = 0.
Report commutator_decay(const AlgebraElement& x, double q, const DecayOptions& opts);

/// One term c L(f_(1)) R(delta -> S(f_(2))) of the action on sections.
struct DrinfeldTerm {
  qalgebra::LaurentQ coeff;
  qalgebra::PBWMonomial left;
  AlgebraElement right;
};

/// Symbolic expansion of f . h = f_(1) h (delta -> S(f_(2))).
std::vector<DrinfeldTerm> drinfeld_expansion(const AlgebraElement& f);
/// The action on algebra elements.
AlgebraElement drinfeld_act(const AlgebraElement& f, const AlgebraElement& h);

SparseOperator drinfeld_action(const AlgebraElement& f, const gns::LeftRegular& left,
                               const gns::RightRegular& right);
SparseOperator drinfeld_action(Generator g, const TruncatedSpace& space, double q);

/// Tail norms of [F, f . -] on the spinor space, with a truncation
/// stability check against a space two levels larger.
Report drinfeld_commutator_decay(Generator g, double q, const DecayOptions& opts);

}  // namespace suq2::geometry
