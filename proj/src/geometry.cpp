#include "suq2/geometry.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "suq2/errors.hpp"

namespace suq2::geometry {

namespace {

using qalgebra::LaurentQ;
using qalgebra::PBWMonomial;
using qalgebra::Rational;
using Scalar = SparseOperator::Scalar;

constexpr double kLeakTolerance = 1e-12;
constexpr double kStabilityTolerance = 1e-8;

std::string fmt_le(double x) {
  std::ostringstream os;
  os << "<= " << x;
  return os.str();
}

// Rank over Q of the rows, by fraction-exact elimination.
int exact_rank(std::vector<std::vector<Rational>> rows) {
  int rank = 0;
  const std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t col = 0; col < ncols && rank < static_cast<int>(rows.size()); ++col) {
    std::size_t piv = static_cast<std::size_t>(rank);
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[static_cast<std::size_t>(rank)]);
    const auto& p = rows[static_cast<std::size_t>(rank)];
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      const Rational f = rows[r][col] / p[col];
      for (std::size_t c = col; c < ncols; ++c) rows[r][c] -= f * p[c];
    }
    ++rank;
  }
  return rank;
}

SparseOperator diagonal_blocks(std::size_t n, const std::vector<double>& diag) {
  std::vector<SparseOperator::Triplet> t;
  t.reserve(n);
  for (std::size_t k = 0; k < n; ++k)
    if (diag[k] != 0.0) t.emplace_back(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k), diag[k]);
  return SparseOperator(n, t);
}

// Max |entry| of ambient columns in `cols` landing on rows outside `allowed`.
double leakage(const SparseOperator& op, const std::vector<std::size_t>& cols,
               const std::vector<std::size_t>& allowed) {
  std::vector<char> ok(op.dim(), 0);
  for (auto r : allowed) ok[r] = 1;
  double worst = 0.0;
  for (auto c : cols) {
    for (SparseOperator::Matrix::InnerIterator it(op.matrix(), static_cast<Eigen::Index>(c)); it; ++it)
      if (!ok[static_cast<std::size_t>(it.row())]) worst = std::max(worst, std::abs(it.value()));
  }
  return worst;
}

// An empty band would report a zero tail and pass vacuously.
void require_band(const DecayOptions& opts, int margin) {
  for (int L0 : opts.cutoffs) {
    if (L0 > opts.twolmax - margin) {
      std::ostringstream msg;
      msg << "cutoff L0=" << L0 << " exceeds twolmax - margin = " << opts.twolmax - margin;
      throw CutoffTooSmall(msg.str());
    }
  }
}

// Power iteration stops at relative change 1e-6, so two tails are only
// ordered up to that resolution.
constexpr double kNormResolution = 1e-6;

bool non_increasing(const std::vector<double>& v) {
  for (std::size_t k = 1; k < v.size(); ++k)
    if (v[k] > v[k - 1] * (1.0 + kNormResolution)) return false;
  return true;
}

void add_decay_checks(Report& r, const std::vector<double>& tails, const DecayOptions& opts) {
  r.add("tails non-increasing in L0", non_increasing(tails), Json(tails), "t(L0') <= t(L0) (1 + 1e-6) for L0 < L0'");
  const double last = tails.empty() ? 0.0 : tails.back();
  r.add("final tail below decay threshold", last <= opts.decay_threshold, last, fmt_le(opts.decay_threshold));
  r.data["cutoffs"] = opts.cutoffs;
  r.data["tails"] = tails;
}

// In-band spinor positions of the interior columns, for leakage checks.
std::vector<std::size_t> interior_positions(const SectionSpace& s, int upper) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < s.size(); ++k)
    if (s.twol_at(k) <= upper) out.push_back(s.positions()[k]);
  return out;
}

}  // namespace

std::vector<AlgebraElement> podles_generators() {
  using G = Generator;
  return {AlgebraElement(G::gammaStar) * AlgebraElement(G::gamma),
          AlgebraElement(G::alpha) * AlgebraElement(G::gammaStar),
          AlgebraElement(G::gamma) * AlgebraElement(G::alphaStar)};
}

GenerationCount podles_generation_count(int degree) {
  GenerationCount out;
  out.degree = degree;
  std::vector<PBWMonomial> targets;
  for (const auto& m : qalgebra::monomials_up_to_degree(degree))
    if (qalgebra::weights(m).right == 0) targets.push_back(m);
  out.weight_zero_monomials = static_cast<int>(targets.size());

  const auto gens = podles_generators();
  std::vector<AlgebraElement> products{AlgebraElement::one()};
  std::vector<AlgebraElement> frontier{AlgebraElement::one()};
  for (int len = 1; 2 * len <= degree; ++len) {
    std::vector<AlgebraElement> next;
    for (const auto& p : frontier)
      for (const auto& g : gens) next.push_back(p * g);
    products.insert(products.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  const Rational q_probe(1, 3);
  std::vector<std::vector<Rational>> rows;
  for (const auto& p : products) {
    std::vector<Rational> row(targets.size());
    for (const auto& [m, c] : p.terms()) {
      auto it = std::lower_bound(targets.begin(), targets.end(), m);
      if (it == targets.end() || *it != m) throw Error("Podles product left the weight-zero span");
      row[static_cast<std::size_t>(it - targets.begin())] = c.evaluate(q_probe);
    }
    rows.push_back(std::move(row));
  }
  out.span_rank = exact_rank(std::move(rows));
  return out;
}

// ------------------------------------------------------------------ spaces

SectionSpace::SectionSpace(const TruncatedSpace& space, int k) : k_(k) {
  positions_ = gns::weight_subspace(space, k);
  for (auto p : positions_) {
    levels_.push_back(space.at(p).twol);
    twoi_.push_back(space.at(p).twoi);
  }
}

std::map<int, int> SectionSpace::sectors() const {
  std::map<int, int> count;
  for (int L : levels_) count[L] += 1;
  std::map<int, int> out;
  for (const auto& [L, n] : count) {
    if (n % (L + 1) != 0) throw Error("section space level is not a union of sectors");
    out[L] = n / (L + 1);
  }
  return out;
}

SpinorSpace::SpinorSpace(const TruncatedSpace& space) : space_(space), plus_(space, 1), minus_(space, -1) {
  if (plus_.size() != minus_.size()) throw Error("H_+ and H_- truncations differ");
  for (std::size_t k = 0; k < plus_.size(); ++k) {
    const auto& a = space_.at(plus_.positions()[k]);
    const auto& b = space_.at(minus_.positions()[k]);
    if (a.twol != b.twol || a.twoi != b.twoi) throw Error("H_+ and H_- sectors are not aligned");
  }
}

int SpinorSpace::twol_at(std::size_t local) const {
  return local < plus_.size() ? plus_.twol_at(local) : minus_.twol_at(local - plus_.size());
}

std::vector<std::size_t> SpinorSpace::ambient_positions() const {
  std::vector<std::size_t> out = plus_.positions();
  out.insert(out.end(), minus_.positions().begin(), minus_.positions().end());
  return out;
}

SparseOperator SpinorSpace::compress(const SparseOperator& ambient) const {
  return ambient.restrict_to(ambient_positions());
}

std::vector<std::size_t> SpinorSpace::band(int lo, int hi) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < size(); ++k)
    if (twol_at(k) >= lo && twol_at(k) <= hi) out.push_back(k);
  return out;
}

SparseOperator OddOperator::full() const {
  const std::size_t n = upper.dim();
  if (lower.dim() != n) throw Error("odd operator blocks must have equal size");
  std::vector<SparseOperator::Triplet> t;
  for (const auto& e : upper.triplets()) t.emplace_back(e.row(), e.col() + static_cast<Eigen::Index>(n), e.value());
  for (const auto& e : lower.triplets()) t.emplace_back(e.row() + static_cast<Eigen::Index>(n), e.col(), e.value());
  return SparseOperator(2 * n, t);
}

double q_number(double a, double q) { return (std::pow(q, a) - std::pow(q, -a)) / (q - 1.0 / q); }

OddOperator build_dirac(const TruncatedSpace& space, double q) {
  require_q_in_open_unit_interval(q);
  const SpinorSpace s(space);
  std::vector<double> diag(s.plus().size());
  for (std::size_t k = 0; k < diag.size(); ++k) diag[k] = q_number((s.plus().twol_at(k) + 1) / 2.0, q);
  const SparseOperator block = diagonal_blocks(diag.size(), diag);
  return {block, block};
}

OddOperator build_phase(const TruncatedSpace& space, double q) {
  require_q_in_open_unit_interval(q);
  const SpinorSpace s(space);
  const SparseOperator one = SparseOperator::identity(s.plus().size());
  return {one, one};
}

Report spectrum_report(const TruncatedSpace& space, double q, double tol) {
  Report r;
  r.command = "spectrum";
  r.params["q"] = q;
  r.params["twolmax"] = space.twolmax();
  r.params["tol"] = tol;
  r.conventions["section_weight"] = "H_k = {e(l,i,j) : 2j = -k}";
  r.conventions["sector_intertwiner"] = "e(l,i,-1/2) <-> e(l,i,+1/2)";

  const SpinorSpace s(space);
  const OddOperator odd = build_dirac(space, q);
  const SparseOperator D = odd.full();
  const SparseOperator F = build_phase(space, q).full();
  const SparseOperator one = SparseOperator::identity(s.size());

  // D is odd, D = [[0, U], [U*, 0]], so the eigenvalues of |D| on a sector
  // are the singular values of U there, each counted twice. Working with U
  // keeps the error at the level of the entries instead of the eigensolver's
  // roundoff, which is about one ulp of [l+1/2]_q and exceeds 1e-12 once
  // [l+1/2]_q passes 1e4.
  double worst = 0.0;
  double dense_rel = 0.0;
  int kernel = 0;
  double sign_defect = 0.0;
  Json per_sector = Json::array();
  for (int L = 1; L <= space.twolmax() - 2; L += 2) {
    std::vector<std::size_t> half;
    for (std::size_t k = 0; k < s.plus().size(); ++k)
      if (s.plus().twol_at(k) == L) half.push_back(k);
    const Eigen::MatrixXcd U = Eigen::MatrixXcd(odd.upper.restrict_to(half).matrix());
    const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(U);
    const double expected = q_number((L + 1) / 2.0, q);
    double dev = 0.0;
    for (Eigen::Index k = 0; k < svd.singularValues().size(); ++k) {
      const double sv = svd.singularValues()[k];
      dev = std::max(dev, std::abs(sv - expected));
      if (sv < tol) kernel += 2;
    }
    worst = std::max(worst, dev);

    const auto idx = s.band(L, L);
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(Eigen::MatrixXcd(D.restrict_to(idx).matrix()),
                                                              Eigen::EigenvaluesOnly);
    for (Eigen::Index k = 0; k < eig.eigenvalues().size(); ++k)
      dense_rel = std::max(dense_rel, std::abs(std::abs(eig.eigenvalues()[k]) - expected) / expected);

    const SparseOperator Fb = F.restrict_to(idx);
    const SparseOperator Db = D.restrict_to(idx);
    sign_defect = std::max(sign_defect, (Scalar(1.0 / expected) * Db - Fb).max_abs_entry());
    per_sector.push_back({{"twol", L}, {"expected", expected}, {"max_deviation", dev}});
  }
  r.data["dense_eigensolver_max_relative_deviation"] = dense_rel;
  r.data["sectors"] = per_sector;
  r.add("|D| eigenvalues equal [l+1/2]_q per sector", worst <= tol, worst, fmt_le(tol));
  r.add("D self-adjoint", (D - D.adjoint()).max_abs_entry() == 0.0, (D - D.adjoint()).max_abs_entry(), "0 exactly");
  r.add("kernel of D trivial", kernel == 0, kernel, "0");
  r.add("F^2 = 1 exactly", (F * F - one).max_abs_entry() == 0.0, (F * F - one).max_abs_entry(), "0 exactly");
  r.add("F = F* exactly", (F - F.adjoint()).max_abs_entry() == 0.0, (F - F.adjoint()).max_abs_entry(), "0 exactly");
  r.add("sign(D) = F", sign_defect <= tol, sign_defect, fmt_le(tol));

  int off_sector = 0;
  for (const auto& e : F.triplets())
    if (s.twol_at(static_cast<std::size_t>(e.row())) != s.twol_at(static_cast<std::size_t>(e.col()))) ++off_sector;
  r.add("F preserves twol sectors", off_sector == 0, off_sector, "0");
  return r;
}

std::vector<double> tail_norms(const SparseOperator& spinor_op, const SpinorSpace& spinors,
                               const std::vector<int>& cutoffs, int upper_twol) {
  std::vector<double> out;
  out.reserve(cutoffs.size());
  for (int L0 : cutoffs) {
    const auto idx = spinors.band(L0, upper_twol);
    out.push_back(idx.empty() ? 0.0 : spinor_op.restrict_to(idx).norm());
  }
  return out;
}

Report commutator_decay(const AlgebraElement& x, double q, const DecayOptions& opts) {
  require_q_in_open_unit_interval(q);
  if (!x.is_weight_homogeneous() || (!x.is_zero() && qalgebra::weights(x.terms().begin()->first).right != 0))
    throw Error("commutator_decay needs a weight-homogeneous element with wt_R = 0");
  const int margin = x.degree();
  if (margin > opts.twolmax) throw CutoffTooSmall("truncation smaller than the degree of x");
  require_band(opts, margin);

  Report r;
  r.command = "commutators";
  r.params["q"] = q;
  r.params["twolmax"] = opts.twolmax;
  r.params["element"] = x.to_string();
  r.params["interior_margin"] = margin;
  r.conventions["section_weight"] = "H_k = {e(l,i,j) : 2j = -k}";
  r.conventions["sector_intertwiner"] = "e(l,i,-1/2) <-> e(l,i,+1/2)";

  const TruncatedSpace space(opts.twolmax);
  const SpinorSpace s(space);
  const SparseOperator A = gns::represent(x, space, q);
  const int upper = opts.twolmax - margin;
  const double leak = std::max(leakage(A, interior_positions(s.plus(), upper), s.plus().positions()),
                               leakage(A, interior_positions(s.minus(), upper), s.minus().positions()));
  r.add("left multiplication preserves H_+1 and H_-1", leak <= kLeakTolerance, leak, fmt_le(kLeakTolerance));

  const SparseOperator As = s.compress(A);
  const SparseOperator F = build_phase(space, q).full();
  add_decay_checks(r, tail_norms(F * As - As * F, s, opts.cutoffs, upper), opts);
  return r;
}

// ------------------------------------------------------------- Drinfeld

std::vector<DrinfeldTerm> drinfeld_expansion(const AlgebraElement& f) {
  std::vector<DrinfeldTerm> out;
  const qalgebra::TensorElement split = qalgebra::comultiply(f);
  for (const auto& [k, c] : split.terms()) {
    AlgebraElement right = qalgebra::act_functional(qalgebra::Functional::delta,
                                                    qalgebra::antipode(AlgebraElement(k[1])),
                                                    qalgebra::Side::left);
    if (!right.is_zero()) out.push_back({c, k[0], std::move(right)});
  }
  return out;
}

AlgebraElement drinfeld_act(const AlgebraElement& f, const AlgebraElement& h) {
  AlgebraElement out;
  for (const auto& t : drinfeld_expansion(f)) out += t.coeff * (AlgebraElement(t.left) * h * t.right);
  return out;
}

SparseOperator drinfeld_action(const AlgebraElement& f, const gns::LeftRegular& left,
                               const gns::RightRegular& right) {
  SparseOperator out(left.space().dimension());
  for (const auto& t : drinfeld_expansion(f)) {
    const SparseOperator term = left.represent(AlgebraElement(t.left)) * right.represent(t.right);
    out = out + Scalar(t.coeff.evaluate(left.q())) * term;
  }
  return out;
}

SparseOperator drinfeld_action(Generator g, const TruncatedSpace& space, double q) {
  const gns::LeftRegular left(space, q);
  const gns::RightRegular right(space, q);
  return drinfeld_action(AlgebraElement(g), left, right);
}

namespace {

int drinfeld_margin(const AlgebraElement& f) {
  int m = 0;
  for (const auto& t : drinfeld_expansion(f)) m = std::max(m, t.left.degree() + t.right.degree());
  return m;
}

struct DrinfeldRun {
  std::vector<double> tails;
  double leak = 0.0;
};

DrinfeldRun run_drinfeld(const AlgebraElement& f, double q, int twolmax, int upper, const std::vector<int>& cutoffs) {
  const TruncatedSpace space(twolmax);
  const SpinorSpace s(space);
  const gns::LeftRegular left(space, q);
  const gns::RightRegular right(space, q);
  const SparseOperator A = drinfeld_action(f, left, right);
  DrinfeldRun run;
  run.leak = std::max(leakage(A, interior_positions(s.plus(), upper), s.plus().positions()),
                      leakage(A, interior_positions(s.minus(), upper), s.minus().positions()));
  const SparseOperator As = s.compress(A);
  const SparseOperator F = build_phase(space, q).full();
  run.tails = tail_norms(F * As - As * F, s, cutoffs, upper);
  return run;
}

}  // namespace

Report drinfeld_commutator_decay(Generator g, double q, const DecayOptions& opts) {
  require_q_in_open_unit_interval(q);
  const AlgebraElement f(g);
  const int margin = drinfeld_margin(f);
  if (margin > opts.twolmax) throw CutoffTooSmall("truncation smaller than the Drinfeld action degree");
  require_band(opts, margin);

  Report r;
  r.command = "drinfeld-commutators";
  r.params["q"] = q;
  r.params["twolmax"] = opts.twolmax;
  r.params["generator"] = std::string(qalgebra::name(g));
  r.params["interior_margin"] = margin;
  r.conventions["section_weight"] = "H_k = {e(l,i,j) : 2j = -k}";
  r.conventions["sector_intertwiner"] = "e(l,i,-1/2) <-> e(l,i,+1/2)";
  r.conventions["right_multiplication"] = "reconstructed from the cyclic vector";

  const int upper = opts.twolmax - margin;
  const DrinfeldRun base = run_drinfeld(f, q, opts.twolmax, upper, opts.cutoffs);
  r.add("action preserves H_+1 and H_-1", base.leak <= kLeakTolerance, base.leak, fmt_le(kLeakTolerance));
  add_decay_checks(r, base.tails, opts);

  // Same band inside a truncation two levels larger (margin + 2).
  const DrinfeldRun wider = run_drinfeld(f, q, opts.twolmax + 2, upper, opts.cutoffs);
  double drift = 0.0;
  for (std::size_t k = 0; k < base.tails.size(); ++k) drift = std::max(drift, std::abs(base.tails[k] - wider.tails[k]));
  r.add("tails stable under margin m -> m+2", drift <= kStabilityTolerance, drift, fmt_le(kStabilityTolerance));
  r.data["tails_wider_truncation"] = wider.tails;
  return r;
}

}  // namespace suq2::geometry
