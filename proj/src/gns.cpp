#include "suq2/gns.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "suq2/errors.hpp"

namespace suq2::gns {

namespace {

// 1 - q^n, accurate also for q close to 1.
double one_minus_pow(double q, int n) { return -std::expm1(n * std::log(q)); }

double ratio_sqrt(double q, int n1, int n2, int d1, int d2) {
  return std::sqrt(one_minus_pow(q, n1) * one_minus_pow(q, n2) /
                   (one_minus_pow(q, d1) * one_minus_pow(q, d2)));
}

PWIndex target(CoefficientKind kind, const PWIndex& e) {
  switch (kind) {
    case CoefficientKind::aPlus: return {e.twol + 1, e.twoi - 1, e.twoj - 1};
    case CoefficientKind::aMinus: return {e.twol - 1, e.twoi - 1, e.twoj - 1};
    case CoefficientKind::cPlus: return {e.twol + 1, e.twoi + 1, e.twoj - 1};
    case CoefficientKind::cMinus: return {e.twol - 1, e.twoi + 1, e.twoj - 1};
  }
  return e;
}

void accumulate(SparseVector& out, const PWIndex& e, double value, std::optional<int> twolmax) {
  if (value == 0.0) return;
  if (twolmax && e.twol > *twolmax) return;
  out[e] += value;
}

}  // namespace

bool PWIndex::valid() const {
  return twol >= 0 && std::abs(twoi) <= twol && std::abs(twoj) <= twol &&
         (twol - twoi) % 2 == 0 && (twol - twoj) % 2 == 0;
}

TruncatedSpace::TruncatedSpace(int twolmax) : twolmax_(twolmax) {
  if (twolmax < 0) throw Error("twolmax must be nonnegative");
  basis_.reserve(dimension_for(twolmax));
  for (int L = 0; L <= twolmax; ++L)
    for (int I = -L; I <= L; I += 2)
      for (int J = -L; J <= L; J += 2) basis_.push_back({L, I, J});
}

std::size_t TruncatedSpace::dimension_for(int twolmax) {
  std::size_t d = 0;
  for (int L = 0; L <= twolmax; ++L) d += static_cast<std::size_t>((L + 1) * (L + 1));
  return d;
}

std::size_t TruncatedSpace::index_of(const PWIndex& e) const {
  auto pos = find(e);
  if (!pos) throw Error("basis label outside the truncated space");
  return *pos;
}

std::optional<std::size_t> TruncatedSpace::find(const PWIndex& e) const {
  if (!contains(e)) return std::nullopt;
  const std::size_t width = static_cast<std::size_t>(e.twol + 1);
  return dimension_for(e.twol - 1) + static_cast<std::size_t>((e.twoi + e.twol) / 2) * width +
         static_cast<std::size_t>((e.twoj + e.twol) / 2);
}

std::vector<std::size_t> TruncatedSpace::interior(int margin) const {
  if (margin < 0 || margin > twolmax_) throw Error("interior margin out of range");
  return [&] {
    std::vector<std::size_t> out(dimension_for(twolmax_ - margin));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = k;
    return out;
  }();
}

double coefficient(CoefficientKind kind, const PWIndex& e, double q) {
  require_q_in_open_unit_interval(q);
  if (!e.valid()) throw Error("coefficient requested at an invalid label");
  if (!target(kind, e).valid()) return 0.0;
  const int L = e.twol, I = e.twoi, J = e.twoj;
  switch (kind) {
    case CoefficientKind::aPlus:
      return std::pow(q, L + (I + J) / 2 + 1) * ratio_sqrt(q, L - J + 2, L - I + 2, 2 * L + 2, 2 * L + 4);
    case CoefficientKind::aMinus:
      return ratio_sqrt(q, L + J, L + I, 2 * L, 2 * L + 2);
    case CoefficientKind::cPlus:
      return -std::pow(q, (L + J) / 2) * ratio_sqrt(q, L - J + 2, L + I + 2, 2 * L + 2, 2 * L + 4);
    case CoefficientKind::cMinus:
      return std::pow(q, (L + I) / 2) * ratio_sqrt(q, L + J, L - I, 2 * L, 2 * L + 2);
  }
  return 0.0;
}

SparseVector apply_generator(Generator g, const SparseVector& v, double q, std::optional<int> twolmax) {
  require_q_in_open_unit_interval(q);
  using K = CoefficientKind;
  SparseVector out;
  for (const auto& [e, x] : v) {
    if (x == 0.0) continue;
    switch (g) {
      case Generator::alpha:
        accumulate(out, target(K::aPlus, e), x * coefficient(K::aPlus, e, q), twolmax);
        accumulate(out, target(K::aMinus, e), x * coefficient(K::aMinus, e, q), twolmax);
        break;
      case Generator::gamma:
        accumulate(out, target(K::cPlus, e), x * coefficient(K::cPlus, e, q), twolmax);
        accumulate(out, target(K::cMinus, e), x * coefficient(K::cMinus, e, q), twolmax);
        break;
      case Generator::alphaStar: {
        // Transpose of alpha: sources whose alpha-image hits e.
        const PWIndex up{e.twol - 1, e.twoi + 1, e.twoj + 1};
        const PWIndex down{e.twol + 1, e.twoi + 1, e.twoj + 1};
        if (up.valid()) accumulate(out, up, x * coefficient(K::aPlus, up, q), twolmax);
        if (down.valid()) accumulate(out, down, x * coefficient(K::aMinus, down, q), twolmax);
        break;
      }
      case Generator::gammaStar: {
        const PWIndex up{e.twol - 1, e.twoi - 1, e.twoj + 1};
        const PWIndex down{e.twol + 1, e.twoi - 1, e.twoj + 1};
        if (up.valid()) accumulate(out, up, x * coefficient(K::cPlus, up, q), twolmax);
        if (down.valid()) accumulate(out, down, x * coefficient(K::cMinus, down, q), twolmax);
        break;
      }
    }
  }
  return out;
}

SparseVector apply_element(const AlgebraElement& x, const SparseVector& v, double q,
                           std::optional<int> twolmax) {
  SparseVector out;
  for (const auto& [m, c] : x.terms()) {
    SparseVector w = v;
    const auto letters = m.word();
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) w = apply_generator(*it, w, q, twolmax);
    const double cq = c.evaluate(q);
    for (const auto& [e, val] : w) out[e] += cq * val;
  }
  return out;
}

SparseOperator build_left_mult(Generator g, const TruncatedSpace& space, double q) {
  require_q_in_open_unit_interval(q);
  if (g == Generator::alphaStar) return build_left_mult(Generator::alpha, space, q).adjoint();
  if (g == Generator::gammaStar) return build_left_mult(Generator::gamma, space, q).adjoint();
  std::vector<SparseOperator::Triplet> entries;
  entries.reserve(2 * space.dimension());
  for (std::size_t col = 0; col < space.dimension(); ++col) {
    const SparseVector image = apply_generator(g, {{space.at(col), 1.0}}, q, space.twolmax());
    for (const auto& [e, x] : image)
      entries.emplace_back(static_cast<Eigen::Index>(space.index_of(e)), static_cast<Eigen::Index>(col), x);
  }
  return SparseOperator(space.dimension(), entries);
}

LeftRegular::LeftRegular(const TruncatedSpace& space, double q) : space_(space), q_(q) {
  require_q_in_open_unit_interval(q);
  for (Generator g : qalgebra::kGenerators) gens_[static_cast<std::size_t>(g)] = build_left_mult(g, space_, q_);
}

const SparseOperator& LeftRegular::generator(Generator g) const { return gens_[static_cast<std::size_t>(g)]; }

SparseOperator LeftRegular::represent(const AlgebraElement& x) const {
  SparseOperator out(space_.dimension());
  for (const auto& [m, c] : x.terms()) {
    SparseOperator term = SparseOperator::identity(space_.dimension());
    for (Generator g : m.word()) term = term * generator(g);
    out = out + SparseOperator::Scalar(c.evaluate(q_)) * term;
  }
  return out;
}

SparseOperator represent(const AlgebraElement& x, const TruncatedSpace& space, double q) {
  return LeftRegular(space, q).represent(x);
}

Report verify_relations(const TruncatedSpace& space, double q, double tol) {
  const LeftRegular L(space, q);
  using G = Generator;
  const SparseOperator& a = L.generator(G::alpha);
  const SparseOperator& as = L.generator(G::alphaStar);
  const SparseOperator& c = L.generator(G::gamma);
  const SparseOperator& cs = L.generator(G::gammaStar);
  const SparseOperator one = SparseOperator::identity(space.dimension());
  const SparseOperator::Scalar qs(q), q2(q * q);
  const auto cols = space.interior(std::min(2, space.twolmax()));

  Report r;
  r.command = "check-relations";
  r.params["q"] = q;
  r.params["twolmax"] = space.twolmax();
  r.params["tol"] = tol;
  r.conventions["interior_margin"] = 2;
  auto check = [&](const std::string& name, const SparseOperator& residual) {
    const double m = residual.max_abs_entry_in_columns(cols);
    std::ostringstream exp;
    exp << "<= " << tol;
    r.add(name, m <= tol, m, exp.str());
  };
  check("alpha gamma = q gamma alpha", a * c - qs * (c * a));
  check("alpha gamma* = q gamma* alpha", a * cs - qs * (cs * a));
  check("gamma gamma* = gamma* gamma", c * cs - cs * c);
  check("alpha* alpha + gamma* gamma = 1", as * a + cs * c - one);
  check("alpha alpha* + q^2 gamma gamma* = 1", a * as + q2 * (c * cs) - one);
  // u = [[alpha, -q gamma*], [gamma, alpha*]]
  check("(u* u)_11 = 1", as * a + cs * c - one);
  check("(u* u)_12 = 0", (-qs) * (as * cs) + cs * as);
  check("(u* u)_21 = 0", (-qs) * (c * a) + a * c);
  check("(u* u)_22 = 1", q2 * (c * cs) + a * as - one);
  check("(u u*)_11 = 1", a * as + q2 * (cs * c) - one);
  check("(u u*)_12 = 0", a * cs - qs * (cs * a));
  check("(u u*)_21 = 0", c * as - qs * (as * c));
  check("(u u*)_22 = 1", c * cs + as * a - one);
  return r;
}

std::vector<std::size_t> weight_subspace(const TruncatedSpace& space, int k) {
  if (std::abs(k) > space.twolmax()) throw Error("weight outside the truncation range");
  std::vector<std::size_t> out;
  for (std::size_t pos = 0; pos < space.dimension(); ++pos)
    if (space.at(pos).twoj == -k) out.push_back(pos);
  return out;
}

int sector_count(const TruncatedSpace& space, int k, int twol) {
  if (twol < 0 || twol > space.twolmax()) return 0;
  int vectors = 0;
  for (std::size_t pos : weight_subspace(space, k))
    if (space.at(pos).twol == twol) ++vectors;
  if (vectors % (twol + 1) != 0) throw Error("section space level is not a union of sectors");
  return vectors / (twol + 1);
}

}  // namespace suq2::gns
