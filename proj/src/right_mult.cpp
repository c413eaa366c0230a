#include "suq2/right_mult.hpp"

#include <cmath>
#include <sstream>

#include "suq2/errors.hpp"

namespace suq2::gns {

namespace {

constexpr double kMinUpwardCoefficient = 1e-10;

struct UpwardStep {
  Generator g;
  PWIndex source;
  double up = 0.0;
};

// Upward coefficient of pi(g) at source onto the target one level higher.
UpwardStep best_step(const PWIndex& t, double q) {
  using G = Generator;
  const std::array<std::pair<G, PWIndex>, 4> options = {{
      {G::alpha, {t.twol - 1, t.twoi + 1, t.twoj + 1}},
      {G::gamma, {t.twol - 1, t.twoi - 1, t.twoj + 1}},
      {G::alphaStar, {t.twol - 1, t.twoi - 1, t.twoj - 1}},
      {G::gammaStar, {t.twol - 1, t.twoi + 1, t.twoj - 1}},
  }};
  UpwardStep best{G::alpha, {}, 0.0};
  for (const auto& [g, src] : options) {
    if (!src.valid()) continue;
    const SparseVector v = apply_generator(g, {{src, 1.0}}, q);
    auto it = v.find(t);
    const double up = it == v.end() ? 0.0 : it->second;
    if (std::abs(up) > std::abs(best.up)) best = {g, src, up};
  }
  return best;
}

void axpy(SparseVector& y, double a, const SparseVector& x) {
  for (const auto& [e, v] : x) y[e] += a * v;
}

}  // namespace

RightRegular::RightRegular(const TruncatedSpace& space, double q) : space_(space), q_(q) {
  require_q_in_open_unit_interval(q);
  const std::size_t n = space_.dimension();
  for (auto& v : images_) v.assign(n, {});
  for (Generator h : qalgebra::kGenerators)
    images_[static_cast<std::size_t>(h)][0] = apply_generator(h, vacuum(), q_);

  for (std::size_t pos = 1; pos < n; ++pos) {
    const PWIndex& t = space_.at(pos);
    const UpwardStep step = best_step(t, q_);
    if (std::abs(step.up) < kMinUpwardCoefficient) {
      std::ostringstream msg;
      msg << "no upward path to e(" << t.twol << "," << t.twoi << "," << t.twoj << ") at q=" << q_;
      throw RankDeficient(msg.str());
    }
    SparseVector lower = apply_generator(step.g, {{step.source, 1.0}}, q_);
    lower.erase(t);
    const std::size_t src = space_.index_of(step.source);
    for (Generator h : qalgebra::kGenerators) {
      auto& img = images_[static_cast<std::size_t>(h)];
      SparseVector v = apply_generator(step.g, img[src], q_);
      for (const auto& [e, c] : lower) axpy(v, -c, img[space_.index_of(e)]);
      for (auto& [e, c] : v) c /= step.up;
      img[pos] = std::move(v);
    }
  }

  for (Generator h : qalgebra::kGenerators) {
    std::vector<SparseOperator::Triplet> entries;
    const auto& img = images_[static_cast<std::size_t>(h)];
    for (std::size_t col = 0; col < n; ++col) {
      for (const auto& [e, c] : img[col]) {
        auto row = space_.find(e);
        if (row && c != 0.0)
          entries.emplace_back(static_cast<Eigen::Index>(*row), static_cast<Eigen::Index>(col), c);
      }
    }
    gens_[static_cast<std::size_t>(h)] = SparseOperator(n, entries);
  }
}

const SparseOperator& RightRegular::generator(Generator g) const { return gens_[static_cast<std::size_t>(g)]; }

const SparseVector& RightRegular::image(Generator g, std::size_t pos) const {
  return images_[static_cast<std::size_t>(g)].at(pos);
}

SparseOperator RightRegular::represent(const AlgebraElement& y) const {
  const std::size_t n = space_.dimension();
  SparseOperator out(n);
  for (const auto& [m, c] : y.terms()) {
    SparseOperator term = SparseOperator::identity(n);
    for (Generator g : m.word()) term = generator(g) * term;
    out = out + SparseOperator::Scalar(c.evaluate(q_)) * term;
  }
  return out;
}

SparseOperator build_right_mult(Generator g, const TruncatedSpace& space, double q) {
  return RightRegular(space, q).generator(g);
}

}  // namespace suq2::gns
