#include <doctest.h>

#include <Eigen/Dense>

#include <cmath>

#include "suq2/errors.hpp"
#include "suq2/geometry.hpp"
#include "suq2/ktheory.hpp"

using namespace suq2;
using namespace suq2::geometry;
using qalgebra::Kind;
using qalgebra::LaurentQ;
using qalgebra::PBWMonomial;

namespace {

// Dense largest singular value; the reference for the power-iteration tails.
double dense_norm(const SparseOperator& op) {
  if (op.dim() == 0) return 0.0;
  const Eigen::MatrixXcd m(op.matrix());
  return Eigen::JacobiSVD<Eigen::MatrixXcd>(m).singularValues()(0);
}

DecayOptions small_run(int twolmax) {
  DecayOptions o;
  o.twolmax = twolmax;
  o.cutoffs = {2, 4, 6, 8};
  return o;
}

}  // namespace

TEST_CASE("Podles generators have right weight zero and vanishing counit") {
  for (const auto& x : podles_generators()) {
    REQUIRE(x.is_weight_homogeneous());
    CHECK(qalgebra::weights(x.terms().begin()->first).right == 0);
    CHECK(qalgebra::counit(x).is_zero());
  }
}

TEST_CASE("Podles generators span the weight-zero part degree by degree") {
  for (int d = 0; d <= 8; d += 2) {
    const GenerationCount g = podles_generation_count(d);
    CHECK(g.weight_zero_monomials == (d / 2 + 1) * (d / 2 + 1));
    CHECK(g.span_rank == g.weight_zero_monomials);
  }
}

TEST_CASE("spinor spaces are aligned sector by sector") {
  const TruncatedSpace s(9);
  const SpinorSpace sp(s);
  CHECK(sp.plus().size() == sp.minus().size());
  const auto sectors = sp.plus().sectors();
  CHECK(sectors == sp.minus().sectors());
  for (const auto& [L, n] : sectors) {
    CHECK(L % 2 == 1);
    CHECK(n == 1);
  }
  for (std::size_t k = 0; k < sp.plus().size(); ++k)
    CHECK(s.at(sp.plus().positions()[k]).twoi == s.at(sp.minus().positions()[k]).twoi);
}

TEST_CASE("q-numbers") {
  CHECK(q_number(1.0, 0.37) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(q_number(2.0, 0.5) == doctest::Approx(2.5).epsilon(1e-15));
}

TEST_CASE("Dirac spectrum against a dense eigensolver") {
  const TruncatedSpace s(9);
  const SpinorSpace sp(s);
  const double q = 0.5;
  const Eigen::MatrixXcd D(build_dirac(s, q).full().matrix());
  CHECK((D - D.adjoint()).cwiseAbs().maxCoeff() == 0.0);
  for (int L = 1; L <= 7; L += 2) {
    const auto idx = sp.band(L, L);
    Eigen::MatrixXcd block(static_cast<Eigen::Index>(idx.size()), static_cast<Eigen::Index>(idx.size()));
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (std::size_t c = 0; c < idx.size(); ++c)
        block(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
            D(static_cast<Eigen::Index>(idx[r]), static_cast<Eigen::Index>(idx[c]));
    const Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(block).eigenvalues();
    const double l = L / 2.0;
    const double want = (std::pow(q, l + 0.5) - std::pow(q, -l - 0.5)) / (q - 1 / q);
    for (Eigen::Index k = 0; k < ev.size(); ++k) CHECK(std::abs(std::abs(ev(k)) - want) <= 1e-12);
    // D is odd: half the eigenvalues are negative.
    CHECK((ev.array() < 0).count() == ev.size() / 2);
  }
}

TEST_CASE("spectrum report passes at several q") {
  for (double q : {0.3, 0.5, 0.8}) {
    const Report r = spectrum_report(TruncatedSpace(20), q, 1e-12);
    INFO(r.to_text());
    CHECK(r.pass());
  }
  CHECK_THROWS_AS(build_dirac(TruncatedSpace(5), 1.2), QOutOfRange);
}

TEST_CASE("phase is an exact symmetry") {
  const TruncatedSpace s(7);
  const SparseOperator F = build_phase(s, 0.5).full();
  const SparseOperator one = SparseOperator::identity(F.dim());
  CHECK((F * F - one).max_abs_entry() == 0.0);
  CHECK((F - F.adjoint()).max_abs_entry() == 0.0);
}

TEST_CASE("tail norms against the dense reference") {
  const TruncatedSpace s(12);
  const SpinorSpace sp(s);
  const AlgebraElement x = podles_generators()[1];
  const SparseOperator A = sp.compress(gns::represent(x, s, 0.5));
  const SparseOperator F = build_phase(s, 0.5).full();
  const SparseOperator C = F * A - A * F;
  const std::vector<int> cutoffs = {1, 3, 5, 7, 9};
  const auto tails = tail_norms(C, sp, cutoffs, 10);
  for (std::size_t k = 0; k < cutoffs.size(); ++k) {
    const double ref = dense_norm(C.restrict_to(sp.band(cutoffs[k], 10)));
    CHECK(std::abs(tails[k] - ref) <= 1e-5 * ref);
  }
}

TEST_CASE("commutator of the unit vanishes exactly") {
  const Report r = commutator_decay(AlgebraElement::one(), 0.5, small_run(10));
  for (double t : r.data["tails"]) CHECK(t == 0.0);
  CHECK(r.pass());
}

TEST_CASE("commutator tails of the Podles generators decrease") {
  for (const auto& x : podles_generators()) {
    const Report r = commutator_decay(x, 0.5, small_run(14));
    INFO(r.to_text());
    CHECK(r.checks[0].pass);  // H_+-1 invariance
    CHECK(r.checks[1].pass);  // non-increasing
  }
}

TEST_CASE("tails decay faster at smaller q") {
  const AlgebraElement x = podles_generators()[0];
  DecayOptions o = small_run(16);
  o.cutoffs = {12};
  const double slow = commutator_decay(x, 0.8, o).data["tails"][0];
  const double fast = commutator_decay(x, 0.3, o).data["tails"][0];
  CHECK(fast < slow);
}

TEST_CASE("decay input validation") {
  CHECK_THROWS_AS(commutator_decay(AlgebraElement(Generator::alpha), 0.5, small_run(10)), Error);
  DecayOptions o = small_run(10);
  o.cutoffs = {4, 10};
  CHECK_THROWS_AS(commutator_decay(podles_generators()[0], 0.5, o), CutoffTooSmall);
}

TEST_CASE("Drinfeld expansion of alpha has two terms") {
  const auto terms = drinfeld_expansion(AlgebraElement(Generator::alpha));
  REQUIRE(terms.size() == 2);
  const LaurentQ q = LaurentQ::q_pow(1);
  // q L(alpha) R(alpha*) + q L(gamma*) R(gamma)
  auto coefficient_of = [&](Generator left, Generator right) {
    for (const auto& t : terms)
      if (t.left == PBWMonomial::of(left)) return t.coeff * t.right.coefficient(PBWMonomial::of(right));
    return LaurentQ();
  };
  CHECK(coefficient_of(Generator::alpha, Generator::alphaStar) == q);
  CHECK(coefficient_of(Generator::gammaStar, Generator::gamma) == q);
}

TEST_CASE("Drinfeld action of the unit is the identity") {
  CHECK(drinfeld_act(AlgebraElement::one(), podles_generators()[2]) == podles_generators()[2]);
  const TruncatedSpace s(6);
  const gns::LeftRegular L(s, 0.5);
  const gns::RightRegular R(s, 0.5);
  const SparseOperator A = drinfeld_action(AlgebraElement::one(), L, R);
  CHECK((A - SparseOperator::identity(s.dimension())).max_abs_entry() == 0.0);
}

TEST_CASE("Drinfeld action on Lambda(h) equals Lambda(f . h)") {
  const double q = 0.5;
  const TruncatedSpace s(10);
  const gns::LeftRegular L(s, q);
  const gns::RightRegular R(s, q);
  const std::size_t vac = s.index_of({0, 0, 0});
  SparseOperator::Vector omega = SparseOperator::Vector::Zero(static_cast<Eigen::Index>(s.dimension()));
  omega(static_cast<Eigen::Index>(vac)) = 1.0;
  for (Generator g : qalgebra::kGenerators) {
    const SparseOperator A = drinfeld_action(AlgebraElement(g), L, R);
    for (const auto& h : qalgebra::monomials_up_to_degree(3)) {
      const AlgebraElement H(h);
      const auto lhs = A.apply(L.represent(H).apply(omega));
      const auto rhs = L.represent(drinfeld_act(AlgebraElement(g), H)).apply(omega);
      CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-10);
    }
  }
}

TEST_CASE("the symbolic Drinfeld action preserves right weights") {
  for (Generator g : qalgebra::kGenerators)
    for (const auto& h : qalgebra::monomials_up_to_degree(3)) {
      const AlgebraElement out = drinfeld_act(AlgebraElement(g), AlgebraElement(h));
      for (const auto& [m, c] : out.terms()) CHECK(qalgebra::weights(m).right == qalgebra::weights(h).right);
    }
}

TEST_CASE("Drinfeld commutators: invariance, monotone tails, truncation stability") {
  for (Generator g : qalgebra::kGenerators) {
    const Report r = drinfeld_commutator_decay(g, 0.5, small_run(12));
    INFO(r.to_text());
    CHECK(r.pass());
  }
}

TEST_CASE("section sectors follow the Frobenius rule") {
  const TruncatedSpace s(24);
  for (int k = -6; k <= 6; ++k) {
    const SectionSpace sec(s, k);
    const auto sectors = sec.sectors();
    for (int t = 0; t <= 24; ++t) {
      const auto it = sectors.find(t);
      CHECK((it == sectors.end() ? 0 : it->second) == ktheory::frobenius_mult(t, k));
    }
  }
}
