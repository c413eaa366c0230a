#include <doctest.h>

#include <algorithm>
#include <random>

#include "suq2/errors.hpp"
#include "suq2/ktheory.hpp"

using namespace suq2;
using namespace suq2::ktheory;

namespace {

GRepElement V(int twol, long n = 1) { return GRepElement::irrep(twol, n); }
TCharacter z(int k, long n = 1) { return TCharacter::z_pow(k, n); }

// Inverse of t_restrict by peeling the highest weight; its existence on every
// character in the image is what makes t_restrict injective.
GRepElement peel(TCharacter chi) {
  GRepElement out;
  while (!chi.is_zero()) {
    const auto [top, n] = *chi.coefficients().rbegin();
    REQUIRE(top >= 0);
    out += V(top, n);
    chi -= t_restrict(V(top, n));
  }
  return out;
}

GRepElement random_rep(std::mt19937_64& rng, int max_twol) {
  std::uniform_int_distribution<int> t(0, max_twol), n(-3, 3);
  GRepElement out;
  for (int k = 0; k < 4; ++k) out += V(t(rng), n(rng));
  return out;
}

}  // namespace

TEST_CASE("restriction to the torus") {
  CHECK(t_restrict(V(0)) == z(0));
  CHECK(t_restrict(V(1)) == z(1) + z(-1));
  CHECK(t_restrict(V(2)) == z(2) + z(0) + z(-2));
  CHECK(t_restrict(GRepElement()).is_zero());
}

TEST_CASE("Frobenius multiplicities") {
  CHECK(frobenius_mult(1, 1) == 1);
  CHECK(frobenius_mult(0, 0) == 1);
  CHECK(frobenius_mult(1, 2) == 0);
  for (int t = 0; t <= 12; ++t)
    for (int k = -14; k <= 14; ++k) CHECK(frobenius_mult(t, k) == t_restrict(V(t)).coefficient(k));
}

TEST_CASE("fusion examples") {
  CHECK(fusion(V(1), V(1)) == V(0) + V(2));
  CHECK(fusion(V(1), V(2)) == V(1) + V(3));
  const GRepElement x = V(3) + V(0, -2);
  CHECK(fusion(V(0), x) == x);
}

TEST_CASE("fusion is compatible with characters") {
  for (int a = 0; a <= 8; ++a)
    for (int b = 0; b <= 8; ++b) CHECK(t_restrict(fusion(V(a), V(b))) == t_restrict(V(a)) * t_restrict(V(b)));
}

TEST_CASE("fusion is a commutative associative ring") {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 40; ++k) {
    const auto x = random_rep(rng, 6), y = random_rep(rng, 6), w = random_rep(rng, 6);
    CHECK(fusion(x, y) == fusion(y, x));
    CHECK(fusion(fusion(x, y), w) == fusion(x, fusion(y, w)));
    CHECK(fusion(x, y + w) == fusion(x, y) + fusion(x, w));
  }
}

TEST_CASE("restriction is injective on twol <= 12") {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 200; ++k) {
    const auto x = random_rep(rng, 12);
    CHECK(peel(t_restrict(x)) == x);
  }
}

TEST_CASE("L2 sectors of line bundles") {
  CHECK(l2_sectors(0, 4) == V(0) + V(2) + V(4));
  CHECK(l2_sectors(1, 3) == V(1) + V(3));
  for (int k = 0; k <= 6; ++k) CHECK(l2_sectors(k, 15) == l2_sectors(-k, 15));
}

TEST_CASE("index examples") {
  CHECK(index_combinatorial(0).is_zero());
  CHECK(index_combinatorial(1) == -V(0));
  CHECK(index_combinatorial(-1) == V(0));
  CHECK(index_combinatorial(3) == -V(2));
  CHECK(index_operator(1, 10) == -V(0));
  CHECK(index_operator(0, 10).is_zero());
  CHECK(index_operator(-2, 10) == V(1));
}

TEST_CASE("combinatorial index equals the closed form") {
  for (int m = -12; m <= 12; ++m) CHECK(index_combinatorial(m) == index_closed_form(m));
}

TEST_CASE("operator oracle equals the combinatorial index") {
  for (int m = -6; m <= 6; ++m)
    for (double q : {0.3, 0.7}) CHECK(index_operator(m, std::abs(m) + 10, q) == index_combinatorial(m));
}

TEST_CASE("operator oracle needs a margin") {
  CHECK_THROWS_AS(index_operator(3, 6), MarginTooSmall);
  CHECK_NOTHROW(index_operator(3, 7));
  CHECK_THROWS_AS(index_operator(0, 10, 1.0), QOutOfRange);
}

TEST_CASE("pairing reproduces the three-case table") {
  CHECK(pairing(0, 1) == -V(0));
  CHECK(pairing(1, -1).is_zero());
  CHECK(pairing(-3, 1) == V(1));
  for (int k = -4; k <= 4; ++k)
    for (int l = -4; l <= 4; ++l) {
      const int m = k + l;
      const GRepElement want = m > 0 ? -V(m - 1) : m < 0 ? V(-m - 1) : GRepElement();
      CHECK(pairing(k, l) == want);
    }
}

TEST_CASE("representation-ring text form") {
  CHECK(V(0, -1).to_string() == "-1*V[0]");
  CHECK(GRepElement().to_string() == "0");
  CHECK(V(1).to_string() == "1*V[1/2]");
  CHECK((V(1) + V(2, 2)).to_string() == "1*V[1/2] + 2*V[1]");
  std::mt19937_64 rng(2);
  for (int k = 0; k < 50; ++k) {
    const auto x = random_rep(rng, 9);
    CHECK(GRepElement::parse(x.to_string()) == x);
  }
  CHECK_THROWS_AS(GRepElement::parse("1*V[2/2]"), ParseError);
  CHECK_THROWS_AS(GRepElement::parse("V0"), ParseError);
}

TEST_CASE("pairing table exports") {
  const PairingTable t = pairing_table(-4, 4, -4, 4);
  CHECK(t.entries.size() == 81);
  const std::string csv = t.to_csv();
  CHECK(csv.rfind("k,l,result\n-4,-4,1*V[7/2]\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 82);
  CHECK(t.to_json()["entries"].size() == 81);
}

TEST_CASE("index table report") {
  const Report r = index_table_report(-4, 4, -4, 4, 20, 0.5);
  INFO(r.to_text());
  CHECK(r.pass());
}

TEST_CASE("duality identities by hand") {
  // comp(a) = res(pairing(a,-1)) - res(pairing(a,0)) z
  auto comp = [](int a) { return t_restrict(pairing(a, -1)) - t_restrict(pairing(a, 0)) * z(1); };
  CHECK(comp(0) == z(0));
  CHECK(comp(1) == z(1));
  CHECK(comp(-1) == z(-1));
  CHECK(comp(2) == z(2));
}

TEST_CASE("unit/counit report over a range") {
  const Report r = verify_pd_unit_counit(-5, 5);
  INFO(r.to_text());
  CHECK(r.pass());
  CHECK(r.conventions["epsilon_restriction"] == "[E_b] -> z^b");
  CHECK(r.checks.size() == 1 + 2 * 11);
}

TEST_CASE("2x2 duality matrix is the identity") {
  const Report r = verify_ds_double();
  INFO(r.to_text());
  CHECK(r.pass());
  CHECK(r.data["M"][0][0] == "1*V[0]");
  CHECK(r.data["M"][0][1] == "0");
}

TEST_CASE("q grid consistency") {
  CHECK(q_grid_consistency({0.3, 0.5, 0.9}, 20).pass());
  CHECK(q_grid_consistency({0.4}, 12, 2).pass());
  CHECK_THROWS_AS(q_grid_consistency({0.3, 1.0}, 20), QOutOfRange);
}

TEST_CASE("Frobenius versus sector counts") { CHECK(frobenius_sector_agreement(6, 24).pass()); }
