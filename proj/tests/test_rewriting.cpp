#include <doctest.h>

#include <random>
#include <set>

#include "suq2/rewriting.hpp"

using namespace suq2::qalgebra;
namespace rw = suq2::qalgebra::rewriting;

TEST_CASE("seven rules with distinct left-hand sides") {
  const auto& rules = rw::rules();
  CHECK(rules.size() == 7);
  std::set<std::pair<Generator, Generator>> lhs;
  for (const auto& r : rules) lhs.insert({r.first, r.second});
  CHECK(lhs.size() == rules.size());
}

TEST_CASE("every critical pair resolves") {
  const auto pairs = rw::critical_pairs();
  CHECK(!pairs.empty());
  for (const auto& p : pairs) {
    INFO(p.left_rule << " / " << p.right_rule);
    CHECK(p.resolved);
  }
}

TEST_CASE("reduced words match the closed-form multiplication") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> g(0, 3), len(0, 6);
  for (int k = 0; k < 200; ++k) {
    rw::Word w(static_cast<std::size_t>(len(rng)));
    for (auto& x : w) x = kGenerators[static_cast<std::size_t>(g(rng))];
    CHECK(rw::to_element(rw::reduce(w)) == normal_form(std::span<const Generator>(w)));
  }
}

TEST_CASE("reduction is idempotent") {
  const rw::Word w = {Generator::gammaStar, Generator::alphaStar, Generator::alpha, Generator::gamma};
  const auto once = rw::reduce(w);
  CHECK(rw::reduce(once) == once);
}
