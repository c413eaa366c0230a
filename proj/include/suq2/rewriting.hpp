#pragma once

#include <map>
#include <string>
#include <vector>

#include "suq2/algebra.hpp"

/// The SU_q(2) relation set as a length-two word rewriting system.
///
/// Independent of the closed-form multiplication in algebra.cpp; used to
/// check termination/confluence by resolving every critical pair and as an
/// oracle for normal_form.
namespace suq2::qalgebra::rewriting {

using Word = std::vector<Generator>;
using Combination = std::map<Word, LaurentQ>;

struct Rule {
  Generator first;
  Generator second;
  Combination rhs;
  std::string label;
};

/// gamma alpha -> q^-1 alpha gamma, ..., alpha alpha* -> 1 - q^2 gamma gamma*.
const std::vector<Rule>& rules();

/// Rewrite until no left-hand side occurs, always at the leftmost redex.
Combination reduce(const Combination& x);
Combination reduce(const Word& w);

/// A fully reduced word corresponds to exactly one PBW monomial.
AlgebraElement to_element(const Combination& reduced);

struct CriticalPair {
  Word overlap;  // x y z with (x y) and (y z) both left-hand sides
  std::string left_rule;
  std::string right_rule;
  bool resolved = false;
};

/// Every overlap of two left-hand sides, reduced along both branches.
std::vector<CriticalPair> critical_pairs();

}  // namespace suq2::qalgebra::rewriting
