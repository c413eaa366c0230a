#include "suq2/suites.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "suq2/errors.hpp"
#include "suq2/haar.hpp"
#include "suq2/rewriting.hpp"

namespace suq2::suites {

namespace {

using namespace qalgebra;

// Runs pred over every monomial and records how many fail, plus the first failure.
void per_monomial(Report& r, const std::string& name, const std::vector<PBWMonomial>& monos,
                  const std::function<bool(const PBWMonomial&)>& pred) {
  int failures = 0;
  std::string first;
  for (const auto& m : monos) {
    if (!pred(m)) {
      if (failures == 0) first = m.to_string();
      ++failures;
    }
  }
  Json measured = failures;
  if (failures) measured = std::to_string(failures) + " failures, first at " + first;
  r.add(name, failures == 0, measured, "0 failures over " + std::to_string(monos.size()) + " monomials");
}

AlgebraElement left_counit_leg(const TensorElement& t) {
  AlgebraElement out;
  for (const auto& [k, c] : t.terms()) out.add_term(k[1], c * counit(AlgebraElement(k[0])));
  return out;
}

AlgebraElement right_counit_leg(const TensorElement& t) {
  AlgebraElement out;
  for (const auto& [k, c] : t.terms()) out.add_term(k[0], c * counit(AlgebraElement(k[1])));
  return out;
}

void all_words(int max_len, std::vector<std::vector<Generator>>& out) {
  std::vector<std::vector<Generator>> frontier{{}};
  out.push_back({});
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::vector<Generator>> next;
    for (const auto& w : frontier)
      for (Generator g : kGenerators) {
        auto v = w;
        v.push_back(g);
        next.push_back(std::move(v));
      }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
}

std::string fmt_le(double x) {
  std::ostringstream os;
  os << "<= " << x;
  return os.str();
}

}  // namespace

Report check_hopf(int degree) {
  if (degree < 0) throw Error("degree must be nonnegative");
  Report r;
  r.command = "check-hopf";
  r.params["degree"] = degree;
  r.conventions["hit_actions"] = "f -> x = x_(1) f(x_(2)),  x <- f = f(x_(1)) x_(2)";
  const auto monos = monomials_up_to_degree(degree);

  per_monomial(r, "coassociativity", monos, [](const PBWMonomial& m) {
    const TensorElement d = comultiply(AlgebraElement(m));
    return comultiply_leg(d, 0) == comultiply_leg(d, 1);
  });
  per_monomial(r, "(eps (x) id) Delta = id", monos, [](const PBWMonomial& m) {
    return left_counit_leg(comultiply(AlgebraElement(m))) == AlgebraElement(m);
  });
  per_monomial(r, "(id (x) eps) Delta = id", monos, [](const PBWMonomial& m) {
    return right_counit_leg(comultiply(AlgebraElement(m))) == AlgebraElement(m);
  });
  per_monomial(r, "m(S (x) id) Delta = eps 1", monos, [](const PBWMonomial& m) {
    const AlgebraElement x(m);
    return collapse(map_leg(comultiply(x), 0, [](const AlgebraElement& y) { return antipode(y); })) ==
           AlgebraElement(counit(x));
  });
  per_monomial(r, "m(id (x) S) Delta = eps 1", monos, [](const PBWMonomial& m) {
    const AlgebraElement x(m);
    return collapse(map_leg(comultiply(x), 1, [](const AlgebraElement& y) { return antipode(y); })) ==
           AlgebraElement(counit(x));
  });
  per_monomial(r, "S(S(x*)*) = x", monos, [](const PBWMonomial& m) {
    const AlgebraElement x(m);
    return antipode(star(antipode(star(x)))) == x;
  });
  per_monomial(r, "S^-1 = delta -> S(.) <- delta^-1", monos, [](const PBWMonomial& m) {
    const AlgebraElement s = antipode(AlgebraElement(m));
    const AlgebraElement twisted =
        act_functional(Functional::deltaInverse, act_functional(Functional::delta, s, Side::left), Side::right);
    return antipode_inverse(AlgebraElement(m)) == twisted;
  });
  per_monomial(r, "S S^-1 = id", monos, [](const PBWMonomial& m) {
    return antipode(antipode_inverse(AlgebraElement(m))) == AlgebraElement(m);
  });
  per_monomial(r, "Delta(x*) = (* (x) *) Delta(x)", monos, [](const PBWMonomial& m) {
    const TensorElement d = comultiply(AlgebraElement(m));
    TensorElement starred;
    for (const auto& [k, c] : d.terms()) {
      // The coefficient is a Laurent polynomial with rational coefficients
      // in a real variable, so conjugation leaves it alone.
      starred += tensor(c * star(AlgebraElement(k[0])), star(AlgebraElement(k[1])));
    }
    return comultiply(star(AlgebraElement(m))) == starred;
  });
  per_monomial(r, "Delta(g x) = Delta(g) Delta(x) for each generator g", monos, [](const PBWMonomial& m) {
    const AlgebraElement x(m);
    return std::all_of(kGenerators.begin(), kGenerators.end(), [&](Generator g) {
      return comultiply(AlgebraElement(g) * x) == comultiply(AlgebraElement(g)) * comultiply(x);
    });
  });

  // The rewriting system is an independent multiplication.
  std::vector<std::vector<Generator>> words;
  all_words(degree, words);
  int nf_fail = 0;
  for (const auto& w : words)
    if (rewriting::to_element(rewriting::reduce(w)) != normal_form(std::span<const Generator>(w))) ++nf_fail;
  r.add("normal_form agrees with the rewriting system", nf_fail == 0, nf_fail,
        "0 failures over " + std::to_string(words.size()) + " words");

  const auto pairs = rewriting::critical_pairs();
  const auto unresolved = std::count_if(pairs.begin(), pairs.end(), [](const auto& p) { return !p.resolved; });
  r.add("all critical pairs resolve", unresolved == 0, static_cast<long>(unresolved),
        "0 unresolved of " + std::to_string(pairs.size()));
  Json cp = Json::array();
  for (const auto& p : pairs) {
    std::string w;
    for (Generator g : p.overlap) w += (w.empty() ? "" : " ") + std::string(name(g));
    cp.push_back({{"overlap", w}, {"rules", p.left_rule + " / " + p.right_rule}, {"resolved", p.resolved}});
  }
  r.data["critical_pairs"] = cp;
  return r;
}

Report haar_suite(const HaarSuiteOptions& opts) {
  require_q_in_open_unit_interval(opts.q);
  Report r;
  r.command = "haar";
  r.params["q"] = opts.q;
  r.params["cutoff"] = opts.cutoff;
  r.params["tol"] = opts.tol;
  r.params["seed"] = opts.seed;
  r.params["modular_degree"] = opts.modular_degree;
  r.params["oracle_degree"] = opts.oracle_degree;
  r.conventions["modular_property"] = "h(x y) = h(y (delta -> x <- delta))";

  if (opts.element) {
    const double v = haar(*opts.element, opts.q, opts.cutoff);
    r.data["element"] = opts.element->to_string();
    r.data["value"] = v;
  }

  // Modular property.
  const auto monos = monomials_up_to_degree(opts.modular_degree);
  std::vector<AlgebraElement> twisted;
  for (const auto& m : monos) twisted.push_back(modular_twist(AlgebraElement(m)));
  double worst = 0.0;
  for (std::size_t i = 0; i < monos.size(); ++i)
    for (const auto& y : monos) {
      const AlgebraElement ye(y);
      const double lhs = haar(AlgebraElement(monos[i]) * ye, opts.q, opts.cutoff);
      const double rhs = haar(ye * twisted[i], opts.q, opts.cutoff);
      worst = std::max(worst, std::abs(lhs - rhs));
    }
  r.add("modular property over " + std::to_string(monos.size() * monos.size()) + " monomial pairs",
        worst <= opts.tol, worst, fmt_le(opts.tol));

  // Invariance oracle and closed form.
  const HaarOracle oracle = haar_invariance_oracle(opts.oracle_degree);
  r.add("invariance system determines every weight-zero value", oracle.rank_defect == 0, oracle.rank_defect, "0");
  double oracle_dev = 0.0, closed_dev = 0.0;
  Json values = Json::array();
  for (const auto& [m, exact] : oracle.values) {
    const double num = haar(AlgebraElement(m), opts.q, opts.cutoff);
    const double ex = exact.evaluate(opts.q);
    const double closed = -std::expm1(2 * std::log(opts.q)) / -std::expm1((2 * m.b + 2) * std::log(opts.q));
    oracle_dev = std::max(oracle_dev, std::abs(num - ex));
    closed_dev = std::max(closed_dev, std::abs(num - closed));
    values.push_back({{"monomial", m.to_string()}, {"exact", exact.to_string()}, {"numeric", num}});
  }
  r.add("haar agrees with the invariance oracle", oracle_dev <= opts.tol, oracle_dev, fmt_le(opts.tol));
  r.add("haar((gamma gamma*)^b) = (1-q^2)/(1-q^(2b+2))", closed_dev <= opts.tol, closed_dev, fmt_le(opts.tol));
  r.data["weight_zero_values"] = values;

  // Faithfulness on seeded random elements.
  std::mt19937_64 rng(opts.seed);
  const auto small = monomials_up_to_degree(3);
  std::uniform_int_distribution<std::size_t> pick(0, small.size() - 1);
  std::uniform_int_distribution<int> coeff(-3, 3);
  double min_value = 0.0;
  int nonpositive = 0;
  for (int s = 0; s < opts.positivity_samples; ++s) {
    AlgebraElement x;
    while (x.is_zero())
      for (int t = 0; t < 3; ++t) x.add_term(small[pick(rng)], LaurentQ(static_cast<long>(coeff(rng))));
    const double v = haar(star(x) * x, opts.q, opts.cutoff);
    if (s == 0 || v < min_value) min_value = v;
    if (!(v > 0.0)) ++nonpositive;
  }
  r.add("haar(x* x) > 0 on " + std::to_string(opts.positivity_samples) + " seeded samples", nonpositive == 0,
        min_value, "> 0");
  return r;
}

}  // namespace suq2::suites
