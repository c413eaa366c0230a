#include "suq2/rewriting.hpp"

#include <optional>

#include "suq2/errors.hpp"

namespace suq2::qalgebra::rewriting {

namespace {

using G = Generator;

void add(Combination& x, const Word& w, const LaurentQ& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = x.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) x.erase(it);
  }
}

std::optional<std::size_t> leftmost_redex(const Word& w, const Rule** which) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    for (const Rule& r : rules()) {
      if (w[i] == r.first && w[i + 1] == r.second) {
        *which = &r;
        return i;
      }
    }
  }
  return std::nullopt;
}

Combination apply_at(const Word& w, std::size_t pos, const Rule& r) {
  Combination out;
  for (const auto& [rhs, c] : r.rhs) {
    Word v(w.begin(), w.begin() + static_cast<long>(pos));
    v.insert(v.end(), rhs.begin(), rhs.end());
    v.insert(v.end(), w.begin() + static_cast<long>(pos) + 2, w.end());
    add(out, v, c);
  }
  return out;
}

}  // namespace

const std::vector<Rule>& rules() {
  static const std::vector<Rule> table = [] {
    const LaurentQ q = LaurentQ::q_pow(1), qinv = LaurentQ::q_pow(-1);
    std::vector<Rule> r;
    r.push_back({G::gamma, G::alpha, {{{G::alpha, G::gamma}, qinv}}, "gamma alpha -> q^-1 alpha gamma"});
    r.push_back({G::gammaStar, G::alpha, {{{G::alpha, G::gammaStar}, qinv}},
                 "gamma* alpha -> q^-1 alpha gamma*"});
    r.push_back({G::gamma, G::alphaStar, {{{G::alphaStar, G::gamma}, q}}, "gamma alpha* -> q alpha* gamma"});
    r.push_back({G::gammaStar, G::alphaStar, {{{G::alphaStar, G::gammaStar}, q}},
                 "gamma* alpha* -> q alpha* gamma*"});
    r.push_back({G::gammaStar, G::gamma, {{{G::gamma, G::gammaStar}, 1}}, "gamma* gamma -> gamma gamma*"});
    r.push_back({G::alphaStar, G::alpha, {{{}, 1}, {{G::gammaStar, G::gamma}, -1}},
                 "alpha* alpha -> 1 - gamma* gamma"});
    r.push_back({G::alpha, G::alphaStar, {{{}, 1}, {{G::gamma, G::gammaStar}, LaurentQ::monomial(2, -1)}},
                 "alpha alpha* -> 1 - q^2 gamma gamma*"});
    return r;
  }();
  return table;
}

Combination reduce(const Combination& x) {
  Combination done;
  Combination pending = x;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Rule* rule = nullptr;
    auto pos = leftmost_redex(node.key(), &rule);
    if (!pos) {
      add(done, node.key(), node.mapped());
      continue;
    }
    for (const auto& [w, c] : apply_at(node.key(), *pos, *rule)) add(pending, w, c * node.mapped());
  }
  return done;
}

Combination reduce(const Word& w) { return reduce(Combination{{w, 1}}); }

AlgebraElement to_element(const Combination& reduced) {
  AlgebraElement out;
  for (const auto& [w, c] : reduced) {
    PBWMonomial m;
    std::size_t i = 0;
    if (i < w.size() && w[i] == G::alphaStar) m.kind = Kind::star;
    const G lead = m.kind == Kind::star ? G::alphaStar : G::alpha;
    while (i < w.size() && w[i] == lead) ++m.a, ++i;
    while (i < w.size() && w[i] == G::gamma) ++m.b, ++i;
    while (i < w.size() && w[i] == G::gammaStar) ++m.c, ++i;
    if (i != w.size()) throw Error("word is not in normal form");
    out.add_term(m, c);
  }
  return out;
}

std::vector<CriticalPair> critical_pairs() {
  std::vector<CriticalPair> out;
  for (const Rule& r1 : rules()) {
    for (const Rule& r2 : rules()) {
      if (r1.second != r2.first) continue;
      const Word overlap{r1.first, r1.second, r2.second};
      Combination via_left;
      for (const auto& [w, c] : apply_at(overlap, 0, r1)) add(via_left, w, c);
      Combination via_right;
      for (const auto& [w, c] : apply_at(overlap, 1, r2)) add(via_right, w, c);
      CriticalPair cp{overlap, r1.label, r2.label, reduce(via_left) == reduce(via_right)};
      out.push_back(std::move(cp));
    }
  }
  return out;
}

}  // namespace suq2::qalgebra::rewriting
