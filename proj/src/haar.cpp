#include "suq2/haar.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "suq2/errors.hpp"
#include "suq2/gns.hpp"

namespace suq2::qalgebra {

double haar(const AlgebraElement& x, double q, int cutoff) {
  require_q_in_open_unit_interval(q);
  if (x.degree() > cutoff) {
    std::ostringstream msg;
    msg << "element of degree " << x.degree() << " needs cutoff >= " << x.degree() << ", got " << cutoff;
    throw CutoffTooSmall(msg.str());
  }
  const gns::SparseVector v = gns::apply_element(x, gns::vacuum(), q, cutoff);
  auto it = v.find(gns::PWIndex{0, 0, 0});
  return it == v.end() ? 0.0 : it->second;
}

const RationalFunction& HaarOracle::at(const PBWMonomial& m) const {
  auto it = determined.find(m);
  if (it == determined.end()) throw SingularSystem("Haar value of " + m.to_string() + " not determined");
  return it->second;
}

namespace {

using Row = std::map<int, RationalFunction>;  // column -> coefficient; column -1 holds the RHS

constexpr int kRhs = -1;

int leading(const Row& r) {
  for (const auto& [c, v] : r)
    if (c != kRhs) return c;
  return kRhs;
}

void axpy(Row& y, const RationalFunction& a, const Row& x) {
  for (const auto& [c, v] : x) {
    auto [it, inserted] = y.try_emplace(c, a * v);
    if (!inserted) {
      it->second = it->second + a * v;
      if (it->second.is_zero()) y.erase(it);
    }
  }
}

// Incremental echelon form over Q(q); pivots[c] has leading column c with
// coefficient 1.
class Eliminator {
 public:
  void add(Row row) {
    for (;;) {
      const int lead = leading(row);
      if (lead == kRhs) {
        if (!row.empty()) throw SingularSystem("Haar invariance system is inconsistent");
        return;
      }
      auto it = pivots_.find(lead);
      if (it == pivots_.end()) {
        const RationalFunction inv = RationalFunction(1) / row.at(lead);
        for (auto& [c, v] : row) v = v * inv;
        pivots_.emplace(lead, std::move(row));
        return;
      }
      const RationalFunction f = -row.at(lead);
      axpy(row, f, it->second);
    }
  }

  // Back substitution; afterwards a pivot row with no other unknown columns
  // determines its variable.
  void reduce_fully() {
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
      for (auto& [col, row] : pivots_) {
        if (col >= it->first) break;
        auto hit = row.find(it->first);
        if (hit == row.end()) continue;
        const RationalFunction f = -hit->second;
        axpy(row, f, it->second);
      }
    }
  }

  const std::map<int, Row>& pivots() const { return pivots_; }

 private:
  std::map<int, Row> pivots_;
};

}  // namespace

HaarOracle haar_invariance_oracle(int max_degree) {
  if (max_degree < 0) throw Error("max_degree must be nonnegative");
  const auto monos = monomials_up_to_degree(max_degree);
  HaarOracle out;
  out.max_degree = max_degree;

  // (id (x) phi)Delta(x) only involves phi on monomials with wt_R(x), so the
  // system splits into one block per right weight.
  std::map<int, std::vector<PBWMonomial>> blocks;
  for (const auto& m : monos) blocks[weights(m).right].push_back(m);

  for (const auto& [wr, unknowns] : blocks) {
    std::map<PBWMonomial, int> column;
    for (std::size_t k = 0; k < unknowns.size(); ++k) column[unknowns[k]] = static_cast<int>(k);
    Eliminator elim;
    if (wr == 0) elim.add(Row{{column.at(PBWMonomial::one()), 1}, {kRhs, 1}});
    for (const auto& x : unknowns) {
      std::map<PBWMonomial, Row> rows;  // first-leg basis monomial -> equation
      const TensorElement split = comultiply(AlgebraElement(x));
      for (const auto& [k, c] : split.terms()) {
        Row& r = rows[k[0]];
        const int col = column.at(k[1]);
        axpy(r, RationalFunction(c), Row{{col, 1}});
      }
      axpy(rows[PBWMonomial::one()], RationalFunction(-1), Row{{column.at(x), 1}});
      for (auto& [m, r] : rows) elim.add(std::move(r));
    }
    elim.reduce_fully();

    std::set<int> free_columns;
    for (std::size_t k = 0; k < unknowns.size(); ++k)
      if (!elim.pivots().count(static_cast<int>(k))) free_columns.insert(static_cast<int>(k));
    out.rank_defect += static_cast<int>(free_columns.size());

    for (std::size_t k = 0; k < unknowns.size(); ++k) {
      const int col = static_cast<int>(k);
      auto it = elim.pivots().find(col);
      bool determined = it != elim.pivots().end();
      if (determined) {
        for (const auto& [c, v] : it->second)
          if (c != kRhs && c != col) determined = false;
      }
      if (!determined) {
        out.undetermined.push_back(unknowns[k]);
        continue;
      }
      auto rhs = it->second.find(kRhs);
      const RationalFunction value = rhs == it->second.end() ? RationalFunction{} : rhs->second;
      out.determined.emplace(unknowns[k], value);
      if (weights(unknowns[k]) == Weights{0, 0}) out.values.emplace(unknowns[k], value);
    }
  }

  for (const auto& m : out.undetermined) {
    if (weights(m) == Weights{0, 0}) {
      std::ostringstream msg;
      msg << "Haar invariance system at degree " << max_degree << " leaves " << m.to_string()
          << " undetermined (rank defect " << out.rank_defect << "); raise the degree";
      throw SingularSystem(msg.str());
    }
  }
  return out;
}

}  // namespace suq2::qalgebra
