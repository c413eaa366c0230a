#include "suq2/ktheory.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "suq2/errors.hpp"
#include "suq2/geometry.hpp"
#include "suq2/gns.hpp"

namespace suq2::ktheory {

namespace {

std::string twol_label(int twol) {
  return twol % 2 == 0 ? std::to_string(twol / 2) : std::to_string(twol) + "/2";
}

long parse_long(std::string_view s) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw ParseError("bad integer '" + std::string(s) + "'");
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

// Relative threshold for the per-sector numerical rank.
constexpr double kRankTolerance = 1e-9;

}  // namespace

// ------------------------------------------------------------- TCharacter

TCharacter TCharacter::z_pow(int k, long coeff) {
  TCharacter t;
  t.add(k, coeff);
  return t;
}

long TCharacter::coefficient(int k) const {
  auto it = c_.find(k);
  return it == c_.end() ? 0 : it->second;
}

void TCharacter::add(int k, long v) {
  if (v == 0) return;
  const long s = (c_[k] += v);
  if (s == 0) c_.erase(k);
}

TCharacter& TCharacter::operator+=(const TCharacter& o) {
  for (const auto& [k, v] : o.c_) add(k, v);
  return *this;
}

TCharacter& TCharacter::operator-=(const TCharacter& o) {
  for (const auto& [k, v] : o.c_) add(k, -v);
  return *this;
}

TCharacter operator*(const TCharacter& a, const TCharacter& b) {
  TCharacter out;
  for (const auto& [i, x] : a.c_)
    for (const auto& [j, y] : b.c_) out.add(i + j, x * y);
  return out;
}

std::string TCharacter::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (const auto& [k, v] : c_) {
    if (!out.empty()) out += " + ";
    out += std::to_string(v) + "*z^" + std::to_string(k);
  }
  return out;
}

// ------------------------------------------------------------ GRepElement

GRepElement GRepElement::irrep(int twol, long coeff) {
  if (twol < 0) throw Error("twol must be nonnegative");
  GRepElement g;
  g.add(twol, coeff);
  return g;
}

long GRepElement::coefficient(int twol) const {
  auto it = c_.find(twol);
  return it == c_.end() ? 0 : it->second;
}

void GRepElement::add(int twol, long v) {
  if (v == 0) return;
  const long s = (c_[twol] += v);
  if (s == 0) c_.erase(twol);
}

GRepElement& GRepElement::operator+=(const GRepElement& o) {
  for (const auto& [k, v] : o.c_) add(k, v);
  return *this;
}

GRepElement& GRepElement::operator-=(const GRepElement& o) {
  for (const auto& [k, v] : o.c_) add(k, -v);
  return *this;
}

std::string GRepElement::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (const auto& [k, v] : c_) {
    if (!out.empty()) out += " + ";
    out += std::to_string(v) + "*V[" + twol_label(k) + "]";
  }
  return out;
}

GRepElement GRepElement::parse(std::string_view text) {
  text = trim(text);
  if (text == "0") return {};
  if (text.empty()) throw ParseError("empty representation-ring element");
  GRepElement out;
  while (!text.empty()) {
    const auto plus = text.find(" + ");
    std::string_view term = trim(text.substr(0, plus));
    text = plus == std::string_view::npos ? std::string_view{} : text.substr(plus + 3);
    const auto star = term.find("*V[");
    if (star == std::string_view::npos || term.back() != ']') throw ParseError("bad term '" + std::string(term) + "'");
    const long coeff = parse_long(term.substr(0, star));
    std::string_view label = term.substr(star + 3, term.size() - star - 4);
    int twol = 0;
    if (const auto slash = label.find('/'); slash != std::string_view::npos) {
      if (label.substr(slash + 1) != "2") throw ParseError("spin label must be n or n/2");
      twol = static_cast<int>(parse_long(label.substr(0, slash)));
      if (twol % 2 == 0) throw ParseError("half-integer label with even numerator");
    } else {
      twol = 2 * static_cast<int>(parse_long(label));
    }
    if (twol < 0) throw ParseError("negative spin label");
    out.add(twol, coeff);
  }
  return out;
}

// ------------------------------------------------------------ arithmetic

TCharacter t_restrict(const GRepElement& v) {
  TCharacter out;
  for (const auto& [twol, n] : v.coefficients())
    for (int w = -twol; w <= twol; w += 2) out += TCharacter::z_pow(w, n);
  return out;
}

int frobenius_mult(int twol, int k) {
  if (twol < 0) throw Error("twol must be nonnegative");
  return twol >= std::abs(k) && (twol - k) % 2 == 0 ? 1 : 0;
}

GRepElement fusion(const GRepElement& a, const GRepElement& b) {
  GRepElement out;
  for (const auto& [ta, x] : a.coefficients())
    for (const auto& [tb, y] : b.coefficients())
      for (int t = std::abs(ta - tb); t <= ta + tb; t += 2) out += GRepElement::irrep(t, x * y);
  return out;
}

GRepElement l2_sectors(int k, int twolmax) {
  GRepElement out;
  for (int t = 0; t <= twolmax; ++t)
    if (frobenius_mult(t, k)) out += GRepElement::irrep(t);
  return out;
}

GRepElement index_combinatorial(int m) {
  // Above |m| + 1 both sector lists contain every level of the right parity.
  const int top = std::abs(m) + 1;
  return l2_sectors(m + 1, top) - l2_sectors(m - 1, top);
}

GRepElement index_closed_form(int m) {
  if (m > 0) return -GRepElement::irrep(m - 1);
  if (m < 0) return GRepElement::irrep(-m - 1);
  return {};
}

GRepElement index_operator(int m, int twolmax, double q) {
  require_q_in_open_unit_interval(q);
  if (twolmax < std::abs(m) + 4) {
    std::ostringstream msg;
    msg << "index_operator(m=" << m << ") needs twolmax >= " << std::abs(m) + 4 << ", got " << twolmax;
    throw MarginTooSmall(msg.str());
  }
  const gns::TruncatedSpace space(twolmax);
  const geometry::SectionSpace src(space, m + 1);
  const geometry::SectionSpace dst(space, m - 1);

  // Group local positions by twol level.
  std::map<int, std::vector<std::size_t>> src_at, dst_at;
  for (std::size_t k = 0; k < src.size(); ++k) src_at[src.twol_at(k)].push_back(src.positions()[k]);
  for (std::size_t k = 0; k < dst.size(); ++k) dst_at[dst.twol_at(k)].push_back(dst.positions()[k]);

  GRepElement out;
  for (int L = 0; L <= twolmax; ++L) {
    const auto& cols = src_at[L];
    const auto& rows = dst_at[L];
    if (cols.empty() && rows.empty()) continue;
    Eigen::MatrixXd block = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(rows.size()),
                                                  static_cast<Eigen::Index>(cols.size()));
    const double scalar = geometry::q_number((L + 1) / 2.0, q);
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (std::size_t r = 0; r < rows.size(); ++r)
        if (space.at(cols[c]).twoi == space.at(rows[r]).twoi)
          block(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = scalar;
    long rank = 0;
    if (block.size() > 0) {
      Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(block);
      qr.setThreshold(kRankTolerance);
      rank = qr.rank();
    }
    const long ker_plus = static_cast<long>(cols.size()) - rank;
    const long ker_minus = static_cast<long>(rows.size()) - rank;
    const long diff = ker_plus - ker_minus;
    if (diff % (L + 1) != 0) throw Error("kernel difference is not a multiple of the sector dimension");
    out += GRepElement::irrep(L, diff / (L + 1));
  }
  return out;
}

GRepElement pairing(int k, int l) { return index_combinatorial(k + l); }

// --------------------------------------------------------------- tables

std::string PairingTable::to_csv() const {
  std::ostringstream os;
  os << "k,l,result\n";
  for (const auto& [kl, v] : entries) os << kl.first << "," << kl.second << "," << v.to_string() << "\n";
  return os.str();
}

Json PairingTable::to_json() const {
  Json rows = Json::array();
  for (const auto& [kl, v] : entries) rows.push_back({{"k", kl.first}, {"l", kl.second}, {"result", v.to_string()}});
  Json out;
  out["conventions"] = conventions;
  out["entries"] = rows;
  return out;
}

PairingTable pairing_table(int kmin, int kmax, int lmin, int lmax) {
  PairingTable t;
  for (int k = kmin; k <= kmax; ++k)
    for (int l = lmin; l <= lmax; ++l) t.entries[{k, l}] = pairing(k, l);
  t.conventions["section_weight"] = "H_k = {e(l,i,j) : 2j = -k}";
  t.conventions["index_sign"] = "[ker D+] - [ker D-] with D+ : L^2(E_{m+1}) -> L^2(E_{m-1})";
  return t;
}

Report index_table_report(int kmin, int kmax, int lmin, int lmax, int twolmax, double q, PairingTable* table) {
  require_q_in_open_unit_interval(q);
  Report r;
  r.command = "index-table";
  r.params["kmin"] = kmin;
  r.params["kmax"] = kmax;
  r.params["lmin"] = lmin;
  r.params["lmax"] = lmax;
  r.params["twolmax"] = twolmax;
  r.params["q"] = q;

  PairingTable t = pairing_table(kmin, kmax, lmin, lmax);
  r.conventions = t.conventions;

  std::map<int, GRepElement> oracle;
  int closed_mismatch = 0, oracle_mismatch = 0;
  Json first_bad = nullptr;
  for (const auto& [kl, v] : t.entries) {
    const int m = kl.first + kl.second;
    if (!oracle.count(m)) oracle[m] = index_operator(m, twolmax, q);
    if (v != index_closed_form(m)) ++closed_mismatch;
    if (v != oracle[m]) {
      ++oracle_mismatch;
      if (first_bad.is_null())
        first_bad = {{"k", kl.first}, {"l", kl.second}, {"combinatorial", v.to_string()},
                     {"operator", oracle[m].to_string()}};
    }
  }
  const auto n = static_cast<long>(t.entries.size());
  r.add("entries match the three-case closed form", closed_mismatch == 0, closed_mismatch, "0 mismatches of " + std::to_string(n));
  r.add("operator-kernel oracle agrees entry by entry", oracle_mismatch == 0, oracle_mismatch,
        "0 mismatches of " + std::to_string(n));
  if (!first_bad.is_null()) r.data["first_oracle_mismatch"] = first_bad;
  r.data["table"] = t.to_json()["entries"];
  if (table) *table = std::move(t);
  return r;
}

// ------------------------------------------------------------- duality

namespace {

TCharacter comp(int a, const TCharacter& eps0, const TCharacter& eps1) {
  return t_restrict(pairing(a, -1)) * eps0 - t_restrict(pairing(a, 0)) * eps1;
}

TCharacter comp2(int a, const TCharacter& eps_minus1, const TCharacter& eps0) {
  return eps_minus1 * t_restrict(pairing(0, a)) - eps0 * t_restrict(pairing(1, a));
}

}  // namespace

Report verify_pd_unit_counit(int amin, int amax) {
  Report r;
  r.command = "duality";
  r.params["amin"] = amin;
  r.params["amax"] = amax;

  const TCharacter eps0 = TCharacter::z_pow(0);
  const TCharacter eps1 = TCharacter::z_pow(1);
  // Calibrate the restriction of [E_{-1}] on comp2(1) = z.
  const std::vector<std::pair<std::string, TCharacter>> candidates = {
      {"[E_b] -> z^b", TCharacter::z_pow(-1)}, {"[E_b] -> z^|b|", TCharacter::z_pow(1)}};
  Json calib = Json::array();
  std::string chosen;
  TCharacter eps_m1;
  for (const auto& [label, e] : candidates) {
    const TCharacter v = comp2(1, e, eps0);
    const bool ok = v == TCharacter::z_pow(1);
    calib.push_back({{"convention", label}, {"comp2(1)", v.to_string()}, {"survives", ok}});
    if (ok && chosen.empty()) {
      chosen = label;
      eps_m1 = e;
    }
  }
  r.conventions["epsilon_restriction"] = chosen.empty() ? "none survives" : chosen;
  r.conventions["epsilon_calibration"] = calib;
  r.conventions["comp2"] = "reconstructed: z^-1 res(pairing(0,a)) - res(pairing(1,a))";
  r.add("a restriction convention survives calibration", !chosen.empty(), chosen.empty() ? "none" : chosen,
        "comp2(1) = z^1");

  Json rows = Json::array();
  for (int a = amin; a <= amax; ++a) {
    const TCharacter want = TCharacter::z_pow(a);
    const TCharacter c1 = comp(a, eps0, eps1);
    const TCharacter c2 = comp2(a, eps_m1, eps0);
    r.add("comp(" + std::to_string(a) + ") = z^" + std::to_string(a), c1 == want, c1.to_string(), want.to_string());
    r.add("comp2(" + std::to_string(a) + ") = z^" + std::to_string(a), c2 == want, c2.to_string(), want.to_string());
    rows.push_back({{"a", a}, {"comp", c1.to_string()}, {"comp2", c2.to_string()}});
  }
  r.data["identities"] = rows;
  return r;
}

Report verify_ds_double() {
  Report r;
  r.command = "ds-double";
  const GRepElement M[2][2] = {{-pairing(1, 0), -pairing(1, -1)}, {pairing(0, 0), pairing(0, -1)}};
  const GRepElement one = GRepElement::irrep(0);
  Json mat = Json::array();
  for (int i = 0; i < 2; ++i) {
    Json row = Json::array();
    for (int j = 0; j < 2; ++j) {
      const GRepElement& want = i == j ? one : GRepElement();
      row.push_back(M[i][j].to_string());
      r.add("M[" + std::to_string(i) + "][" + std::to_string(j) + "]", M[i][j] == want, M[i][j].to_string(),
            want.to_string());
    }
    mat.push_back(row);
  }
  r.data["M"] = mat;
  const TCharacter eps0 = TCharacter::z_pow(0), eps1 = TCharacter::z_pow(1);
  for (int a : {0, 1}) {
    const TCharacter c = comp(a, eps0, eps1);
    r.add("comp(" + std::to_string(a) + ") = z^" + std::to_string(a), c == TCharacter::z_pow(a), c.to_string(),
          TCharacter::z_pow(a).to_string());
  }
  r.conventions["basis"] = "{[D], [D (x) E_-1]} against {-[E_1], [E_0]}";
  return r;
}

Report q_grid_consistency(const std::vector<double>& qs, int twolmax, int mmax) {
  for (double q : qs) require_q_in_open_unit_interval(q);
  Report r;
  r.command = "q-grid";
  r.params["qs"] = qs;
  r.params["twolmax"] = twolmax;
  r.params["mmax"] = mmax;
  Json rows = Json::array();
  for (int m = -mmax; m <= mmax; ++m) {
    Json per_q = Json::array();
    std::vector<GRepElement> vals;
    for (double q : qs) {
      vals.push_back(index_operator(m, twolmax, q));
      per_q.push_back(vals.back().to_string());
    }
    const bool same = std::all_of(vals.begin(), vals.end(), [&](const GRepElement& v) { return v == vals.front(); });
    const std::string shown = vals.empty() ? "no q values" : vals.front().to_string();
    r.add("index(m=" + std::to_string(m) + ") identical across the grid", same, same ? Json(shown) : Json(per_q),
          "one value");
    rows.push_back({{"m", m}, {"values", per_q}});
  }
  r.data["grid"] = rows;
  return r;
}

Report frobenius_sector_agreement(int kmax, int twolmax) {
  Report r;
  r.command = "frobenius-sectors";
  r.params["kmax"] = kmax;
  r.params["twolmax"] = twolmax;
  const gns::TruncatedSpace space(twolmax);
  int mismatches = 0;
  for (int k = -kmax; k <= kmax; ++k)
    for (int t = 0; t <= twolmax; ++t)
      if (gns::sector_count(space, k, t) != frobenius_mult(t, k)) ++mismatches;
  r.add("sector counts equal Frobenius multiplicities", mismatches == 0, mismatches, "0");
  return r;
}

}  // namespace suq2::ktheory
