#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "suq2/report.hpp"

/// Representation rings of T and SU_q(2), Frobenius reciprocity and the
/// index pairing between line bundles and twisted Dirac classes.
///
/// Weights of T are in twice-units throughout: V_l restricts to
/// z^{-2l} + z^{-2l+2} + ... + z^{2l}.
namespace suq2::ktheory {

/// Element of R(T) = Z[z, 1/z].
class TCharacter {
 public:
  TCharacter() = default;
  static TCharacter z_pow(int k, long coeff = 1);

  const std::map<int, long>& coefficients() const { return c_; }
  long coefficient(int k) const;
  bool is_zero() const { return c_.empty(); }

  TCharacter& operator+=(const TCharacter& o);
  TCharacter& operator-=(const TCharacter& o);
  friend TCharacter operator+(TCharacter a, const TCharacter& b) { return a += b; }
  friend TCharacter operator-(TCharacter a, const TCharacter& b) { return a -= b; }
  friend TCharacter operator*(const TCharacter& a, const TCharacter& b);
  friend bool operator==(const TCharacter&, const TCharacter&) = default;

  /// "1*z^-1 + 1*z^1"; zero prints as "0".
  std::string to_string() const;

 private:
  void add(int k, long v);
  std::map<int, long> c_;
};

/// Element of R(G_q): integer combinations of V_l keyed by twol.
class GRepElement {
 public:
  GRepElement() = default;
  static GRepElement irrep(int twol, long coeff = 1);

  const std::map<int, long>& coefficients() const { return c_; }
  long coefficient(int twol) const;
  bool is_zero() const { return c_.empty(); }

  GRepElement& operator+=(const GRepElement& o);
  GRepElement& operator-=(const GRepElement& o);
  friend GRepElement operator+(GRepElement a, const GRepElement& b) { return a += b; }
  friend GRepElement operator-(GRepElement a, const GRepElement& b) { return a -= b; }
  friend GRepElement operator-(const GRepElement& a) { return GRepElement() - a; }
  friend bool operator==(const GRepElement&, const GRepElement&) = default;

  /// "-1*V[0]", "1*V[1/2] + 2*V[1]"; zero prints as "0".
  std::string to_string() const;
  static GRepElement parse(std::string_view text);

 private:
  void add(int twol, long v);
  std::map<int, long> c_;
};

TCharacter t_restrict(const GRepElement& v);
int frobenius_mult(int twol, int k);
/// Clebsch-Gordan product, extended bilinearly.
GRepElement fusion(const GRepElement& a, const GRepElement& b);
/// Sectors of L^2(E_k) with twol <= twolmax.
GRepElement l2_sectors(int k, int twolmax);

/// [L^2(E_{m+1})] - [L^2(E_{m-1})], computed as a finite difference of
/// sector lists (the two lists agree above twol = |m| + 1).
GRepElement index_combinatorial(int m);
/// -V_{(m-1)/2} for m > 0, 0 for m = 0, V_{-(m+1)/2} for m < 0.
GRepElement index_closed_form(int m);

/// Index of the model twisted Dirac operator H_{m+1} -> H_{m-1} on a
/// truncation: sectors matched by (twol, twoi) carry the scalar [l+1/2]_q and
/// kernels are found by numerical rank per twol sector. Throws MarginTooSmall
/// when twolmax < |m| + 4 and QOutOfRange unless 0 < q < 1.
GRepElement index_operator(int m, int twolmax, double q = 0.5);

/// Index of [E_k] against [D (x) E_l]; depends on k + l only.
GRepElement pairing(int k, int l);

struct PairingTable {
  std::map<std::pair<int, int>, GRepElement> entries;
  Json conventions = Json::object();

  /// Header "k,l,result", one row per entry in (k, l) order.
  std::string to_csv() const;
  Json to_json() const;
};

PairingTable pairing_table(int kmin, int kmax, int lmin, int lmax);

/// Pairing table checked against the closed form and the operator oracle.
Report index_table_report(int kmin, int kmax, int lmin, int lmax, int twolmax, double q,
                          PairingTable* table = nullptr);

/// comp(a) = z^a and comp2(a) = z^a for amin <= a <= amax, with the sign of
/// the restriction of [E_{-1}] calibrated on comp2(1).
Report verify_pd_unit_counit(int amin, int amax);

/// The 2x2 matrix of the Podles K-theory/K-homology pairing equals the identity.
Report verify_ds_double();

/// index_operator(m, twolmax, q) is the same for every q in the grid, |m| <= mmax.
Report q_grid_consistency(const std::vector<double>& qs, int twolmax, int mmax = 4);

/// gns sector counts of H_k against frobenius_mult, |k| <= kmax, twol <= twolmax.
Report frobenius_sector_agreement(int kmax, int twolmax);

}  // namespace suq2::ktheory
