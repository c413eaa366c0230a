#pragma once

#include <array>
#include <compare>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "suq2/laurent.hpp"

/// Exact model of the Hopf *-algebra C[SU_q(2)].
///
/// Elements are kept in the PBW basis
///   { alpha^a gamma^b gamma*^c }  u  { alpha*^a gamma^b gamma*^c : a >= 1 }
/// with Laurent-in-q rational coefficients. Multiplication uses the closed
/// form of right multiplication of a basis monomial by a generator, which is
/// what the rule table in rewriting.hpp normalizes to.
namespace suq2::qalgebra {

enum class Generator { alpha, alphaStar, gamma, gammaStar };

inline constexpr std::array<Generator, 4> kGenerators = {
    Generator::alpha, Generator::alphaStar, Generator::gamma, Generator::gammaStar};

constexpr Generator star(Generator g) {
  switch (g) {
    case Generator::alpha: return Generator::alphaStar;
    case Generator::alphaStar: return Generator::alpha;
    case Generator::gamma: return Generator::gammaStar;
    case Generator::gammaStar: return Generator::gamma;
  }
  return g;
}

std::string_view name(Generator g);

enum class Kind { plain, star };

struct Weights {
  int left = 0;
  int right = 0;
  friend bool operator==(const Weights&, const Weights&) = default;
};

/// alpha^a gamma^b gamma*^c (plain) or alpha*^a gamma^b gamma*^c (star, a >= 1).
struct PBWMonomial {
  Kind kind = Kind::plain;
  int a = 0;
  int b = 0;
  int c = 0;

  static PBWMonomial one() { return {}; }
  static PBWMonomial of(Generator g);

  int degree() const { return a + b + c; }
  bool is_one() const { return kind == Kind::plain && a == 0 && b == 0 && c == 0; }

  /// Letters in basis order, e.g. alpha alpha gamma gamma*.
  std::vector<Generator> word() const;

  std::string to_string() const;
  static PBWMonomial parse(std::string_view text);

  friend auto operator<=>(const PBWMonomial&, const PBWMonomial&) = default;
};

/// Torus weights read off from (pi (x) id)Delta and (id (x) pi)Delta.
Weights weights(const PBWMonomial& m);

/// All basis monomials with a + b + c <= max_degree, in canonical order.
std::vector<PBWMonomial> monomials_up_to_degree(int max_degree);

class AlgebraElement {
 public:
  using Terms = std::map<PBWMonomial, LaurentQ>;

  AlgebraElement() = default;
  AlgebraElement(long constant);  // NOLINT(google-explicit-constructor)
  explicit AlgebraElement(const LaurentQ& constant);
  explicit AlgebraElement(const PBWMonomial& m, const LaurentQ& coeff = 1);
  explicit AlgebraElement(Generator g);

  static AlgebraElement one() { return AlgebraElement(1L); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentQ coefficient(const PBWMonomial& m) const;

  /// Largest a + b + c over the support (0 for zero).
  int degree() const;
  /// True when every term carries the same (wt_L, wt_R).
  bool is_weight_homogeneous() const;

  void add_term(const PBWMonomial& m, const LaurentQ& coeff);

  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);
  AlgebraElement& operator*=(const LaurentQ& scalar);

  friend AlgebraElement operator+(AlgebraElement x, const AlgebraElement& y) { return x += y; }
  friend AlgebraElement operator-(AlgebraElement x, const AlgebraElement& y) { return x -= y; }
  friend AlgebraElement operator-(const AlgebraElement& x);
  friend AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y);
  friend AlgebraElement operator*(const LaurentQ& s, AlgebraElement x) { return x *= s; }
  friend bool operator==(const AlgebraElement& x, const AlgebraElement& y) {
    return x.terms_ == y.terms_;
  }

  /// "(1*q^0) * a^1 g^0 gs^0 + (-1*q^1) * as^1 g^1 gs^0"; zero prints as "0".
  std::string to_string() const;
  static AlgebraElement parse(std::string_view text);

 private:
  Terms terms_;
};

/// Tensor power of the algebra with N legs, canonical in every leg.
template <std::size_t N>
class Tensor {
 public:
  using Key = std::array<PBWMonomial, N>;
  using Terms = std::map<Key, LaurentQ>;

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Key& key, const LaurentQ& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Tensor& operator+=(const Tensor& other) {
    for (const auto& [k, c] : other.terms_) add_term(k, c);
    return *this;
  }
  Tensor& operator-=(const Tensor& other) {
    for (const auto& [k, c] : other.terms_) add_term(k, -c);
    return *this;
  }
  friend bool operator==(const Tensor& x, const Tensor& y) { return x.terms_ == y.terms_; }

 private:
  Terms terms_;
};

using TensorElement = Tensor<2>;
using TripleTensor = Tensor<3>;

/// Simple tensor x (x) y expanded into canonical terms.
TensorElement tensor(const AlgebraElement& x, const AlgebraElement& y);
/// Legwise product in the tensor square.
TensorElement operator*(const TensorElement& x, const TensorElement& y);

/// Normal form of the ordered product c_1 g_1 c_2 g_2 ... c_n g_n.
AlgebraElement normal_form(std::span<const std::pair<Generator, LaurentQ>> word);
AlgebraElement normal_form(std::span<const Generator> word);

inline AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) { return x * y; }

AlgebraElement star(const AlgebraElement& x);

TensorElement comultiply(const AlgebraElement& x);
/// Apply Delta to one leg of a tensor: leg 0 gives (Delta (x) id), leg 1 (id (x) Delta).
TripleTensor comultiply_leg(const TensorElement& t, int leg);
/// Multiplication map m(x (x) y) = xy.
AlgebraElement collapse(const TensorElement& t);

LaurentQ counit(const AlgebraElement& x);
AlgebraElement antipode(const AlgebraElement& x);
AlgebraElement antipode_inverse(const AlgebraElement& x);

/// The characters used for hit actions: counit, modular character delta and
/// its convolution inverse delta^{-1} = delta o S.
enum class Functional { counit, delta, deltaInverse };

LaurentQ evaluate(Functional f, const PBWMonomial& m);
LaurentQ evaluate(Functional f, const AlgebraElement& x);

/// left:  f -> x = x_(1) f(x_(2))
/// right: x <- f = f(x_(1)) x_(2)
enum class Side { left, right };
AlgebraElement act_functional(Functional f, const AlgebraElement& x, Side side);

/// delta -> x <- delta, the twist in the modular property of the Haar state.
AlgebraElement modular_twist(const AlgebraElement& x);

/// Apply a linear map leg-wise to a tensor.
template <std::size_t N, class Fn>
Tensor<N> map_leg(const Tensor<N>& t, std::size_t leg, Fn&& fn) {
  Tensor<N> out;
  for (const auto& [key, coeff] : t.terms()) {
    const AlgebraElement image = fn(AlgebraElement(key[leg]));
    for (const auto& [m, c] : image.terms()) {
      auto k = key;
      k[leg] = m;
      out.add_term(k, coeff * c);
    }
  }
  return out;
}

}  // namespace suq2::qalgebra
