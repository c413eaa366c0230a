#include "suq2/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "suq2/errors.hpp"

namespace suq2::qalgebra {

namespace {

using Term = std::pair<PBWMonomial, LaurentQ>;

PBWMonomial plain(int a, int b, int c) { return {Kind::plain, a, b, c}; }
PBWMonomial starred(int a, int b, int c) { return {Kind::star, a, b, c}; }
// alpha*^a gamma^b gamma*^c with the a = 0 case folded into the plain branch.
PBWMonomial star_or_plain(int a, int b, int c) { return a == 0 ? plain(0, b, c) : starred(a, b, c); }

// Right multiplication of a basis monomial by one generator. At most two
// terms come out; this is the whole rewriting system in closed form.
std::vector<Term> times_generator(const PBWMonomial& m, Generator g) {
  const int bc = m.b + m.c;
  switch (g) {
    case Generator::gamma:
      return {{{m.kind, m.a, m.b + 1, m.c}, 1}};
    case Generator::gammaStar:
      return {{{m.kind, m.a, m.b, m.c + 1}, 1}};
    case Generator::alpha:
      // gamma^b gamma*^c alpha = q^{-(b+c)} alpha gamma^b gamma*^c
      if (m.kind == Kind::plain) return {{plain(m.a + 1, m.b, m.c), LaurentQ::q_pow(-bc)}};
      // alpha* alpha = 1 - gamma gamma*
      return {{star_or_plain(m.a - 1, m.b, m.c), LaurentQ::q_pow(-bc)},
              {star_or_plain(m.a - 1, m.b + 1, m.c + 1), -LaurentQ::q_pow(-bc)}};
    case Generator::alphaStar:
      // gamma^b gamma*^c alpha* = q^{b+c} alpha* gamma^b gamma*^c
      if (m.kind == Kind::star) return {{starred(m.a + 1, m.b, m.c), LaurentQ::q_pow(bc)}};
      if (m.a == 0) return {{starred(1, m.b, m.c), LaurentQ::q_pow(bc)}};
      // alpha alpha* = 1 - q^2 gamma gamma*
      return {{plain(m.a - 1, m.b, m.c), LaurentQ::q_pow(bc)},
              {plain(m.a - 1, m.b + 1, m.c + 1), -LaurentQ::q_pow(bc + 2)}};
  }
  return {};
}

AlgebraElement times_generator(const AlgebraElement& x, Generator g) {
  AlgebraElement out;
  for (const auto& [m, c] : x.terms())
    for (const auto& [m2, c2] : times_generator(m, g)) out.add_term(m2, c * c2);
  return out;
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\n\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\n\r");
  return std::string(s.substr(b, e - b + 1));
}

// Images of generators under a map given as a table; used by the
// antihomomorphisms star, S and S^{-1}.
template <class Table>
AlgebraElement apply_antihomomorphism(const AlgebraElement& x, Table&& image) {
  AlgebraElement out;
  for (const auto& [m, c] : x.terms()) {
    auto letters = m.word();
    AlgebraElement acc = AlgebraElement::one();
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) acc = acc * image(*it);
    out += c * acc;
  }
  return out;
}

}  // namespace

std::string_view name(Generator g) {
  switch (g) {
    case Generator::alpha: return "alpha";
    case Generator::alphaStar: return "alphaStar";
    case Generator::gamma: return "gamma";
    case Generator::gammaStar: return "gammaStar";
  }
  return "?";
}

PBWMonomial PBWMonomial::of(Generator g) {
  switch (g) {
    case Generator::alpha: return plain(1, 0, 0);
    case Generator::alphaStar: return starred(1, 0, 0);
    case Generator::gamma: return plain(0, 1, 0);
    case Generator::gammaStar: return plain(0, 0, 1);
  }
  return {};
}

std::vector<Generator> PBWMonomial::word() const {
  std::vector<Generator> w;
  w.reserve(static_cast<std::size_t>(degree()));
  w.insert(w.end(), static_cast<std::size_t>(a),
           kind == Kind::plain ? Generator::alpha : Generator::alphaStar);
  w.insert(w.end(), static_cast<std::size_t>(b), Generator::gamma);
  w.insert(w.end(), static_cast<std::size_t>(c), Generator::gammaStar);
  return w;
}

std::string PBWMonomial::to_string() const {
  std::ostringstream os;
  os << (kind == Kind::plain ? "a^" : "as^") << a << " g^" << b << " gs^" << c;
  return os.str();
}

PBWMonomial PBWMonomial::parse(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string ta, tb, tc, extra;
  if (!(is >> ta >> tb >> tc) || (is >> extra)) throw ParseError("bad monomial: " + std::string(text));
  auto exponent = [&](const std::string& tok, std::string_view prefix) {
    if (tok.rfind(prefix, 0) != 0) throw ParseError("bad monomial factor: " + tok);
    const std::string digits = tok.substr(prefix.size());
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
      throw ParseError("bad monomial exponent: " + tok);
    return std::stoi(digits);
  };
  PBWMonomial m;
  if (ta.rfind("as^", 0) == 0) {
    m.kind = Kind::star;
    m.a = exponent(ta, "as^");
    if (m.a < 1) throw ParseError("star monomial needs a >= 1: " + std::string(text));
  } else {
    m.a = exponent(ta, "a^");
  }
  m.b = exponent(tb, "g^");
  m.c = exponent(tc, "gs^");
  return m;
}

Weights weights(const PBWMonomial& m) {
  const int s = m.kind == Kind::plain ? 1 : -1;
  return {s * m.a - m.b + m.c, s * m.a + m.b - m.c};
}

std::vector<PBWMonomial> monomials_up_to_degree(int max_degree) {
  std::vector<PBWMonomial> out;
  for (int a = 0; a <= max_degree; ++a)
    for (int b = 0; a + b <= max_degree; ++b)
      for (int c = 0; a + b + c <= max_degree; ++c) out.push_back(plain(a, b, c));
  for (int a = 1; a <= max_degree; ++a)
    for (int b = 0; a + b <= max_degree; ++b)
      for (int c = 0; a + b + c <= max_degree; ++c) out.push_back(starred(a, b, c));
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------- element

AlgebraElement::AlgebraElement(long constant) : AlgebraElement(LaurentQ(constant)) {}

AlgebraElement::AlgebraElement(const LaurentQ& constant) { add_term(PBWMonomial::one(), constant); }

AlgebraElement::AlgebraElement(const PBWMonomial& m, const LaurentQ& coeff) { add_term(m, coeff); }

AlgebraElement::AlgebraElement(Generator g) : AlgebraElement(PBWMonomial::of(g)) {}

LaurentQ AlgebraElement::coefficient(const PBWMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? LaurentQ{} : it->second;
}

int AlgebraElement::degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool AlgebraElement::is_weight_homogeneous() const {
  if (terms_.empty()) return true;
  const Weights w = weights(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return weights(t.first) == w; });
}

void AlgebraElement::add_term(const PBWMonomial& m, const LaurentQ& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const LaurentQ& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

AlgebraElement operator-(const AlgebraElement& x) {
  AlgebraElement out;
  for (const auto& [m, c] : x.terms_) out.terms_.emplace(m, -c);
  return out;
}

AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) {
  AlgebraElement out;
  for (const auto& [my, cy] : y.terms_) {
    AlgebraElement partial = x;
    for (Generator g : my.word()) partial = times_generator(partial, g);
    out += cy * partial;
  }
  return out;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    out += "(" + c.to_string() + ") * " + m.to_string();
  }
  return out;
}

AlgebraElement AlgebraElement::parse(std::string_view text) {
  const std::string body = trim(text);
  if (body.empty()) throw ParseError("empty algebra element");
  if (body == "0") return {};
  AlgebraElement out;
  std::size_t pos = 0;
  while (pos < body.size()) {
    if (body[pos] != '(') throw ParseError("expected '(' at: " + body.substr(pos));
    const auto close = body.find(')', pos);
    if (close == std::string::npos) throw ParseError("unbalanced parenthesis");
    const LaurentQ coeff = LaurentQ::parse(std::string_view(body).substr(pos + 1, close - pos - 1));
    const auto times = body.find(" * ", close);
    if (times != close + 1) throw ParseError("expected ' * ' after coefficient");
    const auto next = body.find(" + (", times);
    const std::string mono = body.substr(times + 3, next == std::string::npos ? std::string::npos : next - times - 3);
    out.add_term(PBWMonomial::parse(mono), coeff);
    if (next == std::string::npos) break;
    pos = next + 3;
  }
  return out;
}

// ---------------------------------------------------------------- tensors

TensorElement tensor(const AlgebraElement& x, const AlgebraElement& y) {
  TensorElement out;
  for (const auto& [mx, cx] : x.terms())
    for (const auto& [my, cy] : y.terms()) out.add_term({mx, my}, cx * cy);
  return out;
}

TensorElement operator*(const TensorElement& x, const TensorElement& y) {
  TensorElement out;
  for (const auto& [kx, cx] : x.terms()) {
    for (const auto& [ky, cy] : y.terms()) {
      const AlgebraElement left = AlgebraElement(kx[0]) * AlgebraElement(ky[0]);
      const AlgebraElement right = AlgebraElement(kx[1]) * AlgebraElement(ky[1]);
      const LaurentQ c = cx * cy;
      for (const auto& [ml, cl] : left.terms())
        for (const auto& [mr, cr] : right.terms()) out.add_term({ml, mr}, c * cl * cr);
    }
  }
  return out;
}

AlgebraElement normal_form(std::span<const std::pair<Generator, LaurentQ>> word) {
  AlgebraElement acc = AlgebraElement::one();
  for (const auto& [g, c] : word) {
    acc = times_generator(acc, g);
    acc *= c;
  }
  return acc;
}

AlgebraElement normal_form(std::span<const Generator> word) {
  AlgebraElement acc = AlgebraElement::one();
  for (Generator g : word) acc = times_generator(acc, g);
  return acc;
}

AlgebraElement star(const AlgebraElement& x) {
  // Coefficients are rational Laurent polynomials in the real parameter q,
  // hence fixed by conjugation.
  return apply_antihomomorphism(x, [](Generator g) { return AlgebraElement(star(g)); });
}

namespace {

TensorElement comultiply_generator(Generator g) {
  using G = Generator;
  const AlgebraElement a(G::alpha), as(G::alphaStar), c(G::gamma), cs(G::gammaStar);
  const LaurentQ q = LaurentQ::q_pow(1);
  TensorElement out;
  switch (g) {
    case G::alpha:  // alpha (x) alpha - q gamma* (x) gamma
      out = tensor(a, a);
      out -= tensor(q * cs, c);
      break;
    case G::alphaStar:  // alpha* (x) alpha* - q gamma (x) gamma*
      out = tensor(as, as);
      out -= tensor(q * c, cs);
      break;
    case G::gamma:  // gamma (x) alpha + alpha* (x) gamma
      out = tensor(c, a);
      out += tensor(as, c);
      break;
    case G::gammaStar:  // gamma* (x) alpha* + alpha (x) gamma*
      out = tensor(cs, as);
      out += tensor(a, cs);
      break;
  }
  return out;
}

TensorElement comultiply_monomial(const PBWMonomial& m) {
  TensorElement acc = tensor(AlgebraElement::one(), AlgebraElement::one());
  for (Generator g : m.word()) acc = acc * comultiply_generator(g);
  return acc;
}

}  // namespace

TensorElement comultiply(const AlgebraElement& x) {
  TensorElement out;
  for (const auto& [m, c] : x.terms()) {
    const TensorElement split = comultiply_monomial(m);
    for (const auto& [k, ck] : split.terms()) out.add_term(k, c * ck);
  }
  return out;
}

TripleTensor comultiply_leg(const TensorElement& t, int leg) {
  TripleTensor out;
  for (const auto& [k, c] : t.terms()) {
    const TensorElement split = comultiply_monomial(k[static_cast<std::size_t>(leg)]);
    for (const auto& [ks, cs] : split.terms()) {
      TripleTensor::Key key = leg == 0 ? TripleTensor::Key{ks[0], ks[1], k[1]}
                                       : TripleTensor::Key{k[0], ks[0], ks[1]};
      out.add_term(key, c * cs);
    }
  }
  return out;
}

AlgebraElement collapse(const TensorElement& t) {
  AlgebraElement out;
  for (const auto& [k, c] : t.terms()) out += c * (AlgebraElement(k[0]) * AlgebraElement(k[1]));
  return out;
}

LaurentQ counit(const AlgebraElement& x) { return evaluate(Functional::counit, x); }

AlgebraElement antipode(const AlgebraElement& x) {
  return apply_antihomomorphism(x, [](Generator g) {
    switch (g) {
      case Generator::alpha: return AlgebraElement(Generator::alphaStar);
      case Generator::alphaStar: return AlgebraElement(Generator::alpha);
      case Generator::gamma: return LaurentQ::monomial(1, -1) * AlgebraElement(Generator::gamma);
      case Generator::gammaStar:
        return LaurentQ::monomial(-1, -1) * AlgebraElement(Generator::gammaStar);
    }
    return AlgebraElement{};
  });
}

AlgebraElement antipode_inverse(const AlgebraElement& x) {
  return apply_antihomomorphism(x, [](Generator g) {
    switch (g) {
      case Generator::alpha: return AlgebraElement(Generator::alphaStar);
      case Generator::alphaStar: return AlgebraElement(Generator::alpha);
      case Generator::gamma: return LaurentQ::monomial(-1, -1) * AlgebraElement(Generator::gamma);
      case Generator::gammaStar:
        return LaurentQ::monomial(1, -1) * AlgebraElement(Generator::gammaStar);
    }
    return AlgebraElement{};
  });
}

LaurentQ evaluate(Functional f, const PBWMonomial& m) {
  // All three are characters vanishing on gamma and gamma*.
  if (m.b != 0 || m.c != 0) return {};
  const int sign = m.kind == Kind::plain ? 1 : -1;
  switch (f) {
    case Functional::counit: return 1;
    case Functional::delta: return LaurentQ::q_pow(-sign * m.a);
    case Functional::deltaInverse: return LaurentQ::q_pow(sign * m.a);
  }
  return {};
}

LaurentQ evaluate(Functional f, const AlgebraElement& x) {
  LaurentQ out;
  for (const auto& [m, c] : x.terms()) out += c * evaluate(f, m);
  return out;
}

AlgebraElement act_functional(Functional f, const AlgebraElement& x, Side side) {
  AlgebraElement out;
  const TensorElement split = comultiply(x);
  for (const auto& [k, c] : split.terms()) {
    if (side == Side::left)
      out.add_term(k[0], c * evaluate(f, k[1]));
    else
      out.add_term(k[1], c * evaluate(f, k[0]));
  }
  return out;
}

AlgebraElement modular_twist(const AlgebraElement& x) {
  return act_functional(Functional::delta, act_functional(Functional::delta, x, Side::right),
                        Side::left);
}

}  // namespace suq2::qalgebra
