#include "suq2/laurent.hpp"

#include <cmath>
#include <sstream>

#include "suq2/errors.hpp"

namespace suq2 {

void require_q_in_open_unit_interval(double q) {
  if (!(q > 0.0 && q < 1.0)) {
    std::ostringstream msg;
    msg << "q must lie in the open interval (0,1), got " << q;
    throw QOutOfRange(msg.str());
  }
}

namespace qalgebra {

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\n\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\n\r");
  return std::string(s.substr(b, e - b + 1));
}

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational");
  Rational r;
  if (r.set_str(s, 10) != 0) throw ParseError("bad rational: " + s);
  r.canonicalize();
  return r;
}

}  // namespace

LaurentQ::LaurentQ(long constant) {
  if (constant != 0) coeffs_.emplace(0, Rational(constant));
}

LaurentQ::LaurentQ(const Rational& constant) {
  if (constant != 0) coeffs_.emplace(0, constant).first->second.canonicalize();
}

LaurentQ LaurentQ::monomial(int exponent, const Rational& c) {
  LaurentQ out;
  out.add_term(exponent, c);
  return out;
}

Rational LaurentQ::coefficient(int exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void LaurentQ::add_term(int exponent, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(exponent, c);
  if (inserted) {
    // Callers may hand in unreduced fractions such as 4/2.
    it->second.canonicalize();
  } else {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

LaurentQ& LaurentQ::operator+=(const LaurentQ& other) {
  for (const auto& [e, c] : other.coeffs_) add_term(e, c);
  return *this;
}

LaurentQ& LaurentQ::operator-=(const LaurentQ& other) {
  for (const auto& [e, c] : other.coeffs_) add_term(e, -c);
  return *this;
}

LaurentQ operator*(const LaurentQ& a, const LaurentQ& b) {
  LaurentQ out;
  for (const auto& [ea, ca] : a.coeffs_)
    for (const auto& [eb, cb] : b.coeffs_) out.add_term(ea + eb, ca * cb);
  return out;
}

LaurentQ& LaurentQ::operator*=(const LaurentQ& other) {
  *this = *this * other;
  return *this;
}

LaurentQ operator-(const LaurentQ& a) {
  LaurentQ out;
  for (const auto& [e, c] : a.coeffs_) out.coeffs_.emplace(e, -c);
  return out;
}

LaurentQ LaurentQ::shifted(int shift) const {
  LaurentQ out;
  for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(e + shift, c);
  return out;
}

double LaurentQ::evaluate(double q) const {
  double sum = 0.0;
  for (const auto& [e, c] : coeffs_) sum += c.get_d() * std::pow(q, e);
  return sum;
}

Rational LaurentQ::evaluate(const Rational& q) const {
  Rational sum = 0;
  for (const auto& [e, c] : coeffs_) {
    Rational p = 1;
    const Rational base = e >= 0 ? q : Rational(1) / q;
    for (int k = 0; k < std::abs(e); ++k) p *= base;
    sum += c * p;
  }
  return sum;
}

std::string LaurentQ::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    if (!first) out += " + ";
    first = false;
    out += c.get_str() + "*q^" + std::to_string(e);
  }
  return out;
}

LaurentQ LaurentQ::parse(std::string_view text) {
  const std::string body = trim(text);
  if (body.empty()) throw ParseError("empty Laurent polynomial");
  if (body == "0") return {};
  LaurentQ out;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t next = body.find(" + ", pos);
    std::string term = trim(body.substr(pos, next == std::string::npos ? std::string::npos : next - pos));
    auto star = term.find("*q^");
    if (star == std::string::npos) {
      out.add_term(0, parse_rational(term));
    } else {
      const std::string exp_text = term.substr(star + 3);
      std::size_t used = 0;
      int exponent = 0;
      try {
        exponent = std::stoi(exp_text, &used);
      } catch (const std::exception&) {
        throw ParseError("bad exponent in term: " + term);
      }
      if (used != exp_text.size()) throw ParseError("bad exponent in term: " + term);
      out.add_term(exponent, parse_rational(term.substr(0, star)));
    }
    if (next == std::string::npos) break;
    pos = next + 3;
  }
  return out;
}

}  // namespace qalgebra
}  // namespace suq2
