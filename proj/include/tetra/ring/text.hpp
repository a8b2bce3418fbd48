#pragma once

// Canonical text form of scalars, e.g. "(1 - q^2)/(1 + q*z)".
//
// `q` is u^2, `q^(1/2)` is u, `i` is the imaginary unit and `z` the spectral
// variable. Values print from their canonical representation (coprime
// polynomial numerator and denominator, the lowest denominator term having
// coefficient 1), so the text is a function of the value alone.

#include "tetra/ring/zseries.hpp"

#include <cctype>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tetra {

namespace detail {

inline std::string rational_str(const mpq_class& q) { return q.get_str(); }

// Coefficient text without its sign, plus the sign to print in front.
inline std::pair<char, std::string> coeff_parts(const GaussianRational& c) {
  if (c.is_real()) {
    if (sgn(c.re()) < 0) return {'-', rational_str(mpq_class(-c.re()))};
    return {'+', rational_str(c.re())};
  }
  if (sgn(c.re()) == 0) {
    char sign = sgn(c.im()) < 0 ? '-' : '+';
    mpq_class m = abs(c.im());
    return {sign, m == 1 ? std::string("i") : rational_str(m) + "*i"};
  }
  std::string s = "(" + rational_str(c.re());
  s += sgn(c.im()) < 0 ? " - " : " + ";
  mpq_class m = abs(c.im());
  s += (m == 1 ? std::string("i") : rational_str(m) + "*i") + ")";
  return {'+', s};
}

inline std::string q_monomial(int u_exp) {
  if (u_exp == 0) return "";
  if (u_exp % 2 != 0) return "q^(" + std::to_string(u_exp) + "/2)";
  int e = u_exp / 2;
  if (e == 1) return "q";
  if (e > 0) return "q^" + std::to_string(e);
  return "q^(" + std::to_string(e) + ")";
}

inline std::string z_monomial(int k) {
  if (k == 0) return "";
  if (k == 1) return "z";
  return "z^" + std::to_string(k);
}

// Polynomial in z with Laurent-in-u coefficients, one entry per z power.
using ClearedPoly = std::vector<HalfLaurent>;

inline std::size_t term_count(const ClearedPoly& p) {
  std::size_t n = 0;
  for (const auto& c : p) c.for_each_term([&](int, const GaussianRational&) { ++n; });
  return n;
}

inline std::string cleared_str(const ClearedPoly& p) {
  std::string out;
  bool first = true;
  for (std::size_t k = 0; k < p.size(); ++k) {
    p[k].for_each_term([&](int e, const GaussianRational& c) {
      auto [sign, mag] = coeff_parts(c);
      std::string mono = q_monomial(e);
      std::string zm = z_monomial(static_cast<int>(k));
      if (!mono.empty() && !zm.empty()) mono += "*";
      mono += zm;
      std::string body;
      if (mono.empty()) body = mag;
      else if (mag == "1") body = mono;
      else body = mag + "*" + mono;
      if (first) out += (sign == '-' ? "-" : "") + body;
      else out += (sign == '-' ? " - " : " + ") + body;
      first = false;
    });
  }
  return first ? std::string("0") : out;
}

inline std::pair<ClearedPoly, ClearedPoly> clear(const RatQZ& f) {
  ClearedPoly n, d;
  for (const auto& c : f.num_poly().coeffs()) n.emplace_back(c.is_zero() ? HalfLaurent() : HalfLaurent(f.u_shift(), c));
  for (const auto& c : f.den_poly().coeffs()) d.emplace_back(c.is_zero() ? HalfLaurent() : HalfLaurent(0, c));
  return {std::move(n), std::move(d)};
}

}  // namespace detail

inline std::string to_string(const RatQZ& f) {
  if (f.is_zero()) return "0";
  auto [n, d] = detail::clear(f);
  bool den_one = d.size() == 1 && d[0].is_one();
  std::string ns = detail::cleared_str(n);
  if (den_one) return ns;
  if (detail::term_count(n) > 1) ns = "(" + ns + ")";
  return ns + "/(" + detail::cleared_str(d) + ")";
}

inline std::string to_string(const RatQ& x) { return to_string(RatQZ(x)); }
inline std::string to_string(const HalfLaurent& x) { return to_string(RatQZ(RatQ(x))); }
inline std::string to_string(const GaussianRational& x) { return to_string(RatQZ(RatQ(x))); }

inline std::vector<std::string> to_strings(const ZSeries& s) {
  std::vector<std::string> out;
  out.reserve(s.coeffs().size());
  for (const auto& c : s.coeffs()) out.push_back(to_string(c));
  return out;
}

namespace detail {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : s_(text) {}

  RatQZ parse() {
    RatQZ v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("scalar parse error at " + std::to_string(pos_) + ": " + what + " in '" +
                                std::string(s_) + "'");
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  mpz_class integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }
  int small_integer() {
    mpz_class v = integer();
    if (!v.fits_sint_p()) fail("exponent out of range");
    return static_cast<int>(v.get_si());
  }

  RatQZ expr() {
    RatQZ v = term();
    for (;;) {
      if (accept('+')) v += term();
      else if (accept('-')) v -= term();
      else return v;
    }
  }
  RatQZ term() {
    RatQZ v = unary();
    for (;;) {
      if (accept('*')) v *= unary();
      else if (accept('/')) {
        RatQZ d = unary();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else return v;
    }
  }
  RatQZ unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }
  // Exponent as a fraction num/den with den in {1, 2}.
  std::pair<int, int> exponent() {
    if (accept('(')) {
      bool neg = accept('-');
      int num = small_integer();
      int den = 1;
      if (accept('/')) den = small_integer();
      expect(')');
      if (den != 1 && den != 2) fail("only integer or half-integer exponents are allowed");
      return {neg ? -num : num, den};
    }
    bool neg = accept('-');
    int num = small_integer();
    return {neg ? -num : num, 1};
  }
  RatQZ power() {
    bool is_q = false;
    RatQZ base = atom(is_q);
    if (!accept('^')) return base;
    auto [num, den] = exponent();
    if (den == 2 || is_q) {
      if (!is_q) fail("half-integer exponent on something other than q");
      return RatQZ(RatQ::u_power(den == 2 ? num : 2 * num));
    }
    RatQZ r(1);
    RatQZ b = num < 0 ? base.inverse() : base;
    for (int k = 0; k < std::abs(num); ++k) r *= b;
    return r;
  }
  RatQZ atom(bool& is_q) {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RatQZ v = expr();
      expect(')');
      return v;
    }
    if (c == 'q') {
      ++pos_;
      is_q = true;
      return RatQZ(RatQ::q_power(1));
    }
    if (c == 'z') {
      ++pos_;
      return RatQZ::z();
    }
    if (c == 'i') {
      ++pos_;
      return RatQZ(RatQ::i());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return RatQZ(GaussianRational(mpq_class(integer())));
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline RatQZ parse_ratqz(std::string_view text) { return detail::ScalarParser(text).parse(); }

inline RatQ parse_ratq(std::string_view text) {
  RatQZ v = parse_ratqz(text);
  if (!v.is_constant()) throw std::invalid_argument("scalar depends on z: '" + std::string(text) + "'");
  return v.constant();
}

}  // namespace tetra
