#pragma once

#include <gmpxx.h>

#include <cctype>
#include <map>
#include <optional>
#include <tuple>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "irredcert/error.hpp"
#include "irredcert/integer.hpp"
#include "irredcert/polynomial.hpp"
#include "irredcert/ring_descriptor.hpp"

namespace irredcert {

namespace detail {

/// Parses a sum of monomials "c*v^e" in one variable with rational
/// coefficients, e.g. "t^2+2*t+1/3", "-x+1", "3/4". Whitespace must already be
/// stripped. Returns exponent -> coefficient.
inline std::map<unsigned, mpq_class> parse_sparse_poly(std::string_view s, const std::string& var) {
  if (s.empty()) throw ParseError("empty polynomial");
  std::map<unsigned, mpq_class> terms;
  std::size_t i = 0;
  auto read_digits = [&](std::string_view what) {
    const std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) throw ParseError("expected " + std::string(what) + " in '" + std::string(s) + "'");
    return std::string(s.substr(start, i - start));
  };
  auto read_var = [&]() -> bool {
    if (s.compare(i, var.size(), var) != 0) return false;
    const std::size_t after = i + var.size();
    if (after < s.size() && (std::isalnum(static_cast<unsigned char>(s[after])) || s[after] == '_')) return false;
    i = after;
    return true;
  };
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      throw ParseError("expected '+' or '-' in '" + std::string(s) + "'");
    }
    first = false;
    mpq_class coef = 1;
    unsigned exponent = 0;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      std::string num = read_digits("coefficient");
      if (i < s.size() && s[i] == '/') {
        ++i;
        std::string den = read_digits("denominator");
        coef = parse_rational(num + "/" + den);
      } else {
        coef = mpq_class{mpz_class{num}};
      }
      if (i < s.size() && s[i] == '*') {
        ++i;
        if (!read_var()) throw ParseError("expected variable '" + var + "' in '" + std::string(s) + "'");
        exponent = 1;
      }
    } else if (read_var()) {
      exponent = 1;
    } else {
      throw ParseError("unexpected token in '" + std::string(s) + "'");
    }
    if (exponent == 1 && i < s.size() && s[i] == '^') {
      ++i;
      const std::string e = read_digits("exponent");
      if (e.size() > 6) throw ParseError("exponent too large in '" + std::string(s) + "'");
      exponent = static_cast<unsigned>(std::stoul(e));
    }
    terms[exponent] += sign * coef;
  }
  return terms;
}

/// Splits an optional trailing " mod N" (whitespace already stripped: "modN").
inline std::pair<std::string, std::optional<std::string>> split_mod_suffix(const std::string& s) {
  const auto pos = s.rfind("mod");
  if (pos == std::string::npos || pos == 0) return {s, std::nullopt};
  const std::string tail = s.substr(pos + 3);
  if (!is_integer_literal(tail)) return {s, std::nullopt};
  return {s.substr(0, pos), tail};
}

}  // namespace detail

class Integers {
 public:
  using Element = mpz_class;
  static constexpr bool is_field = false;
  static constexpr bool is_finite = false;

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  bool is_zero(const Element& a) const { return a == 0; }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  Element from_int(long v) const { return v; }
  std::string format(const Element& a) const { return a.get_str(); }
  Element parse(std::string_view s) const { return parse_integer(detail::strip_spaces(s)); }
  RingDescriptor descriptor() const { return RingDescriptor::integers(); }
};

class Rationals {
 public:
  using Element = mpq_class;
  static constexpr bool is_field = true;
  static constexpr bool is_finite = false;

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const {
    if (a == 0) throw DivisionByZero("inverse of zero in Q");
    return 1 / a;
  }
  Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }
  bool is_zero(const Element& a) const { return a == 0; }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  Element from_int(long v) const { return v; }
  std::string format(const Element& a) const { return a.get_str(); }
  Element parse(std::string_view s) const { return parse_rational(detail::strip_spaces(s)); }
  RingDescriptor descriptor() const { return RingDescriptor::rationals(); }
};

/// Z[var], elements are trimmed coefficient vectors.
class PolyIntegers {
 public:
  using Element = std::vector<mpz_class>;
  static constexpr bool is_field = false;
  static constexpr bool is_finite = false;

  explicit PolyIntegers(std::string var = "t") : var_(std::move(var)) {}

  const std::string& var() const { return var_; }
  const Integers& coefficients() const { return z_; }

  Element zero() const { return {}; }
  Element one() const { return {mpz_class{1}}; }
  Element add(const Element& a, const Element& b) const { return poly::add(z_, a, b); }
  Element sub(const Element& a, const Element& b) const { return poly::sub(z_, a, b); }
  Element neg(const Element& a) const { return poly::neg(z_, a); }
  Element mul(const Element& a, const Element& b) const { return poly::mul(z_, a, b); }
  bool is_zero(const Element& a) const { return a.empty(); }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  Element from_int(long v) const { return poly::constant(z_, mpz_class{v}); }
  std::string format(const Element& a) const { return poly::format(z_, a, var_); }
  Element parse(std::string_view text) const {
    const auto terms = detail::parse_sparse_poly(detail::strip_spaces(text), var_);
    Element out;
    for (const auto& [e, c] : terms) {
      if (c.get_den() != 1) throw IntegralityError("non-integral coefficient in '" + std::string(text) + "'");
      if (out.size() <= e) out.resize(e + 1, 0);
      out[e] = c.get_num();
    }
    poly::trim(z_, out);
    return out;
  }
  mpz_class eval(const Element& a, const mpz_class& at) const { return poly::eval(z_, a, at); }
  RingDescriptor descriptor() const { return RingDescriptor::poly_z(var_); }

 private:
  Integers z_;
  std::string var_;
};

/// Element of Q(t): num/den with gcd(num, den) = 1 and den monic.
struct RatFunc {
  std::vector<mpq_class> num;
  std::vector<mpq_class> den{mpq_class{1}};

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num == b.num && a.den == b.den; }
  friend bool operator<(const RatFunc& a, const RatFunc& b) {
    return std::tie(a.num, a.den) < std::tie(b.num, b.den);
  }
};

class RationalFunctions {
 public:
  using Element = RatFunc;
  using Poly = std::vector<mpq_class>;
  static constexpr bool is_field = true;
  static constexpr bool is_finite = false;

  explicit RationalFunctions(std::string var = "t") : var_(std::move(var)) {}

  const std::string& var() const { return var_; }
  const Rationals& coefficients() const { return q_; }

  Element make(Poly num, Poly den) const {
    poly::trim(q_, num);
    poly::trim(q_, den);
    if (den.empty()) throw DivisionByZero("rational function with zero denominator");
    if (num.empty()) return {};
    if (den.size() > 1) {
      const auto g = poly::gcd(q_, num, den);
      if (g.size() > 1) {
        num = poly::exact_quo(q_, num, g);
        den = poly::exact_quo(q_, den, g);
      }
    }
    const mpq_class lc = den.back();
    if (lc != 1) {
      num = poly::scale(q_, 1 / lc, num);
      den = poly::scale(q_, 1 / lc, den);
    }
    return {std::move(num), std::move(den)};
  }

  Element from_poly(Poly num) const { return make(std::move(num), {mpq_class{1}}); }

  Element zero() const { return {}; }
  Element one() const { return {{mpq_class{1}}, {mpq_class{1}}}; }
  Element add(const Element& a, const Element& b) const {
    if (a.den == b.den) return make(poly::add(q_, a.num, b.num), a.den);
    return make(poly::add(q_, poly::mul(q_, a.num, b.den), poly::mul(q_, b.num, a.den)),
                poly::mul(q_, a.den, b.den));
  }
  Element neg(const Element& a) const { return {poly::neg(q_, a.num), a.den}; }
  Element sub(const Element& a, const Element& b) const { return add(a, neg(b)); }
  Element mul(const Element& a, const Element& b) const {
    if (a.num.empty() || b.num.empty()) return {};
    return make(poly::mul(q_, a.num, b.num), poly::mul(q_, a.den, b.den));
  }
  Element inv(const Element& a) const {
    if (a.num.empty()) throw DivisionByZero("inverse of zero in Q(" + var_ + ")");
    return make(a.den, a.num);
  }
  Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }
  bool is_zero(const Element& a) const { return a.num.empty(); }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  Element from_int(long v) const { return from_poly({mpq_class{v}}); }
  Element from_rational(const mpq_class& v) const { return from_poly({v}); }

  /// Value at t = at, or nullopt where the denominator vanishes.
  std::optional<mpq_class> eval(const Element& a, const mpq_class& at) const {
    const mpq_class d = poly::eval(q_, a.den, at);
    if (d == 0) return std::nullopt;
    return poly::eval(q_, a.num, at) / d;
  }

  /// True when the element is a constant in Q.
  bool is_constant(const Element& a) const { return a.num.size() <= 1 && a.den.size() == 1; }

  std::string format(const Element& a) const {
    if (a.den.size() == 1) return poly::format(q_, a.num, var_);
    return "(" + poly::format(q_, a.num, var_) + ")/(" + poly::format(q_, a.den, var_) + ")";
  }

  Element parse(std::string_view text) const {
    const std::string s = detail::strip_spaces(text);
    if (!s.empty() && s.front() == '(') {
      const std::size_t close = matching_paren(s, 0);
      const std::string num = s.substr(1, close - 1);
      const std::string rest = s.substr(close + 1);
      if (rest.empty()) return from_poly(parse_poly(num));
      if (rest.size() >= 3 && rest[0] == '/' && rest[1] == '(' && matching_paren(rest, 1) == rest.size() - 1)
        return make(parse_poly(num), parse_poly(rest.substr(2, rest.size() - 3)));
      throw ParseError("malformed rational function '" + s + "'");
    }
    return from_poly(parse_poly(s));
  }

  RingDescriptor descriptor() const { return RingDescriptor::rational_functions(var_); }

 private:
  static std::size_t matching_paren(const std::string& s, std::size_t open) {
    int depth = 0;
    for (std::size_t i = open; i < s.size(); ++i) {
      if (s[i] == '(') ++depth;
      if (s[i] == ')' && --depth == 0) return i;
    }
    throw ParseError("unbalanced parentheses in '" + s + "'");
  }

  Poly parse_poly(const std::string& s) const {
    const auto terms = detail::parse_sparse_poly(s, var_);
    Poly out;
    for (const auto& [e, c] : terms) {
      if (out.size() <= e) out.resize(e + 1, 0);
      out[e] = c;
    }
    poly::trim(q_, out);
    return out;
  }

  Rationals q_;
  std::string var_;
};

}  // namespace irredcert
