#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "irredcert/error.hpp"

// Dense univariate polynomials over a ring object R. Coefficients are stored
// lowest degree first and trimmed, so the zero polynomial is the empty vector.
namespace irredcert::poly {

template <class R>
using Poly = std::vector<typename R::Element>;

template <class R>
void trim(const R& ring, Poly<R>& p) {
  while (!p.empty() && ring.is_zero(p.back())) p.pop_back();
}

template <class P>
int degree(const P& p) {
  return static_cast<int>(p.size()) - 1;
}

template <class R>
Poly<R> constant(const R& ring, typename R::Element c) {
  Poly<R> p{std::move(c)};
  trim(ring, p);
  return p;
}

template <class R>
Poly<R> monomial(const R& ring, typename R::Element c, std::size_t k) {
  if (ring.is_zero(c)) return {};
  Poly<R> p(k + 1, ring.zero());
  p[k] = std::move(c);
  return p;
}

/// The polynomial x.
template <class R>
Poly<R> x(const R& ring) {
  return monomial(ring, ring.one(), 1);
}

template <class R>
bool equal(const R& ring, const Poly<R>& a, const Poly<R>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!ring.equal(a[i], b[i])) return false;
  return true;
}

template <class R>
Poly<R> add(const R& ring, const Poly<R>& a, const Poly<R>& b) {
  Poly<R> r(std::max(a.size(), b.size()), ring.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = ring.add(r[i], b[i]);
  trim(ring, r);
  return r;
}

template <class R>
Poly<R> neg(const R& ring, const Poly<R>& a) {
  Poly<R> r;
  r.reserve(a.size());
  for (const auto& c : a) r.push_back(ring.neg(c));
  return r;
}

template <class R>
Poly<R> sub(const R& ring, const Poly<R>& a, const Poly<R>& b) {
  Poly<R> r(std::max(a.size(), b.size()), ring.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = ring.sub(r[i], b[i]);
  trim(ring, r);
  return r;
}

template <class R>
Poly<R> scale(const R& ring, const typename R::Element& c, const Poly<R>& a) {
  if (ring.is_zero(c)) return {};
  Poly<R> r;
  r.reserve(a.size());
  for (const auto& v : a) r.push_back(ring.mul(c, v));
  trim(ring, r);
  return r;
}

template <class R>
Poly<R> mul(const R& ring, const Poly<R>& a, const Poly<R>& b) {
  if (a.empty() || b.empty()) return {};
  Poly<R> r(a.size() + b.size() - 1, ring.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (ring.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = ring.add(r[i + j], ring.mul(a[i], b[j]));
  }
  trim(ring, r);
  return r;
}

template <class R>
typename R::Element leading(const R& ring, const Poly<R>& p) {
  return p.empty() ? ring.zero() : p.back();
}

template <class R>
typename R::Element eval(const R& ring, const Poly<R>& p, const typename R::Element& at) {
  auto acc = ring.zero();
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = ring.add(ring.mul(acc, at), *it);
  return acc;
}

template <class R>
Poly<R> derivative(const R& ring, const Poly<R>& p) {
  if (p.size() <= 1) return {};
  Poly<R> r(p.size() - 1, ring.zero());
  for (std::size_t i = 1; i < p.size(); ++i)
    r[i - 1] = ring.mul(ring.from_int(static_cast<long>(i)), p[i]);
  trim(ring, r);
  return r;
}

/// Quotient and remainder over a field.
template <class F>
std::pair<Poly<F>, Poly<F>> divmod(const F& field, const Poly<F>& a, const Poly<F>& b) {
  if (b.empty()) throw DivisionByZero("polynomial division by zero");
  if (a.size() < b.size()) return {{}, a};
  Poly<F> rem = a;
  Poly<F> quo(a.size() - b.size() + 1, field.zero());
  const auto lc_inv = field.inv(b.back());
  for (std::size_t k = quo.size(); k-- > 0;) {
    const auto c = field.mul(rem[k + b.size() - 1], lc_inv);
    quo[k] = c;
    if (field.is_zero(c)) continue;
    for (std::size_t j = 0; j < b.size(); ++j) rem[k + j] = field.sub(rem[k + j], field.mul(c, b[j]));
  }
  trim(field, quo);
  trim(field, rem);
  return {std::move(quo), std::move(rem)};
}

template <class F>
Poly<F> rem(const F& field, const Poly<F>& a, const Poly<F>& b) {
  return divmod(field, a, b).second;
}

template <class F>
Poly<F> quo(const F& field, const Poly<F>& a, const Poly<F>& b) {
  return divmod(field, a, b).first;
}

/// Division that must be exact; throws otherwise.
template <class F>
Poly<F> exact_quo(const F& field, const Poly<F>& a, const Poly<F>& b) {
  auto [q, r] = divmod(field, a, b);
  if (!r.empty()) throw Error("inexact polynomial division");
  return q;
}

template <class F>
Poly<F> monic(const F& field, const Poly<F>& p) {
  if (p.empty()) return p;
  return scale(field, field.inv(p.back()), p);
}

/// Monic gcd; gcd(0, 0) = 0.
template <class F>
Poly<F> gcd(const F& field, Poly<F> a, Poly<F> b) {
  while (!b.empty()) {
    auto r = rem(field, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(field, a);
}

template <class F>
struct XgcdResult {
  Poly<F> g, s, t;  // s*a + t*b = g, g monic
};

template <class F>
XgcdResult<F> xgcd(const F& field, const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r0 = a, r1 = b;
  Poly<F> s0 = constant(field, field.one()), s1;
  Poly<F> t0, t1 = constant(field, field.one());
  while (!r1.empty()) {
    auto [q, r] = divmod(field, r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    auto s2 = sub(field, s0, mul(field, q, s1));
    s0 = std::move(s1);
    s1 = std::move(s2);
    auto t2 = sub(field, t0, mul(field, q, t1));
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) return {{}, {}, {}};
  const auto inv = field.inv(r0.back());
  return {scale(field, inv, r0), scale(field, inv, s0), scale(field, inv, t0)};
}

template <class F>
Poly<F> mulmod(const F& field, const Poly<F>& a, const Poly<F>& b, const Poly<F>& m) {
  return rem(field, mul(field, a, b), m);
}

/// base^e mod m for an arbitrary-precision exponent e >= 0.
template <class F>
Poly<F> powmod(const F& field, const Poly<F>& base, const mpz_class& e, const Poly<F>& m) {
  Poly<F> result = rem(field, constant(field, field.one()), m);
  Poly<F> b = rem(field, base, m);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return result;
  for (std::size_t i = bits; i-- > 0;) {
    result = mulmod(field, result, result, m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mulmod(field, result, b, m);
  }
  return result;
}

/// Square-free decomposition in characteristic zero (Yun). Returns the
/// non-constant pairwise coprime factors a_i with multiplicity i; p is
/// assumed nonzero.
template <class F>
std::vector<std::pair<Poly<F>, int>> yun(const F& field, const Poly<F>& p) {
  std::vector<std::pair<Poly<F>, int>> out;
  if (degree(p) < 1) return out;
  const auto f = monic(field, p);
  const auto df = derivative(field, f);
  auto a = gcd(field, f, df);
  auto b = exact_quo(field, f, a);
  auto c = exact_quo(field, df, a);
  auto d = sub(field, c, derivative(field, b));
  for (int i = 1; degree(b) >= 1; ++i) {
    auto g = gcd(field, b, d);
    b = exact_quo(field, b, g);
    c = exact_quo(field, d, g);
    d = sub(field, c, derivative(field, b));
    if (degree(g) >= 1) out.emplace_back(std::move(g), i);
  }
  return out;
}

namespace detail {
inline bool needs_parens(const std::string& s) {
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i] == '+' || s[i] == '-' || s[i] == ' ') return true;
  return false;
}
}  // namespace detail

/// Human-readable form, highest degree first: "t^2-2*t+1/3".
template <class R>
std::string format(const R& ring, const Poly<R>& p, const std::string& var) {
  if (p.empty()) return "0";
  std::string out;
  const auto one = ring.one();
  const auto minus_one = ring.neg(one);
  for (std::size_t k = p.size(); k-- > 0;) {
    if (ring.is_zero(p[k])) continue;
    std::string coef = ring.format(p[k]);
    if (detail::needs_parens(coef)) coef = "(" + coef + ")";
    std::string term;
    if (k == 0) {
      term = coef;
    } else {
      std::string mono = var + (k > 1 ? "^" + std::to_string(k) : "");
      if (ring.equal(p[k], one))
        term = mono;
      else if (ring.equal(p[k], minus_one) && !ring.equal(one, minus_one))
        term = "-" + mono;
      else
        term = coef + "*" + mono;
    }
    if (!out.empty() && term.front() != '-') out += "+";
    out += term;
  }
  return out;
}

}  // namespace irredcert::poly
