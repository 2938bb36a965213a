#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "irredcert/finite_field.hpp"
#include "irredcert/integer.hpp"
#include "irredcert/polynomial.hpp"
#include "irredcert/random.hpp"
#include "irredcert/rings.hpp"

// Polynomial factorization over finite fields (Cantor-Zassenhaus) and exact
// root finding / irreducibility proofs over Q.
namespace irredcert::factor {

template <class F>
using Poly = poly::Poly<F>;

template <class F>
typename F::Element field_pow(const F& field, typename F::Element a, const mpz_class& e) {
  auto result = field.one();
  const std::size_t bits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = field.mul(result, result);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = field.mul(result, a);
  }
  return result;
}

namespace detail {

/// g with g(x)^p = f(x) for f with f' = 0 over a finite field of char p.
template <class F>
Poly<F> pth_root(const F& field, const Poly<F>& f) {
  const std::uint64_t p = field.characteristic();
  const mpz_class e = field.cardinality() / to_mpz(p);  // a^(q/p) is the p-th root of a
  Poly<F> g;
  for (std::size_t i = 0; i * p < f.size(); ++i) g.push_back(field_pow(field, f[i * p], e));
  poly::trim(field, g);
  return g;
}

template <class F>
Poly<F> random_poly(const F& field, int degree_below, Xoshiro256& rng) {
  Poly<F> a;
  for (int i = 0; i < degree_below; ++i) a.push_back(field.random(rng));
  poly::trim(field, a);
  return a;
}

template <class F>
bool poly_less(const F& field, const Poly<F>& a, const Poly<F>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = a.size(); i-- > 0;) {
    const auto ia = field.index_of(a[i]), ib = field.index_of(b[i]);
    if (ia != ib) return ia < ib;
  }
  return false;
}

}  // namespace detail

/// Square-free factorization of a monic polynomial over a finite field.
template <class F>
std::vector<std::pair<Poly<F>, int>> squarefree(const F& field, const Poly<F>& f_in) {
  std::vector<std::pair<Poly<F>, int>> out;
  auto f = poly::monic(field, f_in);
  if (poly::degree(f) < 1) return out;
  auto c = poly::gcd(field, f, poly::derivative(field, f));
  auto w = poly::exact_quo(field, f, c);
  int i = 1;
  while (poly::degree(w) >= 1) {
    auto y = poly::gcd(field, w, c);
    auto fac = poly::exact_quo(field, w, y);
    if (poly::degree(fac) >= 1) out.emplace_back(std::move(fac), i);
    w = std::move(y);
    c = poly::exact_quo(field, c, w);
    ++i;
  }
  if (poly::degree(c) >= 1) {
    const int p = static_cast<int>(field.characteristic());
    for (auto& [g, m] : squarefree(field, detail::pth_root(field, c))) out.emplace_back(std::move(g), m * p);
  }
  return out;
}

/// Distinct-degree factorization of a square-free monic polynomial:
/// pairs (product of all irreducible factors of degree d, d).
template <class F>
std::vector<std::pair<Poly<F>, int>> distinct_degree(const F& field, const Poly<F>& f) {
  std::vector<std::pair<Poly<F>, int>> out;
  auto rest = f;
  const auto x = poly::x(field);
  auto h = poly::rem(field, x, rest);
  const mpz_class q = field.cardinality();
  for (int i = 1; poly::degree(rest) >= 2 * i; ++i) {
    h = poly::powmod(field, h, q, rest);
    auto g = poly::gcd(field, rest, poly::sub(field, h, x));
    if (poly::degree(g) >= 1) {
      rest = poly::exact_quo(field, rest, g);
      h = poly::rem(field, h, rest);
      out.emplace_back(std::move(g), i);
    }
  }
  if (poly::degree(rest) >= 1) out.emplace_back(rest, poly::degree(rest));
  return out;
}

/// Splits a product of distinct monic irreducibles all of degree d.
template <class F>
std::vector<Poly<F>> equal_degree(const F& field, const Poly<F>& g, int d, Xoshiro256& rng) {
  if (poly::degree(g) == d) return {g};
  const mpz_class q = field.cardinality();
  const bool char2 = field.characteristic() == 2;
  mpz_class e;
  if (!char2) e = (pow(q, static_cast<unsigned long>(d)) - 1) / 2;
  const int trace_terms = field.degree() * d;
  while (true) {
    auto a = detail::random_poly(field, poly::degree(g), rng);
    if (poly::degree(a) < 1) continue;
    Poly<F> b;
    if (char2) {
      auto term = a;
      b = a;
      for (int j = 1; j < trace_terms; ++j) {
        term = poly::mulmod(field, term, term, g);
        b = poly::add(field, b, term);
      }
    } else {
      b = poly::sub(field, poly::powmod(field, a, e, g), poly::constant(field, field.one()));
    }
    auto u = poly::gcd(field, g, b);
    if (poly::degree(u) >= 1 && poly::degree(u) < poly::degree(g)) {
      auto left = equal_degree(field, u, d, rng);
      auto right = equal_degree(field, poly::exact_quo(field, g, u), d, rng);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
}

/// Complete factorization into monic irreducibles with multiplicities, in a
/// canonical order (degree, then coefficients).
template <class F>
std::vector<std::pair<Poly<F>, int>> factor(const F& field, const Poly<F>& f, Xoshiro256& rng) {
  std::vector<std::pair<Poly<F>, int>> out;
  for (const auto& [sqf, mult] : squarefree(field, f))
    for (const auto& [part, d] : distinct_degree(field, sqf))
      for (auto& irr : equal_degree(field, part, d, rng)) out.emplace_back(std::move(irr), mult);
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    if (detail::poly_less(field, a.first, b.first)) return true;
    if (detail::poly_less(field, b.first, a.first)) return false;
    return a.second < b.second;
  });
  return out;
}

template <class F>
bool is_irreducible(const F& field, const Poly<F>& f) {
  if (poly::degree(f) < 1) return false;
  const auto m = poly::monic(field, f);
  if (poly::degree(poly::gcd(field, m, poly::derivative(field, m))) >= 1) return false;
  const auto dd = distinct_degree(field, m);
  return dd.size() == 1 && dd.front().second == poly::degree(m);
}

// ---------------------------------------------------------------------------
// Over Q

using QPoly = std::vector<mpq_class>;
using ZPoly = std::vector<mpz_class>;

/// Positive multiple of f with coprime integer coefficients and positive
/// leading coefficient.
inline ZPoly primitive_part(const QPoly& f) {
  mpz_class den = 1;
  for (const auto& c : f) den = lcm(den, c.get_den());
  ZPoly z;
  mpz_class content = 0;
  for (const auto& c : f) {
    z.push_back(c.get_num() * (den / c.get_den()));
    content = gcd(content, z.back());
  }
  if (content == 0) return {};
  if (z.back() < 0) content = -content;
  for (auto& c : z) c /= content;
  return z;
}

inline QPoly squarefree_part(const QPoly& f) {
  const Rationals q;
  if (poly::degree(f) < 1) return f;
  return poly::exact_quo(q, f, poly::gcd(q, f, poly::derivative(q, f)));
}

namespace detail {

inline std::vector<std::uint64_t> reduce_mod(const ZPoly& f, const PrimeField& fp) {
  std::vector<std::uint64_t> r;
  for (const auto& c : f) r.push_back(fp.from_integer(c));
  poly::trim(fp, r);
  return r;
}

inline mpz_class eval_z(const ZPoly& f, const mpz_class& x) {
  mpz_class acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace detail

/// All distinct rational roots of f (ascending), or nullopt if no suitable
/// auxiliary prime below 2000 exists. Roots are found as simple roots modulo
/// a prime p and lifted p-adically past the Cauchy bound.
inline std::optional<std::vector<mpq_class>> rational_roots(const QPoly& f) {
  std::vector<mpq_class> roots;
  if (poly::degree(f) < 1) return roots;
  const ZPoly q = primitive_part(squarefree_part(f));
  const int n = poly::degree(q);
  const mpz_class lead = q.back();
  // Monic transform Q(y) = lead^(n-1) q(y / lead); roots y are integers.
  ZPoly mq(n + 1);
  for (int i = 0; i <= n; ++i) mq[i] = q[i] * pow(lead, static_cast<unsigned long>(n - 1 - std::min(i, n - 1)));
  mq[n] = 1;
  mpz_class bound = 0;
  for (int i = 0; i < n; ++i) bound = std::max(bound, mpz_class(abs(mq[i])));
  bound += 1;
  ZPoly dmq;
  for (int i = 1; i <= n; ++i) dmq.push_back(mq[i] * i);

  for (std::uint64_t p = 2; p < 2000; p = next_prime(p)) {
    const PrimeField fp(p);
    const auto qbar = detail::reduce_mod(mq, fp);
    if (poly::degree(poly::gcd(fp, qbar, poly::derivative(fp, qbar))) >= 1) continue;
    std::vector<mpz_class> found;
    for (std::uint64_t r0 = 0; r0 < p; ++r0) {
      if (poly::eval(fp, qbar, r0) != 0) continue;
      mpz_class modulus = to_mpz(p), r = to_mpz(r0);
      while (modulus <= 2 * bound) {
        modulus *= modulus;
        mpz_class deriv = detail::eval_z(dmq, r) % modulus, inv;
        if (mpz_invert(inv.get_mpz_t(), deriv.get_mpz_t(), modulus.get_mpz_t()) == 0) break;
        r = (r - detail::eval_z(mq, r) * inv) % modulus;
        if (r < 0) r += modulus;
      }
      mpz_class y = r;
      if (2 * y > modulus) y -= modulus;
      if (detail::eval_z(mq, y) == 0) found.push_back(y);
    }
    for (const auto& y : found) {
      mpq_class x(y, lead);
      x.canonicalize();
      roots.push_back(x);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
  }
  return std::nullopt;
}

/// True only when f is proven irreducible over Q: degree 1; degree 2 or 3
/// without rational roots; or irreducible modulo some prime not dividing its
/// leading coefficient.
inline bool proven_irreducible_over_q(const QPoly& f) {
  const int n = poly::degree(f);
  if (n < 1) return false;
  if (n == 1) return true;
  if (n <= 3) {
    const auto roots = rational_roots(f);
    return roots && roots->empty();
  }
  const ZPoly z = primitive_part(f);
  std::uint64_t p = 2;
  for (int tries = 0; tries < 40; ++tries, p = next_prime(p)) {
    if (mpz_divisible_ui_p(z.back().get_mpz_t(), p)) continue;
    const PrimeField fp(p);
    if (is_irreducible(fp, detail::reduce_mod(z, fp))) return true;
  }
  return false;
}

}  // namespace irredcert::factor
