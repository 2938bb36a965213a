#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "irredcert/error.hpp"
#include "irredcert/integer.hpp"
#include "irredcert/polynomial.hpp"
#include "irredcert/random.hpp"
#include "irredcert/ring_descriptor.hpp"
#include "irredcert/rings.hpp"

namespace irredcert {

/// F_p with canonical representatives in [0, p).
class PrimeField {
 public:
  using Element = std::uint64_t;
  static constexpr bool is_field = true;
  static constexpr bool is_finite = true;

  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  }

  std::uint64_t characteristic() const { return p_; }
  int degree() const { return 1; }
  mpz_class cardinality() const { return to_mpz(p_); }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element add(Element a, Element b) const {
    const Element s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + (p_ - b); }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const {
    if (p_ <= 0xffffffffULL) return (a * b) % p_;
    return static_cast<Element>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  Element inv(Element a) const {
    if (a == 0) throw DivisionByZero("inverse of zero in GF(" + std::to_string(p_) + ")");
    __int128 r0 = p_, r1 = a, t0 = 0, t1 = 1;
    while (r1 != 0) {
      const __int128 q = r0 / r1;
      __int128 tmp = r0 - q * r1;
      r0 = r1;
      r1 = tmp;
      tmp = t0 - q * t1;
      t0 = t1;
      t1 = tmp;
    }
    if (t0 < 0) t0 += p_;
    return static_cast<Element>(t0);
  }
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  bool is_zero(Element a) const { return a == 0; }
  bool equal(Element a, Element b) const { return a == b; }
  Element from_int(long v) const {
    const __int128 m = static_cast<__int128>(v) % static_cast<__int128>(p_);
    return static_cast<Element>(m < 0 ? m + p_ : m);
  }
  Element from_integer(const mpz_class& v) const { return mod_u64(v, p_); }

  std::string format(Element a) const { return std::to_string(a); }
  Element parse(std::string_view text) const {
    auto [body, mod] = detail::split_mod_suffix(detail::strip_spaces(text));
    if (mod && parse_integer(*mod) != to_mpz(p_))
      throw RingMismatch("scalar '" + std::string(text) + "' is not in GF(" + std::to_string(p_) + ")");
    return from_integer(parse_integer(body));
  }

  Element random(Xoshiro256& rng) const { return rng.below(p_); }
  /// Enumeration of the field; index in [0, p).
  Element element_at(std::uint64_t index) const { return index; }
  std::uint64_t index_of(Element a) const { return a; }

  RingDescriptor descriptor() const { return RingDescriptor::prime_field(p_); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint64_t p_;
};

namespace detail {

/// Whether a monic polynomial over F_p of degree k >= 1 is irreducible:
/// gcd(x^(p^i) - x, f) = 1 for all i <= k/2.
inline bool is_irreducible_over_prime_field(const PrimeField& fp, const std::vector<std::uint64_t>& f) {
  const int k = poly::degree(f);
  if (k < 1) return false;
  if (k == 1) return true;
  const auto x = poly::x(fp);
  auto h = x;
  const mpz_class p = fp.cardinality();
  for (int i = 1; 2 * i <= k; ++i) {
    h = poly::powmod(fp, h, p, f);
    const auto g = poly::gcd(fp, poly::sub(fp, h, x), f);
    if (poly::degree(g) > 0) return false;
  }
  return true;
}

}  // namespace detail

/// Lexicographically first monic irreducible polynomial of degree k over F_p
/// (coefficients compared from the constant term upward).
inline std::vector<std::uint64_t> smallest_irreducible(std::uint64_t p, int k) {
  const PrimeField fp(p);
  std::vector<std::uint64_t> f(k + 1, 0);
  f[k] = 1;
  while (true) {
    if (detail::is_irreducible_over_prime_field(fp, f)) return f;
    int i = 0;
    while (i < k && ++f[i] == p) f[i++] = 0;
    if (i == k) throw Error("no irreducible polynomial found");
  }
}

/// F_p[x]/(f) for an irreducible monic f of degree k, 2 <= k <= 8, p < 2^31.
/// Elements are coefficient vectors of length exactly k.
class ExtensionField {
 public:
  using Element = std::vector<std::uint64_t>;
  static constexpr bool is_field = true;
  static constexpr bool is_finite = true;

  ExtensionField(std::uint64_t p, std::vector<std::uint64_t> modulus, std::string var = "x")
      : fp_(p), modulus_(std::move(modulus)), var_(std::move(var)) {
    if (p >= (std::uint64_t{1} << 31)) throw Error("extension fields require p < 2^31");
    for (auto& c : modulus_) c %= p;
    poly::trim(fp_, modulus_);
    const int k = poly::degree(modulus_);
    if (k < 2 || k > 8) throw Error("extension degree must be between 2 and 8");
    if (modulus_.back() != 1) throw NotIrreducible("modulus must be monic");
    if (!detail::is_irreducible_over_prime_field(fp_, modulus_))
      throw NotIrreducible(detail::format_modulus(modulus_, var_) + " is reducible over GF(" +
                           std::to_string(p) + ")");
    k_ = static_cast<std::size_t>(k);
  }

  const PrimeField& base() const { return fp_; }
  std::uint64_t characteristic() const { return fp_.characteristic(); }
  int degree() const { return static_cast<int>(k_); }
  mpz_class cardinality() const { return pow(fp_.cardinality(), k_); }
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }
  const std::string& var() const { return var_; }

  Element zero() const { return Element(k_, 0); }
  Element one() const {
    Element e(k_, 0);
    e[0] = 1;
    return e;
  }
  Element add(const Element& a, const Element& b) const {
    Element r(k_);
    for (std::size_t i = 0; i < k_; ++i) r[i] = fp_.add(a[i], b[i]);
    return r;
  }
  Element sub(const Element& a, const Element& b) const {
    Element r(k_);
    for (std::size_t i = 0; i < k_; ++i) r[i] = fp_.sub(a[i], b[i]);
    return r;
  }
  Element neg(const Element& a) const {
    Element r(k_);
    for (std::size_t i = 0; i < k_; ++i) r[i] = fp_.neg(a[i]);
    return r;
  }
  Element mul(const Element& a, const Element& b) const {
    std::vector<std::uint64_t> r(2 * k_ - 1, 0);
    for (std::size_t i = 0; i < k_; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < k_; ++j) r[i + j] = fp_.add(r[i + j], fp_.mul(a[i], b[j]));
    }
    for (std::size_t i = r.size(); i-- > k_;) {
      const auto c = r[i];
      if (c == 0) continue;
      for (std::size_t j = 0; j < k_; ++j) r[i - k_ + j] = fp_.sub(r[i - k_ + j], fp_.mul(c, modulus_[j]));
    }
    r.resize(k_);
    return r;
  }
  Element inv(const Element& a) const {
    auto p = as_poly(a);
    if (p.empty()) throw DivisionByZero("inverse of zero in " + descriptor().to_string());
    const auto r = poly::xgcd(fp_, p, modulus_);
    return from_poly(r.s);
  }
  Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }
  bool is_zero(const Element& a) const {
    for (auto c : a)
      if (c != 0) return false;
    return true;
  }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  Element from_int(long v) const {
    Element e(k_, 0);
    e[0] = fp_.from_int(v);
    return e;
  }

  /// Reduces an arbitrary polynomial over F_p modulo the defining polynomial.
  Element from_poly(const std::vector<std::uint64_t>& p) const {
    auto r = poly::rem(fp_, p, modulus_);
    r.resize(k_, 0);
    return r;
  }
  std::vector<std::uint64_t> as_poly(const Element& a) const {
    auto p = a;
    poly::trim(fp_, p);
    return p;
  }

  std::string format(const Element& a) const { return poly::format(fp_, as_poly(a), var_); }
  Element parse(std::string_view text) const {
    auto [body, mod] = detail::split_mod_suffix(detail::strip_spaces(text));
    if (mod && parse_integer(*mod) != fp_.cardinality())
      throw RingMismatch("scalar '" + std::string(text) + "' has the wrong characteristic");
    const auto terms = detail::parse_sparse_poly(body, var_);
    std::vector<std::uint64_t> p;
    for (const auto& [e, c] : terms) {
      if (c.get_den() != 1) throw IntegralityError("non-integral coefficient in '" + std::string(text) + "'");
      if (p.size() <= e) p.resize(e + 1, 0);
      p[e] = fp_.from_integer(c.get_num());
    }
    poly::trim(fp_, p);
    return from_poly(p);
  }

  Element random(Xoshiro256& rng) const {
    Element e(k_);
    for (auto& c : e) c = fp_.random(rng);
    return e;
  }
  Element element_at(std::uint64_t index) const {
    Element e(k_);
    for (auto& c : e) {
      c = index % fp_.characteristic();
      index /= fp_.characteristic();
    }
    return e;
  }
  std::uint64_t index_of(const Element& a) const {
    std::uint64_t idx = 0;
    for (std::size_t i = k_; i-- > 0;) idx = idx * fp_.characteristic() + a[i];
    return idx;
  }

  RingDescriptor descriptor() const {
    return RingDescriptor::extension_field(fp_.characteristic(), modulus_, var_);
  }

  friend bool operator==(const ExtensionField& a, const ExtensionField& b) {
    return a.fp_ == b.fp_ && a.modulus_ == b.modulus_;
  }

 private:
  PrimeField fp_;
  std::vector<std::uint64_t> modulus_;
  std::string var_;
  std::size_t k_ = 0;
};

}  // namespace irredcert
