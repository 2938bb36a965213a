#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include "irredcert/error.hpp"

namespace irredcert {

/// Miller-Rabin with the first seven prime bases is deterministic below this
/// bound (Jaeschke); larger candidates are rejected rather than guessed.
inline const mpz_class kPrimalityBound{"341550071728321"};

/// Deterministic primality test. Throws NotPrime for n at or above
/// kPrimalityBound since no proof is available there.
inline bool is_prime(const mpz_class& n) {
  if (n < 2) return false;
  if (n >= kPrimalityBound)
    throw NotPrime("primality of " + n.get_str() + " cannot be certified (>= 3.4e14)");
  static constexpr unsigned kBases[] = {2, 3, 5, 7, 11, 13, 17};
  for (unsigned b : kBases) {
    if (n == b) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), b)) return false;
  }
  mpz_class d = n - 1;
  unsigned s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d >>= 1;
    ++s;
  }
  const mpz_class nm1 = n - 1;
  for (unsigned b : kBases) {
    mpz_class x;
    const mpz_class base{b};
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == nm1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = (x * x) % n;
      if (x == nm1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

inline bool is_prime(std::uint64_t n) { return is_prime(mpz_class{std::to_string(n)}); }

inline std::uint64_t next_prime(std::uint64_t n) {
  std::uint64_t c = n + 1;
  while (!is_prime(c)) ++c;
  return c;
}

inline mpz_class to_mpz(std::uint64_t v) {
  mpz_class r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return r;
}

inline std::uint64_t to_u64(const mpz_class& v) {
  if (sgn(v) < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64)
    throw Error("integer " + v.get_str() + " does not fit in 64 bits");
  std::uint64_t r = 0;
  mpz_export(&r, nullptr, 1, sizeof(r), 0, 0, v.get_mpz_t());
  return r;
}

/// Non-negative residue of v modulo m.
inline std::uint64_t mod_u64(const mpz_class& v, std::uint64_t m) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), to_mpz(m).get_mpz_t());
  return to_u64(r);
}

inline bool is_integer_literal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

inline mpz_class parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) throw ParseError("not an integer: '" + std::string(s) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return mpz_class{std::string(s)};
}

/// Accepts "a" or "a/b" with b != 0; the result is canonicalized.
inline mpq_class parse_rational(std::string_view s) {
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return mpq_class{parse_integer(s)};
  const mpz_class num = parse_integer(s.substr(0, slash));
  const std::string_view den_text = s.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
    throw ParseError("signed denominator in '" + std::string(s) + "'");
  const mpz_class den = parse_integer(den_text);
  if (den == 0) throw DivisionByZero("zero denominator in '" + std::string(s) + "'");
  mpq_class q{num, den};
  q.canonicalize();
  return q;
}

inline std::string format_rational(const mpq_class& q) { return q.get_str(); }

inline mpz_class lcm(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline mpz_class gcd(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

/// g = s*a + t*b with g = gcd(a, b) >= 0.
struct ExtendedGcd {
  mpz_class g, s, t;
};

inline ExtendedGcd xgcd(const mpz_class& a, const mpz_class& b) {
  ExtendedGcd r;
  mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline mpz_class pow(const mpz_class& base, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

}  // namespace irredcert
