#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "irredcert/finite_field.hpp"
#include "irredcert/ring_descriptor.hpp"
#include "irredcert/rings.hpp"

namespace irredcert {

/// Builds the ring object named by a descriptor and hands it to fn. Every
/// branch must return the same type.
template <class Fn>
decltype(auto) visit_ring(const RingDescriptor& d, Fn&& fn) {
  switch (d.kind) {
    case RingKind::IntegersZ:
      return fn(Integers{});
    case RingKind::PolyOverZ:
      return fn(PolyIntegers{d.var});
    case RingKind::RationalsQ:
      return fn(Rationals{});
    case RingKind::RationalFunctionQ:
      return fn(RationalFunctions{d.var});
    case RingKind::PrimeField:
      return fn(PrimeField{d.p});
    case RingKind::ExtensionField:
      break;
  }
  return fn(ExtensionField{d.p, d.modulus, d.var});
}

inline RingDescriptor RingDescriptor::parse(std::string_view text) {
  const std::string s = detail::strip_spaces(text);
  auto bad = [&]() { return ParseError("unrecognized ring '" + std::string(text) + "'"); };
  if (s == "Z") return integers();
  if (s == "Q") return rationals();
  auto inner = [&](std::size_t prefix, char close) {
    if (s.size() < prefix + 2 || s.back() != close) throw bad();
    return s.substr(prefix, s.size() - prefix - 1);
  };
  if (s.rfind("Z[", 0) == 0) {
    const auto v = inner(2, ']');
    if (!detail::is_identifier(v)) throw bad();
    return poly_z(v);
  }
  if (s.rfind("Q(", 0) == 0) {
    const auto v = inner(2, ')');
    if (!detail::is_identifier(v)) throw bad();
    return rational_functions(v);
  }
  std::string body;
  if (s.rfind("GF(", 0) == 0)
    body = inner(3, ')');
  else if (s.rfind("F_", 0) == 0)
    body = s.substr(2);
  else
    throw bad();

  std::string size_text = body, modulus_text;
  if (const auto semi = body.find(';'); semi != std::string::npos) {
    size_text = body.substr(0, semi);
    modulus_text = body.substr(semi + 1);
  }
  std::string p_text = size_text, k_text = "1";
  if (const auto caret = size_text.find('^'); caret != std::string::npos) {
    p_text = size_text.substr(0, caret);
    k_text = size_text.substr(caret + 1);
  }
  if (!is_integer_literal(p_text) || !is_integer_literal(k_text)) throw bad();
  const mpz_class p_big = parse_integer(p_text);
  if (p_big < 2 || mpz_sizeinbase(p_big.get_mpz_t(), 2) > 62) throw bad();
  const std::uint64_t p = to_u64(p_big);
  const long k = parse_integer(k_text).get_si();
  if (k == 1 && modulus_text.empty()) {
    if (!is_prime(p)) throw NotPrime(p_text + " is not prime");
    return prime_field(p);
  }
  if (k < 2 || k > 8) throw Error("extension degree must be between 2 and 8");
  if (!is_prime(p)) throw NotPrime(p_text + " is not prime");
  if (modulus_text.empty()) return extension_field(p, smallest_irreducible(p, static_cast<int>(k)), "x");

  std::string var;
  for (std::size_t i = 0; i < modulus_text.size(); ++i) {
    if (std::isalpha(static_cast<unsigned char>(modulus_text[i]))) {
      std::size_t j = i;
      while (j < modulus_text.size() && (std::isalnum(static_cast<unsigned char>(modulus_text[j])) || modulus_text[j] == '_')) ++j;
      var = modulus_text.substr(i, j - i);
      break;
    }
  }
  if (var.empty()) throw bad();
  const auto terms = detail::parse_sparse_poly(modulus_text, var);
  std::vector<std::uint64_t> m;
  const PrimeField fp(p);
  for (const auto& [e, c] : terms) {
    if (c.get_den() != 1) throw bad();
    if (m.size() <= e) m.resize(e + 1, 0);
    m[e] = fp.from_integer(c.get_num());
  }
  poly::trim(fp, m);
  if (poly::degree(m) != k) throw Error("modulus degree does not match GF(" + size_text + ")");
  ExtensionField check(p, m, var);  // validates irreducibility
  return extension_field(p, check.modulus(), var);
}

/// A single scalar tagged with its ring.
struct Scalar {
  using Value = std::variant<mpz_class, mpq_class, std::vector<mpz_class>, RatFunc, std::uint64_t,
                             std::vector<std::uint64_t>>;

  RingDescriptor ring;
  Value value;

  static Scalar parse(const RingDescriptor& ring, std::string_view text) {
    return visit_ring(ring, [&](const auto& r) { return Scalar{ring, Value{r.parse(text)}}; });
  }

  std::string to_string() const {
    return visit_ring(ring, [&](const auto& r) {
      using E = typename std::decay_t<decltype(r)>::Element;
      return r.format(std::get<E>(value));
    });
  }
};

}  // namespace irredcert
