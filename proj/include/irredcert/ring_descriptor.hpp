#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "irredcert/error.hpp"
#include "irredcert/integer.hpp"

namespace irredcert {

enum class RingKind { IntegersZ, PolyOverZ, RationalsQ, RationalFunctionQ, PrimeField, ExtensionField };

/// Names one of the supported base rings or residue fields. The textual form
/// is what appears in representation files and certificates:
///   "Z", "Z[t]", "Q", "Q(t)", "GF(5)", "GF(2^2; x^2+x+1)".
struct RingDescriptor {
  RingKind kind = RingKind::RationalsQ;
  /// Polynomial variable for Z[t] / Q(t); generator name for GF(p^k).
  std::string var = "t";
  std::uint64_t p = 0;
  /// Monic defining polynomial of GF(p^k), lowest degree first (k + 1 entries).
  std::vector<std::uint64_t> modulus;

  static RingDescriptor integers() { return {RingKind::IntegersZ, "t", 0, {}}; }
  static RingDescriptor rationals() { return {RingKind::RationalsQ, "t", 0, {}}; }
  static RingDescriptor poly_z(std::string v = "t") { return {RingKind::PolyOverZ, std::move(v), 0, {}}; }
  static RingDescriptor rational_functions(std::string v = "t") {
    return {RingKind::RationalFunctionQ, std::move(v), 0, {}};
  }
  static RingDescriptor prime_field(std::uint64_t p) { return {RingKind::PrimeField, "t", p, {}}; }
  static RingDescriptor extension_field(std::uint64_t p, std::vector<std::uint64_t> modulus,
                                        std::string v = "x") {
    return {RingKind::ExtensionField, std::move(v), p, std::move(modulus)};
  }

  bool is_field() const {
    return kind != RingKind::IntegersZ && kind != RingKind::PolyOverZ;
  }
  bool is_domain() const { return true; }
  bool is_finite() const { return kind == RingKind::PrimeField || kind == RingKind::ExtensionField; }
  int extension_degree() const {
    return kind == RingKind::ExtensionField ? static_cast<int>(modulus.size()) - 1 : 1;
  }

  RingDescriptor fraction_field() const {
    switch (kind) {
      case RingKind::IntegersZ:
        return rationals();
      case RingKind::PolyOverZ:
        return rational_functions(var);
      default:
        return *this;
    }
  }

  std::string to_string() const;
  static RingDescriptor parse(std::string_view text);

  friend bool operator==(const RingDescriptor& a, const RingDescriptor& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
      case RingKind::IntegersZ:
      case RingKind::RationalsQ:
        return true;
      case RingKind::PolyOverZ:
      case RingKind::RationalFunctionQ:
        return a.var == b.var;
      case RingKind::PrimeField:
        return a.p == b.p;
      case RingKind::ExtensionField:
        return a.p == b.p && a.modulus == b.modulus && a.var == b.var;
    }
    return false;
  }
};

namespace detail {

inline std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

inline bool is_identifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s.front()))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

inline std::string format_modulus(const std::vector<std::uint64_t>& m, const std::string& var) {
  std::string out;
  for (std::size_t k = m.size(); k-- > 0;) {
    if (m[k] == 0) continue;
    std::string term;
    if (k == 0)
      term = std::to_string(m[k]);
    else
      term = (m[k] == 1 ? "" : std::to_string(m[k]) + "*") + var + (k > 1 ? "^" + std::to_string(k) : "");
    if (!out.empty()) out += "+";
    out += term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace detail

inline std::string RingDescriptor::to_string() const {
  switch (kind) {
    case RingKind::IntegersZ:
      return "Z";
    case RingKind::RationalsQ:
      return "Q";
    case RingKind::PolyOverZ:
      return "Z[" + var + "]";
    case RingKind::RationalFunctionQ:
      return "Q(" + var + ")";
    case RingKind::PrimeField:
      return "GF(" + std::to_string(p) + ")";
    case RingKind::ExtensionField:
      return "GF(" + std::to_string(p) + "^" + std::to_string(modulus.size() - 1) + "; " +
             detail::format_modulus(modulus, var) + ")";
  }
  return "?";
}

}  // namespace irredcert
