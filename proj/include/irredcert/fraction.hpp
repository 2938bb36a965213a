#pragma once

#include <optional>

#include "irredcert/finite_field.hpp"
#include "irredcert/matrix.hpp"
#include "irredcert/rings.hpp"

namespace irredcert {

/// Fraction field of a ring object, with the embedding and its partial
/// inverse. Fields map to themselves.
template <class R>
struct Fraction {
  static_assert(R::is_field, "no fraction-field rule for this ring");
  using Field = R;
  static Field field(const R& r) { return r; }
  static typename Field::Element embed(const R&, const typename R::Element& a) { return a; }
  static std::optional<typename R::Element> restrict(const R&, const typename Field::Element& a) { return a; }
};

template <>
struct Fraction<Integers> {
  using Field = Rationals;
  static Field field(const Integers&) { return {}; }
  static mpq_class embed(const Integers&, const mpz_class& a) { return mpq_class(a); }
  static std::optional<mpz_class> restrict(const Integers&, const mpq_class& a) {
    if (a.get_den() != 1) return std::nullopt;
    return mpz_class(a.get_num());
  }
};

template <>
struct Fraction<PolyIntegers> {
  using Field = RationalFunctions;
  static Field field(const PolyIntegers& r) { return RationalFunctions(r.var()); }
  static RatFunc embed(const PolyIntegers& r, const std::vector<mpz_class>& a) {
    std::vector<mpq_class> c(a.begin(), a.end());
    return field(r).from_poly(std::move(c));
  }
  static std::optional<std::vector<mpz_class>> restrict(const PolyIntegers&, const RatFunc& a) {
    if (a.den.size() != 1 || a.den[0] != 1) return std::nullopt;
    std::vector<mpz_class> out;
    for (const auto& c : a.num) {
      if (c.get_den() != 1) return std::nullopt;
      out.push_back(c.get_num());
    }
    return out;
  }
};

template <class R>
using FractionField = typename Fraction<R>::Field;

template <class R>
MatrixOver<FractionField<R>> embed_matrix(const R& ring, const MatrixOver<R>& m) {
  return mat::map<typename FractionField<R>::Element>(m, [&](const auto& a) { return Fraction<R>::embed(ring, a); });
}

/// Entries restricted back to R, or nullopt if some entry is not in R.
template <class R>
std::optional<MatrixOver<R>> restrict_matrix(const R& ring, const MatrixOver<FractionField<R>>& m) {
  std::vector<typename R::Element> d;
  for (const auto& a : m.data()) {
    auto r = Fraction<R>::restrict(ring, a);
    if (!r) return std::nullopt;
    d.push_back(std::move(*r));
  }
  return MatrixOver<R>(m.rows(), m.cols(), std::move(d));
}

}  // namespace irredcert
