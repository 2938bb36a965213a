#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "irredcert/error.hpp"
#include "irredcert/normal_form.hpp"
#include "irredcert/rep_io.hpp"
#include "irredcert/representation.hpp"

namespace irredcert {

using nf::IntMatrix;
using nf::RatMatrix;

namespace lattice {

/// Canonical basis of the Z-span of the columns of m: HNF of the
/// denominator-cleared matrix, zero columns dropped, scaled back.
inline RatMatrix canonical_span(const RatMatrix& m) {
  const auto [ints, den] = nf::clear_denominators(m);
  const auto hf = nf::hnf(ints);
  RatMatrix out(m.rows(), hf.rank, mpq_class{0});
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < hf.rank; ++j) {
      out(i, j) = mpq_class(hf.h(i, j), den);
      out(i, j).canonicalize();
    }
  return out;
}

/// Coordinates z with m z = v when the columns of m are independent and v
/// lies in their Q-span.
inline std::optional<std::vector<mpq_class>> coordinates(const RatMatrix& m, const std::vector<mpq_class>& v) {
  const Rationals q;
  const auto e = linalg::rref(q, mat::hstack(m, mat::from_columns(m.rows(), std::vector<std::vector<mpq_class>>{v})));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  if (e.pivots.size() != m.cols()) throw ShapeError("basis columns are dependent");
  std::vector<mpq_class> z(m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) z[e.pivots[r]] = e.reduced(r, m.cols());
  return z;
}

inline bool is_integral(const std::vector<mpq_class>& v) {
  for (const auto& x : v)
    if (x.get_den() != 1) return false;
  return true;
}

/// Whether every column of sub lies in the Z-span of the columns of m.
inline bool span_contains(const RatMatrix& m, const RatMatrix& sub) {
  for (std::size_t j = 0; j < sub.cols(); ++j) {
    const auto z = coordinates(m, mat::column(sub, j));
    if (!z || !is_integral(*z)) return false;
  }
  return true;
}

/// Z-span intersection of two column spans, via the integer kernel of
/// [A | -B] after clearing a common denominator.
inline RatMatrix intersect_spans(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows()) throw ShapeError("lattices live in different spaces");
  const Rationals q;
  auto [ia, da] = nf::clear_denominators(a);
  auto [ib, db] = nf::clear_denominators(b);
  const mpz_class den = lcm(da, db);
  const Integers z;
  ia = mat::scale(z, mpz_class(den / da), ia);
  ib = mat::scale(z, mpz_class(den / db), ib);
  const auto ker = nf::integer_kernel(mat::hstack(ia, mat::scale(z, mpz_class(-1), ib)));
  IntMatrix top(a.cols(), ker.cols(), mpz_class{0});
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t j = 0; j < ker.cols(); ++j) top(i, j) = ker(i, j);
  if (ker.cols() == 0) return RatMatrix(a.rows(), 0, mpq_class{0});
  return canonical_span(mat::mul(q, a, nf::to_rational(top)));
}

}  // namespace lattice

/// A free lattice of rank d: the R-span of the columns of an invertible
/// d x d rational matrix, R = Z or Z[t]. Over Z[t] the basis is constant.
struct LatticeBasis {
  RingDescriptor ring;
  RatMatrix basis;
  bool canonical = false;

  static LatticeBasis standard(RingDescriptor ring, std::size_t d) {
    return {std::move(ring), mat::identity(Rationals{}, d), true};
  }

  /// Canonical lattice spanned by arbitrarily many columns; they must have
  /// full rank.
  static LatticeBasis spanned_by(RingDescriptor ring, const RatMatrix& columns) {
    auto b = lattice::canonical_span(columns);
    if (b.cols() != columns.rows()) throw SingularError("columns do not span a full-rank lattice");
    return {std::move(ring), std::move(b), true};
  }

  std::size_t dim() const { return basis.rows(); }

  LatticeBasis canonicalized() const { return spanned_by(ring, basis); }

  bool contains(const RatMatrix& columns) const { return lattice::span_contains(basis, columns); }

  friend bool operator==(const LatticeBasis& a, const LatticeBasis& b) {
    return a.ring == b.ring && a.canonicalized().basis == b.canonicalized().basis;
  }
};

inline LatticeBasis scaled(const LatticeBasis& lat, const mpz_class& n) {
  return LatticeBasis::spanned_by(lat.ring, mat::scale(Rationals{}, mpq_class(n), lat.basis));
}

inline LatticeBasis intersect(const LatticeBasis& a, const LatticeBasis& b) {
  return LatticeBasis::spanned_by(a.ring, lattice::intersect_spans(a.basis, b.basis));
}

/// (n_1) cap ... cap (n_k) applied to L, which is lcm(n_1, ..., n_k) L.
inline LatticeBasis ideal_mult(const LatticeBasis& lat, const std::vector<mpz_class>& ideals) {
  mpz_class m = 1;
  for (const auto& n : ideals) {
    if (n == 0) throw Error("ideal generators must be nonzero");
    m = lcm(m, abs(n));
  }
  return scaled(lat, m);
}

/// L cap W for a subspace W given by spanning vectors: canonical Z-basis
/// (d x dim W columns) of the lattice points of L inside W.
inline RatMatrix sublattice_from_subspace(const LatticeBasis& lat, const std::vector<std::vector<mpq_class>>& w) {
  const Rationals q;
  const std::size_t d = lat.dim();
  const auto perp = linalg::annihilator(q, w, d);
  if (perp.empty()) return lat.canonicalized().basis;
  // z in Z^d with B z in W  <=>  P B z = 0 for P spanning the annihilator.
  const auto pb = mat::mul(q, mat::from_rows(d, perp), lat.basis);
  const auto [ints, den] = nf::clear_denominators(pb);
  const auto ker = nf::integer_kernel(ints);
  if (ker.cols() == 0) return RatMatrix(d, 0, mpq_class{0});
  return lattice::canonical_span(mat::mul(q, lat.basis, nf::to_rational(ker)));
}

/// Whether the Z-span of the columns is mapped into itself by each matrix.
inline bool is_stable(const RatMatrix& columns, const std::vector<RatMatrix>& gens) {
  const Rationals q;
  for (const auto& g : gens)
    if (!lattice::span_contains(columns, mat::mul(q, g, columns))) return false;
  return true;
}

enum class SublatticeImage { Zero, ProperNonzero, Full };

inline std::string to_string(SublatticeImage s) {
  switch (s) {
    case SublatticeImage::Zero:
      return "Zero";
    case SublatticeImage::ProperNonzero:
      return "ProperNonzero";
    case SublatticeImage::Full:
      break;
  }
  return "Full";
}

/// Image of the Z-module spanned by the columns of m in L/pL.
inline SublatticeImage proper_sublattice_image(const RatMatrix& m, const LatticeBasis& lat, std::uint64_t p) {
  const PrimeField fp(p);
  auto img = mat::zeros(fp, lat.dim(), m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    const auto z = lattice::coordinates(lat.basis, mat::column(m, j));
    if (!z || !lattice::is_integral(*z)) throw NotSublattice("column " + std::to_string(j) + " is not in L");
    for (std::size_t i = 0; i < lat.dim(); ++i) img(i, j) = fp.from_integer((*z)[i].get_num());
  }
  const auto r = linalg::rank(fp, img);
  if (r == 0) return SublatticeImage::Zero;
  return r == lat.dim() ? SublatticeImage::Full : SublatticeImage::ProperNonzero;
}

inline SublatticeImage proper_sublattice_image(const LatticeBasis& m, const LatticeBasis& lat, std::uint64_t p) {
  return proper_sublattice_image(m.basis, lat, p);
}

// ---------------------------------------------------------------------------
// Saturation

inline constexpr int kDefaultSaturationRounds = 64;

/// Smallest lattice containing Z^d and stable under the given matrices
/// (forward images only). Stable under a finite group means stable under
/// its generators.
inline LatticeBasis saturate_matrices(RingDescriptor ring, std::size_t d, const std::vector<RatMatrix>& mats,
                                      int rounds = kDefaultSaturationRounds) {
  const Rationals q;
  auto lat = LatticeBasis::standard(std::move(ring), d);
  for (int round = 0; round < rounds; ++round) {
    RatMatrix cols = lat.basis;
    for (const auto& g : mats) cols = mat::hstack(cols, mat::mul(q, g, lat.basis));
    auto next = LatticeBasis::spanned_by(lat.ring, cols);
    if (next.basis == lat.basis) return lat;
    lat = std::move(next);
  }
  throw BudgetExceeded("lattice saturation did not stabilize within " + std::to_string(rounds) + " rounds");
}

template <class IntRep>
struct Saturation {
  LatticeBasis lat;
  IntRep int_rep;
};

/// G-stable lattice of a rational representation and the integral
/// representation B^-1 g B in its basis.
inline Saturation<Representation<Integers>> saturate(const Representation<Rationals>& rep,
                                                     int rounds = kDefaultSaturationRounds) {
  const Rationals q;
  const Integers z;
  auto lat = saturate_matrices(RingDescriptor::integers(), rep.dim(), rep.generators(), rounds);
  const auto bi = linalg::inverse(q, lat.basis);
  std::vector<MatrixOver<Integers>> gens;
  for (const auto& g : rep.generators()) {
    auto ig = restrict_matrix(z, mat::mul(q, mat::mul(q, bi, g), lat.basis));
    if (!ig) throw IntegralityError("saturated lattice is not stable");
    gens.push_back(std::move(*ig));
  }
  return {std::move(lat), Representation<Integers>(z, rep.dim(), std::move(gens), rep.relations(), rep.label())};
}

/// Splits a matrix over Q(t) with polynomial entries into its coefficient
/// matrices. Throws IntegralityError when some denominator involves t.
inline std::vector<RatMatrix> coefficient_matrices(const RationalFunctions& k, const MatrixOver<RationalFunctions>& g) {
  std::vector<RatMatrix> out;
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) {
      const auto& e = g(i, j);
      if (e.den.size() != 1)
        throw IntegralityError("entry " + k.format(e) + " has a non-constant denominator");
      for (std::size_t c = 0; c < e.num.size(); ++c) {
        while (out.size() <= c) out.emplace_back(g.rows(), g.cols(), mpq_class{0});
        out[c](i, j) = e.num[c] / e.den[0];
      }
    }
  return out;
}

/// Constant-basis Z[t]-lattice stable under every t-coefficient of every
/// generator, with the integral representation over Z[t].
inline Saturation<Representation<PolyIntegers>> saturate(const Representation<RationalFunctions>& rep,
                                                         int rounds = kDefaultSaturationRounds) {
  const Rationals q;
  const auto& k = rep.ring();
  const PolyIntegers zt(k.var());
  std::vector<RatMatrix> mats;
  std::vector<std::vector<RatMatrix>> per_gen;
  for (const auto& g : rep.generators()) {
    per_gen.push_back(coefficient_matrices(k, g));
    mats.insert(mats.end(), per_gen.back().begin(), per_gen.back().end());
  }
  auto lat = saturate_matrices(RingDescriptor::poly_z(k.var()), rep.dim(), mats, rounds);
  const auto bi = linalg::inverse(q, lat.basis);
  std::vector<MatrixOver<PolyIntegers>> gens;
  for (const auto& coeffs : per_gen) {
    MatrixOver<PolyIntegers> ig(rep.dim(), rep.dim(), zt.zero());
    for (std::size_t c = 0; c < coeffs.size(); ++c) {
      const auto m = mat::mul(q, mat::mul(q, bi, coeffs[c]), lat.basis);
      for (std::size_t i = 0; i < rep.dim(); ++i)
        for (std::size_t j = 0; j < rep.dim(); ++j) {
          if (m(i, j).get_den() != 1) throw IntegralityError("saturated lattice is not stable");
          ig(i, j) = zt.add(ig(i, j), poly::monomial(Integers{}, mpz_class(m(i, j).get_num()), c));
        }
    }
    gens.push_back(std::move(ig));
  }
  return {std::move(lat), Representation<PolyIntegers>(zt, rep.dim(), std::move(gens), rep.relations(), rep.label())};
}

// ---------------------------------------------------------------------------
// Primes and reduction

/// A prime of Z or Z[t]: (0), (p), (t - c) or the maximal ideal (p, t - c).
struct PrimeSpec {
  enum class Kind { Zero, IntegerPrime, LinearPoly, MaximalPair };
  Kind kind = Kind::Zero;
  std::uint64_t p = 0;
  long c = 0;

  static PrimeSpec zero() { return {Kind::Zero, 0, 0}; }
  static PrimeSpec integer(std::uint64_t p) {
    if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
    return {Kind::IntegerPrime, p, 0};
  }
  static PrimeSpec linear(long c) { return {Kind::LinearPoly, 0, c}; }
  static PrimeSpec maximal(std::uint64_t p, long c) {
    if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
    return {Kind::MaximalPair, p, c};
  }

  std::string to_string(const std::string& var = "t") const {
    auto lin = [&] { return var + (c < 0 ? "+" + std::to_string(-c) : "-" + std::to_string(c)); };
    switch (kind) {
      case Kind::Zero:
        return "(0)";
      case Kind::IntegerPrime:
        return "(" + std::to_string(p) + ")";
      case Kind::LinearPoly:
        return "(" + lin() + ")";
      case Kind::MaximalPair:
        break;
    }
    return "(" + std::to_string(p) + "," + lin() + ")";
  }

  static PrimeSpec parse(std::string_view text) {
    const std::string s = detail::strip_spaces(text);
    auto bad = [&] { return ParseError("unrecognized prime '" + std::string(text) + "'"); };
    if (s.size() < 3 || s.front() != '(' || s.back() != ')') throw bad();
    const std::string body = s.substr(1, s.size() - 2);
    auto linear_part = [&](const std::string& part) -> long {
      std::size_t i = 0;
      while (i < part.size() && std::isalpha(static_cast<unsigned char>(part[i]))) ++i;
      if (i == 0) throw bad();
      const std::string rest = part.substr(i);
      if (rest.empty()) return 0;
      if (rest[0] != '+' && rest[0] != '-') throw bad();
      const std::string digits = rest.substr(1);
      if (!is_integer_literal(digits) || digits[0] == '-') throw bad();
      const long v = std::stol(digits);
      return rest[0] == '-' ? v : -v;
    };
    const auto comma = body.find(',');
    if (comma != std::string::npos) {
      const std::string ps = body.substr(0, comma);
      if (!is_integer_literal(ps)) throw bad();
      return maximal(to_u64(parse_integer(ps)), linear_part(body.substr(comma + 1)));
    }
    if (is_integer_literal(body)) {
      const auto v = parse_integer(body);
      if (v == 0) return zero();
      if (v < 0) throw bad();
      return integer(to_u64(v));
    }
    return linear(linear_part(body));
  }

  /// Residue field of this prime in the given base ring.
  RingDescriptor residue_field(const RingDescriptor& base) const {
    const bool zt = base.kind == RingKind::PolyOverZ;
    if (!zt && base.kind != RingKind::IntegersZ) throw RingMismatch("primes are defined for Z and Z[t] only");
    switch (kind) {
      case Kind::Zero:
        return base.fraction_field();
      case Kind::IntegerPrime:
        if (zt) throw RingMismatch("the primes (p) of Z[t] are not offered; use (p,t-c)");
        return RingDescriptor::prime_field(p);
      case Kind::LinearPoly:
        if (!zt) throw RingMismatch(to_string() + " is not a prime of Z");
        return RingDescriptor::rationals();
      case Kind::MaximalPair:
        break;
    }
    if (!zt) throw RingMismatch(to_string() + " is not a prime of Z");
    return RingDescriptor::prime_field(p);
  }

  friend bool operator==(const PrimeSpec&, const PrimeSpec&) = default;
};

namespace detail {

template <class F, class R, class Fn>
Representation<F> reduce_with(const Representation<R>& rep, const F& field, const PrimeSpec& prime, Fn&& map_entry) {
  std::vector<MatrixOver<F>> gens;
  for (const auto& g : rep.generators()) gens.push_back(mat::map<typename F::Element>(g, map_entry));
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (field.is_zero(linalg::det(field, gens[i])))
      throw BadPrime("generator " + std::to_string(i) + " is singular modulo " + prime.to_string());
  std::string label = rep.label().empty() ? "" : rep.label() + " mod " + prime.to_string();
  return Representation<F>(field, rep.dim(), std::move(gens), rep.relations(), std::move(label));
}

inline void check_lattice(const LatticeBasis& lat, const RingDescriptor& ring, std::size_t dim) {
  if (lat.ring != ring) throw RingMismatch("lattice is over " + lat.ring.to_string() + ", representation over " +
                                           ring.to_string());
  if (lat.dim() != dim) throw ShapeError("lattice rank does not match the representation");
}

}  // namespace detail

using IntegralRep = std::variant<Representation<Integers>, Representation<PolyIntegers>>;

/// Residual representation of an integral representation at a prime.
/// The result lives over the residue field; (0) gives the fraction field.
inline AnyRepresentation reduce(const Representation<Integers>& rep, const LatticeBasis& lat, const PrimeSpec& prime) {
  detail::check_lattice(lat, RingDescriptor::integers(), rep.dim());
  prime.residue_field(RingDescriptor::integers());
  if (prime.kind == PrimeSpec::Kind::Zero)
    return detail::reduce_with(rep, Rationals{}, prime, [](const mpz_class& a) { return mpq_class(a); });
  const PrimeField fp(prime.p);
  return detail::reduce_with(rep, fp, prime, [&](const mpz_class& a) { return fp.from_integer(a); });
}

inline AnyRepresentation reduce(const Representation<PolyIntegers>& rep, const LatticeBasis& lat,
                                const PrimeSpec& prime) {
  const auto& zt = rep.ring();
  detail::check_lattice(lat, zt.descriptor(), rep.dim());
  prime.residue_field(zt.descriptor());
  switch (prime.kind) {
    case PrimeSpec::Kind::Zero:
      return detail::reduce_with(rep, Fraction<PolyIntegers>::field(zt), prime,
                                 [&](const auto& a) { return Fraction<PolyIntegers>::embed(zt, a); });
    case PrimeSpec::Kind::LinearPoly:
      return detail::reduce_with(rep, Rationals{}, prime,
                                 [&](const auto& a) { return mpq_class(zt.eval(a, mpz_class(prime.c))); });
    default:
      break;
  }
  const PrimeField fp(prime.p);
  return detail::reduce_with(rep, fp, prime,
                             [&](const auto& a) { return fp.from_integer(zt.eval(a, mpz_class(prime.c))); });
}

inline AnyRepresentation reduce(const IntegralRep& rep, const LatticeBasis& lat, const PrimeSpec& prime) {
  return std::visit([&](const auto& r) { return reduce(r, lat, prime); }, rep);
}

inline json lattice_to_json(const LatticeBasis& lat) {
  return {{"ring", lat.ring.to_string()}, {"basis", mat::format(Rationals{}, lat.basis)}, {"canonical", lat.canonical}};
}

}  // namespace irredcert
