#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "irredcert/factor.hpp"
#include "irredcert/linalg.hpp"
#include "irredcert/representation.hpp"

namespace irredcert {

enum class Verdict { Irreducible, Reducible, Inconclusive };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Irreducible:
      return "Irreducible";
    case Verdict::Reducible:
      return "Reducible";
    case Verdict::Inconclusive:
      break;
  }
  return "Inconclusive";
}

inline Verdict verdict_from_string(const std::string& s) {
  if (s == "Irreducible") return Verdict::Irreducible;
  if (s == "Reducible") return Verdict::Reducible;
  if (s == "Inconclusive") return Verdict::Inconclusive;
  throw ParseError("unknown verdict '" + s + "'");
}

struct MeataxeConfig {
  std::uint64_t seed = 1;
  int budget = 200;
};

/// Outcome of an irreducibility test. A Reducible witness is a reduced
/// echelon basis of a proper nonzero invariant subspace, re-verified before
/// it is returned.
template <class F>
struct MeataxeResult {
  Verdict status = Verdict::Inconclusive;
  std::vector<Vector<F>> witness;
  nlohmann::json transcript;
};

namespace meataxe {

template <class F>
struct Candidate {
  poly::Poly<F> f;
  bool irreducible = false;
};

template <class F>
void sort_candidates(const F& field, std::vector<Candidate<F>>& cs) {
  std::stable_sort(cs.begin(), cs.end(), [&](const Candidate<F>& a, const Candidate<F>& b) {
    if (poly::degree(a.f) != poly::degree(b.f)) return poly::degree(a.f) < poly::degree(b.f);
    return a.irreducible && !b.irreducible;
  });
  (void)field;
}

/// Finite fields: full factorization, every factor is irreducible.
template <class F>
  requires F::is_finite
std::vector<Candidate<F>> candidates(const F& field, const poly::Poly<F>& cp, Xoshiro256& rng) {
  std::vector<Candidate<F>> out;
  for (auto& [f, m] : factor::factor(field, cp, rng)) out.push_back({std::move(f), true});
  sort_candidates(field, out);
  return out;
}

/// Removes every power of f from g.
template <class F>
poly::Poly<F> strip_factor(const F& field, poly::Poly<F> g, const poly::Poly<F>& f) {
  while (poly::degree(g) >= poly::degree(f)) {
    auto [q, r] = poly::divmod(field, g, f);
    if (!r.empty()) break;
    g = std::move(q);
  }
  return g;
}

/// Over Q: linear factors from rational roots, then square-free pieces of
/// the rest, marked irreducible only when proven so.
inline std::vector<Candidate<Rationals>> candidates(const Rationals& q, const poly::Poly<Rationals>& cp, Xoshiro256&) {
  std::vector<Candidate<Rationals>> out;
  auto rest = cp;
  if (auto roots = factor::rational_roots(cp)) {
    for (const auto& r : *roots) {
      poly::Poly<Rationals> lin{-r, 1};
      rest = strip_factor(q, rest, lin);
      out.push_back({std::move(lin), true});
    }
  }
  for (auto& [piece, m] : poly::yun(q, rest)) {
    const bool irr = factor::proven_irreducible_over_q(piece);
    out.push_back({std::move(piece), irr});
  }
  sort_candidates(q, out);
  return out;
}

/// Q(t)[x] polynomial with denominators cleared, as coefficient lists in t:
/// h[i] is the Q[t] coefficient of x^i.
inline std::vector<std::vector<mpq_class>> clear_t_denominators(const RationalFunctions& k,
                                                                const poly::Poly<RationalFunctions>& f) {
  const Rationals q;
  std::vector<mpq_class> den{1};
  for (const auto& c : f) den = poly::monic(q, poly::exact_quo(q, poly::mul(q, den, c.den), poly::gcd(q, den, c.den)));
  std::vector<std::vector<mpq_class>> h;
  for (const auto& c : f) h.push_back(poly::mul(q, c.num, poly::exact_quo(q, den, c.den)));
  (void)k;
  return h;
}

/// Sufficient test for irreducibility over Q(t): some specialization t = t0
/// keeping the leading coefficient nonzero is proven irreducible over Q.
inline bool proven_irreducible_over_qt(const RationalFunctions& k, const poly::Poly<RationalFunctions>& f) {
  const int n = poly::degree(f);
  if (n < 1) return false;
  if (n == 1) return true;
  const Rationals q;
  const auto h = clear_t_denominators(k, f);
  for (long t0 : {0L, 1L, -1L, 2L, -2L, 3L, -3L, 5L, 7L, 11L}) {
    const mpq_class at(t0);
    if (poly::eval(q, h.back(), at) == 0) continue;
    std::vector<mpq_class> s;
    for (const auto& c : h) s.push_back(poly::eval(q, c, at));
    if (factor::proven_irreducible_over_q(s)) return true;
  }
  return false;
}

/// Over Q(t): factors constant in t come from the gcd of the t-coefficients
/// and are split with the Q strategy; the remainder is split square-free.
inline std::vector<Candidate<RationalFunctions>> candidates(const RationalFunctions& k,
                                                            const poly::Poly<RationalFunctions>& cp,
                                                            Xoshiro256& rng) {
  const Rationals q;
  const auto h = clear_t_denominators(k, cp);
  std::size_t tdeg = 0;
  for (const auto& c : h) tdeg = std::max(tdeg, c.size());
  poly::Poly<Rationals> g;
  for (std::size_t j = 0; j < tdeg; ++j) {
    poly::Poly<Rationals> pj;
    for (std::size_t i = 0; i < h.size(); ++i) pj.push_back(j < h[i].size() ? h[i][j] : mpq_class(0));
    poly::trim(q, pj);
    g = poly::gcd(q, g, pj);
  }
  std::vector<Candidate<RationalFunctions>> out;
  auto rest = cp;
  auto lift = [&](const poly::Poly<Rationals>& p) {
    poly::Poly<RationalFunctions> r;
    for (const auto& c : p) r.push_back(k.from_rational(c));
    poly::trim(k, r);
    return r;
  };
  if (poly::degree(g) >= 1) {
    for (auto& c : candidates(q, g, rng)) {
      auto f = lift(c.f);
      if (c.irreducible) rest = strip_factor(k, rest, f);
      out.push_back({std::move(f), c.irreducible});
    }
  }
  for (auto& [piece, m] : poly::yun(k, rest)) {
    const bool irr = proven_irreducible_over_qt(k, piece);
    out.push_back({std::move(piece), irr});
  }
  sort_candidates(k, out);
  return out;
}

template <class T>
std::vector<Matrix<T>> transposes(const std::vector<Matrix<T>>& gens) {
  std::vector<Matrix<T>> out;
  for (const auto& g : gens) out.push_back(mat::transpose(g));
  return out;
}

/// Calls fn on one vector of every line in span(basis) (coordinates with
/// leading coefficient 1) until fn returns true. Requires a finite field.
template <class F, class Fn>
bool for_each_projective(const F& field, const std::vector<Vector<F>>& basis, std::size_t n, Fn&& fn) {
  const std::uint64_t q = to_u64(field.cardinality());
  const std::size_t k = basis.size();
  for (std::size_t lead = 0; lead < k; ++lead) {
    std::uint64_t count = 1;
    for (std::size_t i = lead + 1; i < k; ++i) count *= q;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Vector<F> v = basis[lead];
      std::uint64_t rest = idx;
      for (std::size_t i = lead + 1; i < k; ++i) {
        const auto c = field.element_at(rest % q);
        rest /= q;
        if (field.is_zero(c)) continue;
        for (std::size_t j = 0; j < n; ++j) v[j] = field.add(v[j], field.mul(c, basis[i][j]));
      }
      if (fn(v)) return true;
    }
  }
  return false;
}

template <class F>
std::uint64_t projective_count(const F& field, std::size_t k, std::uint64_t cap) {
  if constexpr (F::is_finite) {
    const mpz_class q = field.cardinality();
    mpz_class total = 0, pw = 1;
    for (std::size_t i = 0; i < k; ++i) {
      total += pw;
      pw *= q;
      if (total > cap) return cap + 1;
    }
    return total.get_ui();
  } else {
    (void)field;
    (void)k;
    return cap + 1;
  }
}

inline constexpr std::uint64_t kExhaustiveCap = 4096;
inline constexpr std::size_t kExtraSpins = 4;

}  // namespace meataxe

/// Holt-Rees style irreducibility test with Norton's criterion.
///
/// Each sample forms theta = sum c_i w_i over positive words of length at
/// most 6, factors its characteristic polynomial and, per factor f:
///  - spins null vectors of f(theta); a proper span is a witness;
///  - if f is irreducible and the nullity equals deg f, spins one null
///    vector of f(theta)^T under the transposed generators; a full span
///    proves irreducibility, a proper one gives its annihilator as witness;
///  - over small finite fields with larger nullity, spins every null vector
///    on both sides, which decides as well.
template <class F>
MeataxeResult<F> is_irreducible(const Representation<F>& rep, const MeataxeConfig& cfg = {}) {
  static_assert(F::is_field, "the MeatAxe needs field coefficients");
  using nlohmann::json;
  const F& field = rep.ring();
  const std::size_t d = rep.dim();
  const auto& gens = rep.generators();
  const auto dual = meataxe::transposes(gens);
  MeataxeResult<F> res;
  res.transcript = {{"seed", cfg.seed}, {"budget", cfg.budget}, {"field", field.descriptor().to_string()}};
  json samples = json::array();

  auto finish = [&](Verdict v, std::vector<Vector<F>> witness, json reason) {
    if (v == Verdict::Reducible) {
      linalg::Subspace<F> s(field, d);
      for (const auto& w : witness) s.insert(w);
      if (s.dim() == 0 || s.dim() >= d || !linalg::is_invariant(field, gens, s.basis(), d))
        throw Error("internal: MeatAxe witness failed verification");
      res.witness = s.basis();
    }
    res.status = v;
    res.transcript["samples"] = std::move(samples);
    res.transcript["decision"] = std::move(reason);
    res.transcript["verdict"] = to_string(v);
    return res;
  };

  if (d == 1) return finish(Verdict::Irreducible, {}, {{"rule", "dimension-one"}});

  Xoshiro256 rng(cfg.seed);
  auto coefficient = [&]() -> typename F::Element {
    if constexpr (F::is_finite)
      return field.random(rng);
    else
      return field.from_int(rng.between(-3, 3));
  };

  for (int sample = 0; sample < cfg.budget; ++sample) {
    const std::size_t terms = 2 + rng.below(3);
    auto theta = mat::zeros(field, d, d);
    json words = json::array(), coeffs = json::array();
    for (std::size_t i = 0; i < terms; ++i) {
      const Word w = random_word(rng, gens.size(), rng.below(7), false);
      auto c = coefficient();
      if (i == 0 && field.is_zero(c)) c = field.one();
      theta = mat::add(field, theta, mat::scale(field, c, rep.evaluate(w)));
      json wj = json::array();
      for (const auto& l : w) wj.push_back(l.gen);
      words.push_back(std::move(wj));
      coeffs.push_back(field.format(c));
    }
    const auto cp = linalg::char_poly(field, theta);
    auto cands = meataxe::candidates(field, cp, rng);
    json entry = {{"words", std::move(words)},
                  {"coefficients", std::move(coeffs)},
                  {"char_poly", poly::format(field, cp, "x")}};
    json tried = json::array();

    for (const auto& cand : cands) {
      const int deg = poly::degree(cand.f);
      const auto fth = linalg::eval_poly(field, cand.f, theta);
      const auto null = linalg::kernel_basis(field, fth);
      json info = {{"factor", poly::format(field, cand.f, "x")},
                   {"irreducible", cand.irreducible},
                   {"nullity", null.size()}};
      if (null.empty()) {
        tried.push_back(std::move(info));
        continue;
      }
      // Spin null vectors: any proper span is a witness.
      const std::size_t spins = std::min(null.size(), static_cast<std::size_t>(deg) < null.size()
                                                          ? meataxe::kExtraSpins
                                                          : std::size_t{1});
      json spin_dims = json::array();
      for (std::size_t i = 0; i < spins; ++i) {
        const auto s = linalg::spin(field, gens, {null[i]}, d);
        spin_dims.push_back(s.dim());
        if (s.dim() < d) {
          info["spin_dims"] = std::move(spin_dims);
          tried.push_back(std::move(info));
          entry["factors"] = std::move(tried);
          samples.push_back(std::move(entry));
          return finish(Verdict::Reducible, s.basis(), {{"rule", "spin"}, {"sample", sample}});
        }
      }
      info["spin_dims"] = std::move(spin_dims);
      if (!cand.irreducible) {
        tried.push_back(std::move(info));
        continue;
      }
      const auto dual_null = linalg::kernel_basis(field, mat::transpose(fth));
      auto conclude_dual = [&](const linalg::Subspace<F>& s) {
        info["dual_spin_dim"] = s.dim();
        tried.push_back(std::move(info));
        entry["factors"] = std::move(tried);
        samples.push_back(std::move(entry));
        if (s.dim() < d)
          return finish(Verdict::Reducible, linalg::annihilator(field, s.basis(), d),
                        {{"rule", "dual-spin"}, {"sample", sample}});
        return finish(Verdict::Irreducible, {}, {{"rule", "norton"}, {"sample", sample}});
      };
      if (null.size() == static_cast<std::size_t>(deg))
        return conclude_dual(linalg::spin(field, dual, {dual_null.front()}, d));

      if constexpr (F::is_finite) {
        const auto cap = meataxe::kExhaustiveCap;
        if (meataxe::projective_count(field, null.size(), cap) <= cap &&
            meataxe::projective_count(field, dual_null.size(), cap) <= cap) {
          std::vector<Vector<F>> found;
          const bool hit = meataxe::for_each_projective(field, null, d, [&](const Vector<F>& v) {
            auto s = linalg::spin(field, gens, {v}, d);
            if (s.dim() < d) found = s.basis();
            return s.dim() < d;
          });
          if (hit) {
            info["exhaustive"] = "primal";
            tried.push_back(std::move(info));
            entry["factors"] = std::move(tried);
            samples.push_back(std::move(entry));
            return finish(Verdict::Reducible, found, {{"rule", "exhaustive-spin"}, {"sample", sample}});
          }
          linalg::Subspace<F> proper(field, d);
          const bool dual_hit = meataxe::for_each_projective(field, dual_null, d, [&](const Vector<F>& v) {
            auto s = linalg::spin(field, dual, {v}, d);
            if (s.dim() < d) proper = s;
            return s.dim() < d;
          });
          info["exhaustive"] = "both";
          tried.push_back(std::move(info));
          entry["factors"] = std::move(tried);
          samples.push_back(std::move(entry));
          if (dual_hit)
            return finish(Verdict::Reducible, linalg::annihilator(field, proper.basis(), d),
                          {{"rule", "exhaustive-dual-spin"}, {"sample", sample}});
          return finish(Verdict::Irreducible, {}, {{"rule", "exhaustive-norton"}, {"sample", sample}});
        }
      }
      tried.push_back(std::move(info));
    }
    entry["factors"] = std::move(tried);
    samples.push_back(std::move(entry));
  }
  return finish(Verdict::Inconclusive, {}, {{"rule", "budget-exhausted"}});
}

/// Dimension of the commutant {X : X g = g X for every generator}.
template <class F>
std::size_t endo_dim(const Representation<F>& rep) {
  const F& field = rep.ring();
  const std::size_t d = rep.dim();
  const auto id = mat::identity(field, d);
  std::vector<Vector<F>> rows;
  // Row-major vec: vec(gX - Xg) = (g (x) I - I (x) g^T) vec(X).
  for (const auto& g : rep.generators()) {
    const auto m = mat::sub(field, mat::kron(field, g, id), mat::kron(field, id, mat::transpose(g)));
    for (std::size_t i = 0; i < m.rows(); ++i) rows.emplace_back(m.row(i).begin(), m.row(i).end());
  }
  return linalg::kernel_basis(field, mat::from_rows(d * d, rows)).size();
}

/// Irreducible with a one-dimensional commutant. Throws AbsIrredUndecided
/// when the MeatAxe is inconclusive.
template <class F>
bool is_absolutely_irreducible(const Representation<F>& rep, const MeataxeConfig& cfg = {}) {
  static_assert(F::is_finite, "absolute irreducibility is decided over finite fields");
  const auto v = is_irreducible(rep, cfg);
  if (v.status == Verdict::Inconclusive) throw AbsIrredUndecided("MeatAxe budget exhausted");
  return v.status == Verdict::Irreducible && endo_dim(rep) == 1;
}

template <class F>
nlohmann::json witness_to_json(const F& field, const std::vector<Vector<F>>& witness) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& v : witness) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& e : v) row.push_back(field.format(e));
    out.push_back(std::move(row));
  }
  return out;
}

template <class F>
nlohmann::json meataxe_to_json(const Representation<F>& rep, const MeataxeResult<F>& r) {
  nlohmann::json out = {{"verdict", to_string(r.status)}, {"transcript", r.transcript}};
  if (r.status == Verdict::Reducible) out["witness"] = witness_to_json(rep.ring(), r.witness);
  return out;
}

}  // namespace irredcert
