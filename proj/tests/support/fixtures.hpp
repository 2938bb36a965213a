#pragma once

#include <string>
#include <utility>
#include <vector>

#include "irredcert/irredcert.hpp"

// Shared by the unit tests and the acceptance runner.

namespace fixtures {

using namespace irredcert;

inline std::string rep_path(const std::string& name) { return std::string(IRREDCERT_DATA_DIR "/reps/") + name + ".json"; }

inline AnyRepresentation corpus(const std::string& name) { return load_representation(rep_path(name)); }

template <class R>
Representation<R> load(const std::string& name) {
  return std::get<Representation<R>>(corpus(name));
}

/// Reduction of a rational corpus representation at (p).
inline Representation<PrimeField> mod_p(const std::string& name, std::uint64_t p) {
  const auto sat = saturate(load<Rationals>(name));
  return std::get<Representation<PrimeField>>(reduce(sat.int_rep, sat.lat, PrimeSpec::integer(p)));
}

template <class F>
MatrixOver<F> random_invertible(const F& field, Xoshiro256& rng, std::size_t d) {
  while (true) {
    auto m = mat::zeros(field, d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) m(i, j) = field.random(rng);
    if (!field.is_zero(linalg::det(field, m))) return m;
  }
}

/// Two invertible generators of dimension 1 to 3 with entries in [-3, 3].
inline Representation<Rationals> random_integral_rep(Xoshiro256& rng) {
  const Rationals q;
  const std::size_t d = 1 + rng.below(3);
  std::vector<MatrixOver<Rationals>> gens;
  while (gens.size() < 2) {
    MatrixOver<Rationals> m(d, d, mpq_class(0));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) m(i, j) = mpq_class(rng.between(-3, 3));
    if (linalg::det(q, m) != 0) gens.push_back(std::move(m));
  }
  return Representation<Rationals>(q, d, std::move(gens));
}

/// Permutation matrix sending basis vector j to perm[j].
inline MatrixOver<PrimeField> perm_matrix(const PrimeField& f, const std::vector<std::size_t>& perm) {
  auto m = mat::zeros(f, perm.size(), perm.size());
  for (std::size_t j = 0; j < perm.size(); ++j) m(perm[j], j) = f.one();
  return m;
}

inline Representation<PrimeField> perm_group(const PrimeField& f, const std::vector<std::vector<std::size_t>>& gens) {
  std::vector<MatrixOver<PrimeField>> ms;
  for (const auto& g : gens) ms.push_back(perm_matrix(f, g));
  return Representation<PrimeField>(f, gens.front().size(), ms);
}

inline Representation<PrimeField> cyclic(const PrimeField& f, std::size_t n) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = (i + 1) % n;
  return perm_group(f, {p});
}

/// Q8 acting on itself by left multiplication. Elements are encoded as
/// 2*u + s for u in {1, i, j, k} and sign s.
inline Representation<PrimeField> q8_regular(const PrimeField& f) {
  // Unit products u*v as (index, negate) in the order 1, i, j, k.
  static const int table[4][4][2] = {{{0, 0}, {1, 0}, {2, 0}, {3, 0}},
                                     {{1, 0}, {0, 1}, {3, 0}, {2, 1}},
                                     {{2, 0}, {3, 1}, {0, 1}, {1, 0}},
                                     {{3, 0}, {2, 0}, {1, 1}, {0, 1}}};
  auto left = [&](int u) {
    std::vector<std::size_t> p(8);
    for (int v = 0; v < 4; ++v)
      for (int s = 0; s < 2; ++s) {
        const int w = table[u][v][0], sign = table[u][v][1] ^ s;
        p[2 * v + s] = static_cast<std::size_t>(2 * w + sign);
      }
    return p;
  };
  return perm_group(f, {left(1), left(2)});
}

/// Faithful permutation representations of Z/2, Z/3, Z/4, V4, S3, D4, Q8
/// and S4, in that order.
inline std::vector<std::pair<std::string, Representation<PrimeField>>> test_groups(const PrimeField& f) {
  return {{"Z2", cyclic(f, 2)},
          {"Z3", cyclic(f, 3)},
          {"Z4", cyclic(f, 4)},
          {"V4", perm_group(f, {{1, 0, 3, 2}, {2, 3, 0, 1}})},
          {"S3", perm_group(f, {{1, 2, 0}, {1, 0, 2}})},
          {"D4", perm_group(f, {{1, 2, 3, 0}, {2, 1, 0, 3}})},
          {"Q8", q8_regular(f)},
          {"S4", perm_group(f, {{1, 2, 3, 0}, {1, 0, 2, 3}})}};
}

}  // namespace fixtures
