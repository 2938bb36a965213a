#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include <json.hpp>

#include "irredcert/error.hpp"
#include "irredcert/representation.hpp"

// Brute-force ground truth. Deliberately self-contained: no echelon or
// spinning code is shared with the MeatAxe.

namespace irredcert::oracle {

inline constexpr std::uint64_t kMaxSpaceSize = std::uint64_t{1} << 14;
inline constexpr std::uint64_t kMaxCandidates = std::uint64_t{1} << 22;

template <class F>
using Basis = std::vector<std::vector<typename F::Element>>;

namespace detail {

/// Number of echelon representatives, saturating at kMaxCandidates + 1.
inline std::uint64_t candidate_count(std::uint64_t q, std::size_t d) {
  // Sum over k of the Gaussian binomial [d, k]_q, by the recurrence
  // [n, k] = [n-1, k-1] + q^k [n-1, k].
  const std::uint64_t cap = kMaxCandidates + 1;
  std::vector<std::uint64_t> row{1};
  for (std::size_t n = 1; n <= d; ++n) {
    std::vector<std::uint64_t> next(n + 1, 0);
    std::uint64_t qk = 1;
    for (std::size_t k = 0; k <= n; ++k) {
      const std::uint64_t a = k >= 1 ? row[k - 1] : 0;
      const std::uint64_t b = k < row.size() ? row[k] : 0;
      const unsigned __int128 v = static_cast<unsigned __int128>(qk) * b + a;
      next[k] = v > cap ? cap : static_cast<std::uint64_t>(v);
      qk = qk >= cap ? cap : std::min<std::uint64_t>(cap, qk * q);
    }
    row = std::move(next);
  }
  std::uint64_t total = 0;
  for (auto v : row) total = std::min(cap, total + v);
  return total;
}

/// Whether v lies in the span of rows in reduced echelon form with the
/// given pivot columns.
template <class F>
bool in_echelon_span(const F& field, const Basis<F>& rows, const std::vector<std::size_t>& pivots,
                     std::vector<typename F::Element> v) {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto c = v[pivots[r]];
    if (field.is_zero(c)) continue;
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = field.sub(v[j], field.mul(c, rows[r][j]));
  }
  for (const auto& x : v)
    if (!field.is_zero(x)) return false;
  return true;
}

template <class F>
bool invariant(const F& field, const std::vector<MatrixOver<F>>& gens, const Basis<F>& rows,
               const std::vector<std::size_t>& pivots) {
  const std::size_t d = gens.front().rows();
  for (const auto& g : gens)
    for (const auto& v : rows) {
      std::vector<typename F::Element> gv(d, field.zero());
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) gv[i] = field.add(gv[i], field.mul(g(i, j), v[j]));
      if (!in_echelon_span(field, rows, pivots, std::move(gv))) return false;
    }
  return true;
}

}  // namespace detail

/// Every invariant subspace (including 0 and the whole space), each as a
/// reduced echelon basis, sorted by dimension and then by the element
/// indices of its rows. Requires q^d <= 2^14.
template <class F>
std::vector<Basis<F>> invariant_subspaces(const Representation<F>& rep) {
  static_assert(F::is_finite, "the oracle enumerates finite fields only");
  const F& field = rep.ring();
  const std::size_t d = rep.dim();
  const mpz_class qz = field.cardinality();
  if (pow(qz, d) > kMaxSpaceSize) throw SizeBound("oracle requires q^d <= 2^14");
  const std::uint64_t q = qz.get_ui();
  if (detail::candidate_count(q, d) > kMaxCandidates) throw SizeBound("too many subspaces to enumerate");

  std::vector<Basis<F>> found;
  for (std::size_t k = 0; k <= d; ++k) {
    // Pivot sets as increasing k-subsets of {0, ..., d-1}.
    std::vector<std::size_t> piv(k);
    for (std::size_t i = 0; i < k; ++i) piv[i] = i;
    while (true) {
      std::vector<std::pair<std::size_t, std::size_t>> free;
      std::vector<bool> is_piv(d, false);
      for (auto p : piv) is_piv[p] = true;
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = piv[r] + 1; c < d; ++c)
          if (!is_piv[c]) free.emplace_back(r, c);
      std::uint64_t combos = 1;
      for (std::size_t i = 0; i < free.size(); ++i) combos *= q;
      for (std::uint64_t idx = 0; idx < combos; ++idx) {
        Basis<F> rows(k, std::vector<typename F::Element>(d, field.zero()));
        for (std::size_t r = 0; r < k; ++r) rows[r][piv[r]] = field.one();
        std::uint64_t rest = idx;
        for (const auto& [r, c] : free) {
          rows[r][c] = field.element_at(rest % q);
          rest /= q;
        }
        if (detail::invariant(field, rep.generators(), rows, piv)) found.push_back(std::move(rows));
      }
      // Next k-subset.
      std::size_t i = k;
      while (i > 0 && piv[i - 1] == d - k + i - 1) --i;
      if (i == 0) break;
      ++piv[i - 1];
      for (std::size_t j = i; j < k; ++j) piv[j] = piv[j - 1] + 1;
    }
  }
  auto key = [&](const Basis<F>& b) {
    std::vector<std::uint64_t> out{b.size()};
    for (const auto& r : b)
      for (const auto& x : r) out.push_back(field.index_of(x));
    return out;
  };
  std::sort(found.begin(), found.end(), [&](const Basis<F>& a, const Basis<F>& b) { return key(a) < key(b); });
  return found;
}

template <class F>
std::size_t count_invariant(const Representation<F>& rep) {
  return invariant_subspaces(rep).size();
}

template <class F>
bool is_irreducible(const Representation<F>& rep) {
  return count_invariant(rep) == 2;
}

template <class F>
nlohmann::json to_json(const Representation<F>& rep, const std::vector<Basis<F>>& spaces) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& b : spaces) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : b) {
      nlohmann::json row = nlohmann::json::array();
      for (const auto& x : r) row.push_back(rep.ring().format(x));
      rows.push_back(std::move(row));
    }
    list.push_back({{"dim", b.size()}, {"basis", std::move(rows)}});
  }
  return {{"count", spaces.size()}, {"irreducible", spaces.size() == 2}, {"subspaces", std::move(list)}};
}

}  // namespace irredcert::oracle
