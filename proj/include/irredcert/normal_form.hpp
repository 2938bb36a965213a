#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <utility>
#include <vector>

#include "irredcert/error.hpp"
#include "irredcert/integer.hpp"
#include "irredcert/matrix.hpp"
#include "irredcert/rings.hpp"

// Hermite and Smith normal forms over Z.
namespace irredcert::nf {

using IntMatrix = Matrix<mpz_class>;
using RatMatrix = Matrix<mpq_class>;

struct HermiteForm {
  IntMatrix h;          // column Hermite normal form
  IntMatrix transform;  // unimodular, m * transform = h
  std::size_t rank = 0; // nonzero columns of h are the first `rank`
};

namespace detail {

inline void col_combine(IntMatrix& a, std::size_t k, std::size_t j, const mpz_class& s, const mpz_class& t,
                        const mpz_class& u, const mpz_class& v) {
  // (col_k, col_j) <- (s col_k + t col_j, u col_k + v col_j)
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const mpz_class ck = a(i, k), cj = a(i, j);
    a(i, k) = s * ck + t * cj;
    a(i, j) = u * ck + v * cj;
  }
}

inline void col_axpy(IntMatrix& a, std::size_t dst, std::size_t src, const mpz_class& q) {
  if (q == 0) return;
  for (std::size_t i = 0; i < a.rows(); ++i) a(i, dst) -= q * a(i, src);
}

inline void col_negate(IntMatrix& a, std::size_t k) {
  for (std::size_t i = 0; i < a.rows(); ++i) a(i, k) = -a(i, k);
}

inline void row_combine(IntMatrix& a, std::size_t k, std::size_t j, const mpz_class& s, const mpz_class& t,
                        const mpz_class& u, const mpz_class& v) {
  for (std::size_t c = 0; c < a.cols(); ++c) {
    const mpz_class rk = a(k, c), rj = a(j, c);
    a(k, c) = s * rk + t * rj;
    a(j, c) = u * rk + v * rj;
  }
}

}  // namespace detail

/// Column-style Hermite normal form. Pivot rows strictly increase with the
/// column index, pivots are positive, and every entry left of a pivot in its
/// row lies in [0, pivot). Unique for a given column span.
inline HermiteForm hnf(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = mat::identity(Integers{}, m.cols());
  std::size_t k = 0;
  for (std::size_t i = 0; i < h.rows() && k < h.cols(); ++i) {
    for (std::size_t j = k + 1; j < h.cols(); ++j) {
      if (h(i, j) == 0) continue;
      const mpz_class a = h(i, k), b = h(i, j);
      const auto g = xgcd(a, b);
      const mpz_class ag = a / g.g, bg = b / g.g;
      detail::col_combine(h, k, j, g.s, g.t, -bg, ag);
      detail::col_combine(u, k, j, g.s, g.t, -bg, ag);
    }
    if (h(i, k) == 0) continue;
    if (h(i, k) < 0) {
      detail::col_negate(h, k);
      detail::col_negate(u, k);
    }
    for (std::size_t l = 0; l < k; ++l) {
      const mpz_class q = floor_div(h(i, l), h(i, k));
      detail::col_axpy(h, l, k, q);
      detail::col_axpy(u, l, k, q);
    }
    ++k;
  }
  return {std::move(h), std::move(u), k};
}

struct SmithForm {
  IntMatrix d;      // diagonal, d_1 | d_2 | ..., non-negative
  IntMatrix left;   // unimodular
  IntMatrix right;  // unimodular, left * m * right = d
  std::size_t rank = 0;
};

inline SmithForm snf(const IntMatrix& m) {
  const Integers z;
  IntMatrix d = m;
  IntMatrix left = mat::identity(z, m.rows());
  IntMatrix right = mat::identity(z, m.cols());
  const std::size_t r = m.rows(), c = m.cols();
  std::size_t t = 0;
  for (; t < std::min(r, c); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::size_t pi = r, pj = c;
    for (std::size_t i = t; i < r; ++i)
      for (std::size_t j = t; j < c; ++j)
        if (d(i, j) != 0 && (pi == r || abs(d(i, j)) < abs(d(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi == r) break;
    if (pi != t) {
      detail::row_combine(d, t, pi, 0, 1, 1, 0);
      detail::row_combine(left, t, pi, 0, 1, 1, 0);
    }
    if (pj != t) {
      detail::col_combine(d, t, pj, 0, 1, 1, 0);
      detail::col_combine(right, t, pj, 0, 1, 1, 0);
    }
    while (true) {
      for (std::size_t i = t + 1; i < r; ++i) {
        if (d(i, t) == 0) continue;
        const mpz_class a = d(t, t), b = d(i, t);
        if (mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
          const mpz_class q = b / a;
          detail::row_combine(d, t, i, 1, 0, -q, 1);
          detail::row_combine(left, t, i, 1, 0, -q, 1);
          continue;
        }
        const auto g = xgcd(a, b);
        const mpz_class ag = a / g.g, bg = b / g.g;
        detail::row_combine(d, t, i, g.s, g.t, -bg, ag);
        detail::row_combine(left, t, i, g.s, g.t, -bg, ag);
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (d(t, j) == 0) continue;
        const mpz_class a = d(t, t), b = d(t, j);
        if (mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
          const mpz_class q = b / a;
          detail::col_combine(d, t, j, 1, 0, -q, 1);
          detail::col_combine(right, t, j, 1, 0, -q, 1);
          continue;
        }
        const auto g = xgcd(a, b);
        const mpz_class ag = a / g.g, bg = b / g.g;
        detail::col_combine(d, t, j, g.s, g.t, -bg, ag);
        detail::col_combine(right, t, j, g.s, g.t, -bg, ag);
      }
      bool column_clear = true;
      for (std::size_t i = t + 1; i < r; ++i)
        if (d(i, t) != 0) column_clear = false;
      if (!column_clear) continue;
      // Enforce divisibility of the trailing block by the pivot.
      std::size_t bad_row = r;
      for (std::size_t i = t + 1; i < r && bad_row == r; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            bad_row = i;
            break;
          }
      if (bad_row == r) break;
      detail::row_combine(d, t, bad_row, 1, 1, 0, 1);
      detail::row_combine(left, t, bad_row, 1, 1, 0, 1);
    }
    if (d(t, t) < 0) {
      for (std::size_t j = 0; j < c; ++j) d(t, j) = -d(t, j);
      for (std::size_t j = 0; j < r; ++j) left(t, j) = -left(t, j);
    }
  }
  return {std::move(d), std::move(left), std::move(right), t};
}

/// Z-basis (as columns) of {x in Z^n : m x = 0}.
inline IntMatrix integer_kernel(const IntMatrix& m) {
  const auto hf = hnf(m);
  std::vector<std::vector<mpz_class>> cols;
  for (std::size_t j = hf.rank; j < m.cols(); ++j) cols.push_back(mat::column(hf.transform, j));
  return mat::from_columns(m.cols(), cols);
}

/// Smallest positive D with D * m integral, and D * m.
inline std::pair<IntMatrix, mpz_class> clear_denominators(const RatMatrix& m) {
  mpz_class den = 1;
  for (const auto& q : m.data()) den = lcm(den, q.get_den());
  auto ints = mat::map<mpz_class>(m, [&](const mpq_class& q) { return mpz_class(q.get_num() * (den / q.get_den())); });
  return {std::move(ints), den};
}

inline RatMatrix to_rational(const IntMatrix& m) {
  return mat::map<mpq_class>(m, [](const mpz_class& v) { return mpq_class(v); });
}

inline IntMatrix to_integer(const RatMatrix& m) {
  return mat::map<mpz_class>(m, [](const mpq_class& q) {
    if (q.get_den() != 1) throw IntegralityError("entry " + q.get_str() + " is not an integer");
    return mpz_class(q.get_num());
  });
}

}  // namespace irredcert::nf
