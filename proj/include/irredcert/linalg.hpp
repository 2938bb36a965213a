#pragma once

#include <cstddef>
#include <algorithm>
#include <deque>
#include <utility>
#include <vector>

#include "irredcert/error.hpp"
#include "irredcert/matrix.hpp"
#include "irredcert/polynomial.hpp"

// Exact linear algebra over a field object F.
namespace irredcert::linalg {

template <class F>
struct Echelon {
  MatrixOver<F> reduced;            // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

template <class F>
Echelon<F> rref(const F& field, MatrixOver<F> a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && field.is_zero(a(p, c))) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    const auto inv = field.inv(a(r, c));
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) = field.mul(inv, a(r, j));
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || field.is_zero(a(i, c))) continue;
      const auto f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) = field.sub(a(i, j), field.mul(f, a(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

template <class F>
std::size_t rank(const F& field, const MatrixOver<F>& a) {
  return rref(field, a).pivots.size();
}

/// Basis of the right null space {v : a v = 0}; empty iff a is injective.
template <class F>
std::vector<Vector<F>> kernel_basis(const F& field, const MatrixOver<F>& a) {
  const auto e = rref(field, a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector<F>> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector<F> v(a.cols(), field.zero());
    v[f] = field.one();
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = field.neg(e.reduced(r, f));
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class F>
MatrixOver<F> inverse(const F& field, const MatrixOver<F>& a) {
  if (!a.square()) throw ShapeError("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  const auto e = rref(field, mat::hstack(a, mat::identity(field, n)));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw SingularError("matrix is singular");
  auto inv = mat::zeros(field, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

template <class F>
typename F::Element det(const F& field, MatrixOver<F> a) {
  if (!a.square()) throw ShapeError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  auto d = field.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && field.is_zero(a(p, c))) ++p;
    if (p == n) return field.zero();
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      d = field.neg(d);
    }
    d = field.mul(d, a(c, c));
    const auto inv = field.inv(a(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (field.is_zero(a(i, c))) continue;
      const auto f = field.mul(a(i, c), inv);
      for (std::size_t j = c; j < n; ++j) a(i, j) = field.sub(a(i, j), field.mul(f, a(c, j)));
    }
  }
  return d;
}

/// Monic characteristic polynomial det(xI - a) via reduction to upper
/// Hessenberg form.
template <class F>
poly::Poly<F> char_poly(const F& field, const MatrixOver<F>& a) {
  if (!a.square()) throw ShapeError("characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  auto h = a;
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && field.is_zero(h(i, m - 1))) ++i;
    if (i == n) continue;
    if (i != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(i, j), h(m, j));
      for (std::size_t j = 0; j < n; ++j) std::swap(h(j, i), h(j, m));
    }
    const auto t_inv = field.inv(h(m, m - 1));
    for (std::size_t r = m + 1; r < n; ++r) {
      if (field.is_zero(h(r, m - 1))) continue;
      const auto u = field.mul(h(r, m - 1), t_inv);
      for (std::size_t j = 0; j < n; ++j) h(r, j) = field.sub(h(r, j), field.mul(u, h(m, j)));
      for (std::size_t j = 0; j < n; ++j) h(j, m) = field.add(h(j, m), field.mul(u, h(j, r)));
    }
  }
  std::vector<poly::Poly<F>> p(n + 1);
  p[0] = poly::constant(field, field.one());
  const auto x = poly::x(field);
  for (std::size_t m = 1; m <= n; ++m) {
    p[m] = poly::mul(field, poly::sub(field, x, poly::constant(field, h(m - 1, m - 1))), p[m - 1]);
    auto t = field.one();
    for (std::size_t i = 1; i < m; ++i) {
      t = field.mul(t, h(m - i, m - i - 1));
      const auto c = field.mul(t, h(m - i - 1, m - 1));
      if (field.is_zero(c)) continue;
      p[m] = poly::sub(field, p[m], poly::scale(field, c, p[m - i - 1]));
    }
  }
  return p[n];
}

/// f(a) by Horner's rule.
template <class F>
MatrixOver<F> eval_poly(const F& field, const poly::Poly<F>& f, const MatrixOver<F>& a) {
  const std::size_t n = a.rows();
  auto acc = mat::zeros(field, n, n);
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    acc = mat::mul(field, acc, a);
    for (std::size_t i = 0; i < n; ++i) acc(i, i) = field.add(acc(i, i), *it);
  }
  return acc;
}

/// Subspace of F^n held as a reduced echelon basis.
template <class F>
class Subspace {
 public:
  Subspace(F field, std::size_t ambient) : field_(std::move(field)), n_(ambient) {}

  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<Vector<F>>& basis() const { return rows_; }

  /// Residue of v after elimination against the basis.
  Vector<F> reduce(Vector<F> v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const auto c = v[pivots_[r]];
      if (field_.is_zero(c)) continue;
      for (std::size_t j = 0; j < n_; ++j) v[j] = field_.sub(v[j], field_.mul(c, rows_[r][j]));
    }
    return v;
  }

  bool contains(const Vector<F>& v) const {
    const auto r = reduce(v);
    for (const auto& c : r)
      if (!field_.is_zero(c)) return false;
    return true;
  }

  /// Adds v; returns false when v was already in the span.
  bool insert(const Vector<F>& v) {
    auto r = reduce(v);
    std::size_t p = 0;
    while (p < n_ && field_.is_zero(r[p])) ++p;
    if (p == n_) return false;
    const auto inv = field_.inv(r[p]);
    for (auto& c : r) c = field_.mul(inv, c);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const auto c = rows_[i][p];
      if (field_.is_zero(c)) continue;
      for (std::size_t j = 0; j < n_; ++j) rows_[i][j] = field_.sub(rows_[i][j], field_.mul(c, r[j]));
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, p);
    rows_.insert(rows_.begin() + pos, std::move(r));
    return true;
  }

  MatrixOver<F> as_rows() const { return mat::from_rows(n_, rows_); }

 private:
  F field_;
  std::size_t n_;
  std::vector<Vector<F>> rows_;
  std::vector<std::size_t> pivots_;
};

/// Smallest subspace containing the seeds and stable under every matrix in
/// gens (acting on column vectors).
template <class F>
Subspace<F> spin(const F& field, const std::vector<MatrixOver<F>>& gens, const std::vector<Vector<F>>& seeds,
                 std::size_t ambient) {
  Subspace<F> s(field, ambient);
  std::deque<Vector<F>> queue;
  for (const auto& v : seeds)
    if (s.insert(v)) queue.push_back(v);
  while (!queue.empty() && s.dim() < ambient) {
    const auto v = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      auto w = mat::apply(field, g, v);
      if (s.insert(w)) queue.push_back(std::move(w));
    }
  }
  return s;
}

/// Annihilator {x : u . x = 0 for all u in basis} inside F^n.
template <class F>
std::vector<Vector<F>> annihilator(const F& field, const std::vector<Vector<F>>& basis, std::size_t n) {
  if (basis.empty()) {
    std::vector<Vector<F>> all;
    for (std::size_t i = 0; i < n; ++i) {
      Vector<F> e(n, field.zero());
      e[i] = field.one();
      all.push_back(std::move(e));
    }
    return all;
  }
  return kernel_basis(field, mat::from_rows(n, basis));
}

/// Whether span(basis) is mapped into itself by every generator.
template <class F>
bool is_invariant(const F& field, const std::vector<MatrixOver<F>>& gens, const std::vector<Vector<F>>& basis,
                  std::size_t n) {
  Subspace<F> s(field, n);
  for (const auto& v : basis) s.insert(v);
  for (const auto& g : gens)
    for (const auto& v : basis)
      if (!s.contains(mat::apply(field, g, v))) return false;
  return true;
}

}  // namespace irredcert::linalg
