#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "irredcert/error.hpp"
#include "irredcert/linalg.hpp"
#include "irredcert/meataxe.hpp"
#include "irredcert/representation.hpp"

namespace irredcert {

inline constexpr std::size_t kDefaultGroupBound = 64;
inline constexpr std::size_t kMaxC2 = 4096;
inline constexpr std::size_t kMaxC3 = std::size_t{1} << 17;

/// A finite matrix group with its multiplication table. Element 0 is the
/// identity; element i != 0 equals element parent[i] times generator
/// via[i], which lets any module on the same generators be evaluated.
template <class F>
struct FiniteGroupTable {
  F field;
  std::vector<MatrixOver<F>> elements;
  std::vector<std::vector<std::size_t>> mult;
  std::vector<std::size_t> inverse;
  std::vector<std::size_t> generators;
  std::vector<std::size_t> parent;
  std::vector<std::size_t> via;

  std::size_t order() const { return elements.size(); }
};

template <class F>
FiniteGroupTable<F> close_group(const Representation<F>& rep, std::size_t bound = kDefaultGroupBound) {
  static_assert(F::is_finite, "group closure needs a finite field");
  const F& field = rep.ring();
  const auto& gens = rep.generators();
  auto key = [&](const MatrixOver<F>& m) {
    std::vector<std::uint64_t> k;
    for (const auto& x : m.data()) k.push_back(field.index_of(x));
    return k;
  };
  FiniteGroupTable<F> t{field, {}, {}, {}, {}, {}, {}};
  std::map<std::vector<std::uint64_t>, std::size_t> index;
  auto add = [&](MatrixOver<F> m, std::size_t parent, std::size_t via) {
    auto [it, fresh] = index.emplace(key(m), t.elements.size());
    if (!fresh) return it->second;
    if (t.elements.size() >= bound)
      throw GroupTooLarge("generated group has more than " + std::to_string(bound) + " elements");
    t.elements.push_back(std::move(m));
    t.parent.push_back(parent);
    t.via.push_back(via);
    return it->second;
  };
  add(mat::identity(field, rep.dim()), 0, 0);
  for (std::size_t i = 0; i < t.elements.size(); ++i)
    for (std::size_t g = 0; g < gens.size(); ++g) add(mat::mul(field, t.elements[i], gens[g]), i, g);
  for (std::size_t g = 0; g < gens.size(); ++g) t.generators.push_back(index.at(key(gens[g])));
  const std::size_t n = t.elements.size();
  t.mult.assign(n, std::vector<std::size_t>(n));
  t.inverse.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      t.mult[i][j] = index.at(key(mat::mul(field, t.elements[i], t.elements[j])));
      if (t.mult[i][j] == 0) t.inverse[i] = j;
    }
  return t;
}

/// Matrices of every group element acting on a module given by images of
/// the same generators. Throws ModuleMismatch unless this is a
/// homomorphism on the table.
template <class F>
std::vector<MatrixOver<F>> module_matrices(const FiniteGroupTable<F>& t, const Representation<F>& module) {
  const F& field = module.ring();
  if (module.generators().size() != t.generators.size())
    throw ModuleMismatch("module and group have different generator counts");
  if (field.descriptor().to_string() != t.field.descriptor().to_string()) throw ModuleMismatch("module and group use different fields");
  std::vector<MatrixOver<F>> m{mat::identity(field, module.dim())};
  for (std::size_t i = 1; i < t.order(); ++i)
    m.push_back(mat::mul(field, m[t.parent[i]], module.generators()[t.via[i]]));
  for (std::size_t i = 0; i < t.order(); ++i)
    for (std::size_t j = 0; j < t.order(); ++j)
      if (!(mat::mul(field, m[i], m[j]) == m[t.mult[i][j]]))
        throw ModuleMismatch("module does not factor through the group");
  return m;
}

struct CohomologyDims {
  std::size_t d0 = 0, d1 = 0, d2 = 0;
  std::size_t rank0 = 0, rank1 = 0, rank2 = 0;  // ranks of d^0, d^1, d^2
  friend bool operator==(const CohomologyDims&, const CohomologyDims&) = default;
};

/// Inhomogeneous cochains C^k = maps G^k -> M, stored with index
/// ((g_1 n + g_2) n + ...) m + i, and the left-action differentials
///   d0 x (g)        = g x - x
///   d1 f (g, h)     = g f(h) - f(gh) + f(g)
///   d2 f (g, h, k)  = g f(h, k) - f(gh, k) + f(g, hk) - f(g, h).
template <class F>
class BarComplex {
 public:
  BarComplex(const FiniteGroupTable<F>& t, const Representation<F>& module)
      : t_(t), field_(module.ring()), act_(module_matrices(t, module)), n_(t.order()), m_(module.dim()) {}

  std::size_t group_order() const { return n_; }
  std::size_t module_dim() const { return m_; }
  std::size_t cochain_dim(int k) const {
    std::size_t s = m_;
    for (int i = 0; i < k; ++i) s *= n_;
    return s;
  }

  Vector<F> d0(const Vector<F>& x) const {
    Vector<F> out(cochain_dim(1), field_.zero());
    for (std::size_t g = 0; g < n_; ++g) {
      const auto gx = mat::apply(field_, act_[g], x);
      for (std::size_t i = 0; i < m_; ++i) out[g * m_ + i] = field_.sub(gx[i], x[i]);
    }
    return out;
  }

  Vector<F> d1(const Vector<F>& f) const {
    Vector<F> out(cochain_dim(2), field_.zero());
    for (std::size_t g = 0; g < n_; ++g)
      for (std::size_t h = 0; h < n_; ++h) {
        const auto gfh = mat::apply(field_, act_[g], slice(f, h));
        const std::size_t gh = t_.mult[g][h];
        for (std::size_t i = 0; i < m_; ++i)
          out[(g * n_ + h) * m_ + i] = field_.add(field_.sub(gfh[i], f[gh * m_ + i]), f[g * m_ + i]);
      }
    return out;
  }

  Vector<F> d2(const Vector<F>& f) const {
    Vector<F> out(cochain_dim(3), field_.zero());
    for (std::size_t g = 0; g < n_; ++g)
      for (std::size_t h = 0; h < n_; ++h)
        for (std::size_t k = 0; k < n_; ++k) {
          const auto gf = mat::apply(field_, act_[g], slice(f, h * n_ + k));
          const std::size_t gh = t_.mult[g][h], hk = t_.mult[h][k];
          for (std::size_t i = 0; i < m_; ++i) {
            auto v = field_.sub(gf[i], f[(gh * n_ + k) * m_ + i]);
            v = field_.add(v, f[(g * n_ + hk) * m_ + i]);
            out[((g * n_ + h) * n_ + k) * m_ + i] = field_.sub(v, f[(g * n_ + h) * m_ + i]);
          }
        }
    return out;
  }

  /// Matrix of d^k (k = 0 or 1), built column by column.
  MatrixOver<F> matrix(int k) const {
    const std::size_t cols = cochain_dim(k), rows = cochain_dim(k + 1);
    auto out = mat::zeros(field_, rows, cols);
    for (std::size_t j = 0; j < cols; ++j) {
      Vector<F> e(cols, field_.zero());
      e[j] = field_.one();
      const auto img = k == 0 ? d0(e) : d1(e);
      for (std::size_t i = 0; i < rows; ++i) out(i, j) = img[i];
    }
    return out;
  }

  /// Rank of d^2 by streaming its rows into an echelon basis; stops once the
  /// rank reaches cap.
  std::size_t rank_d2(std::size_t cap) const {
    const std::size_t cols = cochain_dim(2);
    linalg::Subspace<F> s(field_, cols);
    for (std::size_t g = 0; g < n_ && s.dim() < cap; ++g)
      for (std::size_t h = 0; h < n_ && s.dim() < cap; ++h)
        for (std::size_t k = 0; k < n_ && s.dim() < cap; ++k) {
          const std::size_t gh = t_.mult[g][h], hk = t_.mult[h][k];
          for (std::size_t i = 0; i < m_ && s.dim() < cap; ++i) {
            Vector<F> row(cols, field_.zero());
            for (std::size_t j = 0; j < m_; ++j) row[(h * n_ + k) * m_ + j] = act_[g](i, j);
            auto bump = [&](std::size_t idx, bool plus) {
              row[idx] = plus ? field_.add(row[idx], field_.one()) : field_.sub(row[idx], field_.one());
            };
            bump((gh * n_ + k) * m_ + i, false);
            bump((g * n_ + hk) * m_ + i, true);
            bump((g * n_ + h) * m_ + i, false);
            s.insert(row);
          }
        }
    return s.dim();
  }

 private:
  Vector<F> slice(const Vector<F>& f, std::size_t block) const {
    return Vector<F>(f.begin() + block * m_, f.begin() + (block + 1) * m_);
  }

  const FiniteGroupTable<F>& t_;
  F field_;
  std::vector<MatrixOver<F>> act_;
  std::size_t n_, m_;
};

template <class F>
CohomologyDims cohomology_dims(const FiniteGroupTable<F>& t, const Representation<F>& module) {
  const std::size_t n = t.order(), m = module.dim();
  if (n * n * m > kMaxC2 || n * n * n * m > kMaxC3)
    throw SizeBound("cochain spaces too large: |G| = " + std::to_string(n) + ", dim M = " + std::to_string(m));
  const BarComplex<F> bar(t, module);
  const F& field = module.ring();
  CohomologyDims r;
  r.rank0 = linalg::rank(field, bar.matrix(0));
  r.rank1 = linalg::rank(field, bar.matrix(1));
  // im d^1 lies in ker d^2, so rank d^2 <= dim C^2 - rank d^1.
  r.rank2 = bar.rank_d2(n * n * m - r.rank1);
  r.d0 = m - r.rank0;
  r.d1 = n * m - r.rank1 - r.rank0;
  r.d2 = n * n * m - r.rank2 - r.rank1;
  return r;
}

/// Exact checks d1 d0 = 0 and d2 d1 = 0 on basis cochains.
template <class F>
bool is_complex(const FiniteGroupTable<F>& t, const Representation<F>& module) {
  const BarComplex<F> bar(t, module);
  const F& field = module.ring();
  auto all_zero = [&](const Vector<F>& v) {
    for (const auto& x : v)
      if (!field.is_zero(x)) return false;
    return true;
  };
  for (std::size_t j = 0; j < bar.cochain_dim(0); ++j) {
    Vector<F> e(bar.cochain_dim(0), field.zero());
    e[j] = field.one();
    if (!all_zero(bar.d1(bar.d0(e)))) return false;
  }
  for (std::size_t j = 0; j < bar.cochain_dim(1); ++j) {
    Vector<F> e(bar.cochain_dim(1), field.zero());
    e[j] = field.one();
    if (!all_zero(bar.d2(bar.d1(e)))) return false;
  }
  return true;
}

struct ObstructionReport {
  std::size_t group_order = 0;
  std::size_t d0 = 0, d1 = 0, d2 = 0;
  std::size_t schur_dim = 0;
  bool unobstructed = false;
  std::optional<std::string> predicted_ring;
  Verdict meataxe = Verdict::Inconclusive;
  bool irreducible_deformation = false;
};

inline std::string power_series_ring(std::size_t vars) {
  if (vars == 0) return "Λ";
  std::string s = "Λ[[";
  for (std::size_t i = 1; i <= vars; ++i) s += (i > 1 ? "," : "") + std::string("x_") + std::to_string(i);
  return s + "]]";
}

/// H^0, H^1, H^2 of the group with coefficients in ad(rep), the commutant
/// dimension, and the resulting unobstructedness data.
template <class F>
ObstructionReport obstruction_report(const Representation<F>& rep, const MeataxeConfig& cfg = {},
                                     std::size_t bound = kDefaultGroupBound) {
  const auto t = close_group(rep, bound);
  const auto dims = cohomology_dims(t, adjoint_rep(rep));
  ObstructionReport r;
  r.group_order = t.order();
  r.d0 = dims.d0;
  r.d1 = dims.d1;
  r.d2 = dims.d2;
  r.schur_dim = endo_dim(rep);
  r.unobstructed = r.d2 == 0;
  if (r.unobstructed && r.schur_dim == 1) r.predicted_ring = power_series_ring(r.d1);
  r.meataxe = is_irreducible(rep, cfg).status;
  r.irreducible_deformation = r.predicted_ring.has_value() && r.meataxe == Verdict::Irreducible;
  return r;
}

inline nlohmann::json to_json(const ObstructionReport& r) {
  nlohmann::json out = {{"group_order", r.group_order},
                        {"d0", r.d0},
                        {"d1", r.d1},
                        {"d2", r.d2},
                        {"schur_dim", r.schur_dim},
                        {"unobstructed", r.unobstructed},
                        {"meataxe", to_string(r.meataxe)},
                        {"universal_deformation_irreducible", r.irreducible_deformation}};
  out["predicted_ring"] = r.predicted_ring ? nlohmann::json(*r.predicted_ring) : nlohmann::json(nullptr);
  return out;
}

}  // namespace irredcert
