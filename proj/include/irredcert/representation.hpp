#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "irredcert/error.hpp"
#include "irredcert/fraction.hpp"
#include "irredcert/linalg.hpp"
#include "irredcert/matrix.hpp"
#include "irredcert/random.hpp"

namespace irredcert {

/// One factor of a word: generator index and exponent +1 or -1.
struct Letter {
  std::size_t gen = 0;
  int exp = 1;
  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

inline Word concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline Word random_word(Xoshiro256& rng, std::size_t generators, std::size_t length, bool allow_inverse = true) {
  Word w;
  for (std::size_t i = 0; i < length; ++i)
    w.push_back({static_cast<std::size_t>(rng.below(generators)), allow_inverse && rng.below(2) ? -1 : 1});
  return w;
}

/// A group action on R^d given by generator matrices.
///
/// Generators are invertible over the fraction field of R. Inverses are
/// cached when they have entries in R; words using a missing inverse throw
/// IntegralityError. Relations are checked at construction over the
/// fraction field.
template <class R>
class Representation {
 public:
  using Ring = R;
  using Mat = MatrixOver<R>;

  Representation(R ring, std::size_t dim, std::vector<Mat> generators, std::vector<Word> relations = {},
                 std::string label = {})
      : ring_(std::move(ring)),
        dim_(dim),
        gens_(std::move(generators)),
        relations_(std::move(relations)),
        label_(std::move(label)) {
    if (dim_ == 0) throw ShapeError("representation dimension must be at least 1");
    if (gens_.empty()) throw ShapeError("representation needs at least one generator");
    const auto k = Fraction<R>::field(ring_);
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      const auto& g = gens_[i];
      if (g.rows() != dim_ || g.cols() != dim_)
        throw ShapeError("generator " + std::to_string(i) + " is not " + std::to_string(dim_) + "x" +
                         std::to_string(dim_));
      const auto gk = embed_matrix(ring_, g);
      try {
        inverses_.push_back(restrict_matrix(ring_, linalg::inverse(k, gk)));
      } catch (const SingularError&) {
        throw SingularError("generator " + std::to_string(i) + " is singular");
      }
    }
    for (std::size_t r = 0; r < relations_.size(); ++r) {
      for (const auto& l : relations_[r])
        if (l.gen >= gens_.size() || (l.exp != 1 && l.exp != -1))
          throw RelationError("relation " + std::to_string(r) + " has an invalid letter");
      if (!mat::is_identity(k, evaluate_over_fraction(relations_[r])))
        throw RelationError("relation " + std::to_string(r) + " does not evaluate to the identity");
    }
  }

  const R& ring() const { return ring_; }
  std::size_t dim() const { return dim_; }
  const std::vector<Mat>& generators() const { return gens_; }
  const std::vector<Word>& relations() const { return relations_; }
  const std::string& label() const { return label_; }

  /// Inverse of generator i if it has entries in R.
  const std::optional<Mat>& inverse(std::size_t i) const { return inverses_.at(i); }

  Mat evaluate(const Word& w) const {
    Mat acc = mat::identity(ring_, dim_);
    for (const auto& l : w) {
      if (l.gen >= gens_.size()) throw ShapeError("word letter out of range");
      if (l.exp == 1) {
        acc = mat::mul(ring_, acc, gens_[l.gen]);
      } else {
        const auto& inv = inverses_[l.gen];
        if (!inv) throw IntegralityError("inverse of generator " + std::to_string(l.gen) + " is not over the ring");
        acc = mat::mul(ring_, acc, *inv);
      }
    }
    return acc;
  }

  MatrixOver<FractionField<R>> evaluate_over_fraction(const Word& w) const {
    const auto k = Fraction<R>::field(ring_);
    auto acc = mat::identity(k, dim_);
    for (const auto& l : w) {
      auto g = embed_matrix(ring_, gens_.at(l.gen));
      acc = mat::mul(k, acc, l.exp == 1 ? g : linalg::inverse(k, g));
    }
    return acc;
  }

 private:
  R ring_;
  std::size_t dim_;
  std::vector<Mat> gens_;
  std::vector<std::optional<Mat>> inverses_;
  std::vector<Word> relations_;
  std::string label_;
};

template <class R>
MatrixOver<R> evaluate(const Representation<R>& rep, const Word& w) {
  return rep.evaluate(w);
}

/// Same generators viewed over the fraction field.
template <class R>
Representation<FractionField<R>> to_fraction_field(const Representation<R>& rep) {
  std::vector<MatrixOver<FractionField<R>>> gens;
  for (const auto& g : rep.generators()) gens.push_back(embed_matrix(rep.ring(), g));
  return {Fraction<R>::field(rep.ring()), rep.dim(), std::move(gens), rep.relations(), rep.label()};
}

/// Generators replaced by c g c^-1.
template <class F>
Representation<F> conjugate(const Representation<F>& rep, const MatrixOver<F>& c) {
  static_assert(F::is_field);
  const auto& k = rep.ring();
  if (c.rows() != rep.dim() || c.cols() != rep.dim()) throw ShapeError("conjugating matrix has the wrong shape");
  const auto ci = linalg::inverse(k, c);
  std::vector<MatrixOver<F>> gens;
  for (const auto& g : rep.generators()) gens.push_back(mat::mul(k, mat::mul(k, c, g), ci));
  return {k, rep.dim(), std::move(gens), rep.relations(), rep.label()};
}

/// Conjugation action X -> g X g^-1 on d x d matrices, flattened row-major:
/// ad(g) = g (x) (g^-1)^T.
template <class F>
Representation<F> adjoint_rep(const Representation<F>& rep) {
  static_assert(F::is_field);
  const auto& k = rep.ring();
  std::vector<MatrixOver<F>> gens;
  for (std::size_t i = 0; i < rep.generators().size(); ++i)
    gens.push_back(mat::kron(k, rep.generators()[i], mat::transpose(*rep.inverse(i))));
  std::string label = rep.label().empty() ? "" : "ad(" + rep.label() + ")";
  return {k, rep.dim() * rep.dim(), std::move(gens), rep.relations(), std::move(label)};
}

/// Generator-wise block sum. Relations are kept only when both sides carry
/// the same list.
template <class R>
Representation<R> direct_sum(const Representation<R>& a, const Representation<R>& b) {
  if (a.generators().size() != b.generators().size())
    throw ShapeError("direct sum needs the same number of generators");
  std::vector<MatrixOver<R>> gens;
  for (std::size_t i = 0; i < a.generators().size(); ++i)
    gens.push_back(mat::block_diag(a.ring(), a.generators()[i], b.generators()[i]));
  auto rel = a.relations() == b.relations() ? a.relations() : std::vector<Word>{};
  return {a.ring(), a.dim() + b.dim(), std::move(gens), std::move(rel), {}};
}

/// The representation sending every generator to the identity.
template <class R>
Representation<R> trivial_rep(const R& ring, std::size_t dim, std::size_t generators) {
  return {ring, dim, std::vector<MatrixOver<R>>(generators, mat::identity(ring, dim)), {}, "trivial"};
}

}  // namespace irredcert
