#include <gtest/gtest.h>

#include "irredcert/lattice.hpp"

using namespace irredcert;

namespace {

const Rationals kQ;

template <class R>
Representation<R> load(const std::string& name) {
  return std::get<Representation<R>>(load_representation(std::string(IRREDCERT_DATA_DIR "/reps/") + name + ".json"));
}

RatMatrix rat(std::size_t r, std::size_t c, std::vector<std::string> v) {
  std::vector<mpq_class> d;
  for (const auto& s : v) d.push_back(kQ.parse(s));
  return RatMatrix(r, c, d);
}

RatMatrix random_invertible(Xoshiro256& rng, std::size_t d, long lo, long hi, unsigned max_den) {
  while (true) {
    std::vector<mpq_class> e;
    for (std::size_t i = 0; i < d * d; ++i) {
      e.emplace_back(rng.between(lo, hi), 1 + rng.below(max_den));
      e.back().canonicalize();
    }
    RatMatrix m(d, d, e);
    if (linalg::det(kQ, m) != 0) return m;
  }
}

IntMatrix random_unimodular(Xoshiro256& rng, std::size_t n) {
  IntMatrix u = mat::identity(Integers{}, n);
  for (int step = 0; step < 6; ++step) {
    const std::size_t i = rng.below(n), j = rng.below(n);
    if (i == j) continue;
    const long q = rng.between(-2, 2);
    for (std::size_t r = 0; r < n; ++r) u(r, i) += q * u(r, j);
  }
  return u;
}

}  // namespace

TEST(Saturate, IntegralRepKeepsStandardLattice) {
  const auto rep = load<Rationals>("s3_q");
  const auto sat = saturate(rep);
  EXPECT_EQ(sat.lat.basis, mat::identity(kQ, 2));
  EXPECT_TRUE(sat.lat.canonical);
  EXPECT_EQ(to_fraction_field(sat.int_rep).generators(), rep.generators());
}

TEST(Saturate, ConjugatedS3) {
  const auto rep = load<Rationals>("s3_q");
  const auto conj = conjugate(rep, rat(2, 2, {"1", "0", "0", "1/2"}));
  const auto sat = saturate(conj);
  // Hand computation: one round adds (0,1/2), the second round is stable.
  EXPECT_EQ(sat.lat.basis, rat(2, 2, {"1", "0", "0", "1/2"}));
  EXPECT_EQ(to_fraction_field(sat.int_rep).generators(), rep.generators());
}

TEST(Saturate, DivergentChainHitsBudget) {
  const Representation<Rationals> rep(kQ, 1, {rat(1, 1, {"1/2"})});
  EXPECT_THROW(saturate(rep), BudgetExceeded);
  EXPECT_THROW(saturate(rep, 5), BudgetExceeded);
}

TEST(Saturate, IdempotentOnConjugatedFiniteGroups) {
  Xoshiro256 rng(41);
  for (const char* name : {"s3_q", "d4_q", "s4_q", "q8_q"}) {
    const auto rep = load<Rationals>(name);
    for (int trial = 0; trial < 5; ++trial) {
      const auto conj = conjugate(rep, random_invertible(rng, rep.dim(), -3, 3, 3));
      const auto sat = saturate(conj);
      ASSERT_TRUE(is_stable(sat.lat.basis, conj.generators())) << name;
      const auto again = saturate(to_fraction_field(sat.int_rep));
      ASSERT_EQ(again.lat, LatticeBasis::standard(RingDescriptor::integers(), rep.dim())) << name;
      ASSERT_EQ(again.int_rep.generators(), sat.int_rep.generators());
    }
  }
}

TEST(Saturate, RationalFunctionsUseConstantLattices) {
  const auto rep = load<RationalFunctions>("s3_qt");
  const auto sat = saturate(rep);
  EXPECT_EQ(sat.lat.ring, RingDescriptor::poly_z());
  EXPECT_EQ(sat.lat.basis, mat::identity(kQ, 2));

  const RationalFunctions k;
  const auto g = mat::parse(k, {{"1", "1/2*t"}, {"0", "1"}});
  const auto s = saturate(Representation<RationalFunctions>(k, 2, {g}));
  EXPECT_EQ(s.lat.basis, rat(2, 2, {"1/2", "0", "0", "1"}));
  EXPECT_EQ(mat::format(s.int_rep.ring(), s.int_rep.generators()[0]),
            (std::vector<std::vector<std::string>>{{"1", "t"}, {"0", "1"}}));

  const auto bad = mat::parse(k, {{"1", "(1)/(t)"}, {"0", "1"}});
  EXPECT_THROW(saturate(Representation<RationalFunctions>(k, 2, {bad})), IntegralityError);
}

TEST(PrimeSpec, ParseAndFormat) {
  for (const char* s : {"(0)", "(5)", "(t-3)", "(t+3)", "(2,t-0)", "(3,t+1)"})
    EXPECT_EQ(PrimeSpec::parse(s).to_string(), s);
  EXPECT_EQ(PrimeSpec::parse("(t)").to_string(), "(t-0)");
  EXPECT_EQ(PrimeSpec::parse(" ( 2 , t - 1 ) ").to_string(), "(2,t-1)");
  EXPECT_THROW(PrimeSpec::parse("(6)"), NotPrime);
  EXPECT_THROW(PrimeSpec::parse("5"), ParseError);
  EXPECT_THROW(PrimeSpec::parse("(t*2)"), ParseError);
  EXPECT_EQ(PrimeSpec::integer(5).residue_field(RingDescriptor::integers()).to_string(), "GF(5)");
  EXPECT_EQ(PrimeSpec::zero().residue_field(RingDescriptor::poly_z()).to_string(), "Q(t)");
  EXPECT_EQ(PrimeSpec::linear(2).residue_field(RingDescriptor::poly_z()).to_string(), "Q");
  EXPECT_THROW(PrimeSpec::integer(5).residue_field(RingDescriptor::poly_z()), RingMismatch);
  EXPECT_THROW(PrimeSpec::linear(0).residue_field(RingDescriptor::integers()), RingMismatch);
}

TEST(Reduce, Examples) {
  const auto rep = load<Rationals>("s3_q");
  const auto sat = saturate(rep);
  const auto zero = std::get<Representation<Rationals>>(reduce(sat.int_rep, sat.lat, PrimeSpec::zero()));
  EXPECT_EQ(zero.generators(), rep.generators());

  const auto r3 = std::get<Representation<PrimeField>>(reduce(sat.int_rep, sat.lat, PrimeSpec::integer(3)));
  EXPECT_EQ(r3.generators()[0], (MatrixOver<PrimeField>(2, 2, std::vector<std::uint64_t>{0, 2, 1, 2})));
  EXPECT_EQ(r3.generators()[1], (MatrixOver<PrimeField>(2, 2, std::vector<std::uint64_t>{0, 1, 1, 0})));

  const auto satt = saturate(load<RationalFunctions>("s3_qt"));
  const auto r2 = std::get<Representation<PrimeField>>(reduce(satt.int_rep, satt.lat, PrimeSpec::maximal(2, 0)));
  EXPECT_EQ(r2.ring().characteristic(), 2u);
  EXPECT_EQ(r2.generators()[0], (MatrixOver<PrimeField>(2, 2, std::vector<std::uint64_t>{0, 1, 1, 1})));
  const auto at0 = std::get<Representation<Rationals>>(reduce(satt.int_rep, satt.lat, PrimeSpec::linear(0)));
  EXPECT_EQ(at0.generators(), rep.generators());

  EXPECT_THROW(reduce(sat.int_rep, satt.lat, PrimeSpec::integer(3)), RingMismatch);
}

TEST(Reduce, SingularReductionIsBadPrime) {
  const Representation<Rationals> rep(kQ, 2, {rat(2, 2, {"2", "0", "0", "1"})});
  const auto sat = saturate(rep);
  EXPECT_THROW(reduce(sat.int_rep, sat.lat, PrimeSpec::integer(2)), BadPrime);
  EXPECT_NO_THROW(reduce(sat.int_rep, sat.lat, PrimeSpec::integer(3)));

  const RationalFunctions k;
  const auto st = saturate(Representation<RationalFunctions>(k, 1, {mat::parse(k, {{"t+1"}})}));
  EXPECT_THROW(reduce(st.int_rep, st.lat, PrimeSpec::linear(-1)), BadPrime);
  EXPECT_THROW(reduce(st.int_rep, st.lat, PrimeSpec::maximal(3, 2)), BadPrime);
  EXPECT_NO_THROW(reduce(st.int_rep, st.lat, PrimeSpec::maximal(3, 1)));
}

TEST(Reduce, ZeroPrimeIsEquivalentOverK) {
  Xoshiro256 rng(5);
  for (const char* name : {"s3_q", "d4_q", "s4_q", "q8_q"}) {
    const auto rep = load<Rationals>(name);
    const auto conj = conjugate(rep, random_invertible(rng, rep.dim(), -3, 3, 4));
    const auto sat = saturate(conj);
    const auto red = std::get<Representation<Rationals>>(reduce(sat.int_rep, sat.lat, PrimeSpec::zero()));
    for (int i = 0; i < 30; ++i) {
      const auto w = random_word(rng, rep.generators().size(), rng.below(8));
      ASSERT_EQ(mat::trace(kQ, red.evaluate(w)), mat::trace(kQ, conj.evaluate(w))) << name;
    }
  }
}

TEST(Reduce, IsAHomomorphism) {
  Xoshiro256 rng(8);
  for (const char* name : {"s3_q", "d4_q", "s4_q", "q8_q"}) {
    const auto rep = load<Rationals>(name);
    const auto sat = saturate(conjugate(rep, random_invertible(rng, rep.dim(), -2, 2, 3)));
    for (std::uint64_t p : {2, 3, 5, 7}) {
      const auto red = std::get<Representation<PrimeField>>(reduce(sat.int_rep, sat.lat, PrimeSpec::integer(p)));
      const PrimeField fp(p);
      for (int i = 0; i < 50; ++i) {
        const auto w = random_word(rng, rep.generators().size(), rng.below(9));
        const auto direct = mat::map<std::uint64_t>(sat.int_rep.evaluate(w), [&](const mpz_class& a) {
          return fp.from_integer(a);
        });
        ASSERT_EQ(direct, red.evaluate(w)) << name << " mod " << p;
      }
    }
  }
}

TEST(IdealMult, Examples) {
  const auto l = LatticeBasis::standard(RingDescriptor::integers(), 3);
  EXPECT_EQ(ideal_mult(l, {2, 3}).basis, mat::scalar(kQ, 3, mpq_class(6)));
  EXPECT_EQ(ideal_mult(l, {1}), l);
  const auto l2 = LatticeBasis::spanned_by(RingDescriptor::integers(), rat(2, 2, {"1", "1/2", "0", "3"}));
  EXPECT_EQ(ideal_mult(l2, {4, 6}), scaled(l2, 12));
}

TEST(IdealMult, MatchesIntersectionOfScaledLattices) {
  Xoshiro256 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t d = 1 + rng.below(3);
    const auto l = LatticeBasis::spanned_by(RingDescriptor::integers(), random_invertible(rng, d, -4, 4, 3));
    std::vector<mpz_class> ns;
    for (int i = 0; i < 4; ++i) ns.emplace_back(rng.between(1, 12));
    auto acc = scaled(l, ns[0]);
    for (std::size_t i = 1; i < ns.size(); ++i) acc = intersect(acc, scaled(l, ns[i]));
    ASSERT_EQ(ideal_mult(l, ns).basis, acc.basis);
  }
}

TEST(Intersect, HandExample) {
  const auto a = LatticeBasis::spanned_by(RingDescriptor::integers(), rat(2, 2, {"2", "0", "0", "1"}));
  const auto b = LatticeBasis::spanned_by(RingDescriptor::integers(), rat(2, 2, {"1", "0", "1", "3"}));
  // a = {(x, y) : x even}; b = {(x, y) : y = x mod 3}.
  const auto c = intersect(a, b);
  EXPECT_TRUE(a.contains(c.basis));
  EXPECT_TRUE(b.contains(c.basis));
  EXPECT_EQ(abs(linalg::det(kQ, c.basis)), 6);
}

TEST(SublatticeImage, Examples) {
  const auto l = LatticeBasis::standard(RingDescriptor::integers(), 2);
  EXPECT_EQ(proper_sublattice_image(l, l, 3), SublatticeImage::Full);
  EXPECT_EQ(proper_sublattice_image(scaled(l, 3), l, 3), SublatticeImage::Zero);
  EXPECT_EQ(proper_sublattice_image(rat(2, 2, {"1", "0", "2", "3"}), l, 3), SublatticeImage::ProperNonzero);
  EXPECT_THROW(proper_sublattice_image(rat(2, 1, {"1/2", "0"}), l, 3), NotSublattice);
  // Index prime to p: the image is everything.
  EXPECT_EQ(proper_sublattice_image(scaled(l, 2), l, 3), SublatticeImage::Full);
}

TEST(SublatticeImage, StableSublatticesOfPPowerIndex) {
  // Lifts of the invariant line of S3 mod 3, and pure sublattices L cap W of
  // reducible representations plus p^k L.
  const auto l = LatticeBasis::standard(RingDescriptor::integers(), 2);
  const auto s3 = load<Rationals>("s3_q");
  const auto m = lattice::canonical_span(rat(2, 3, {"1", "3", "0", "2", "0", "3"}));
  ASSERT_TRUE(is_stable(m, s3.generators()));
  EXPECT_EQ(proper_sublattice_image(m, l, 3), SublatticeImage::ProperNonzero);

  Xoshiro256 rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t d = 2 + rng.below(2);
    auto g = mat::zeros(Integers{}, d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i; j < d; ++j) g(i, j) = i == j ? (rng.below(2) ? 1 : -1) : rng.between(-3, 3);
    const auto u = random_unimodular(rng, d);
    const Integers z;
    const auto ui = nf::to_integer(linalg::inverse(kQ, nf::to_rational(u)));
    const auto gen = nf::to_rational(mat::mul(z, mat::mul(z, u, g), ui));
    // g is upper triangular, so u e_1 spans an invariant line.
    const auto w = mat::column(nf::to_rational(u), 0);
    const auto ld = LatticeBasis::standard(RingDescriptor::integers(), d);
    const auto lw = sublattice_from_subspace(ld, {w});
    const std::uint64_t p = std::vector<std::uint64_t>{2, 3, 5}[rng.below(3)];
    const auto mm = lattice::canonical_span(mat::hstack(lw, scaled(ld, pow(mpz_class(p), 1 + rng.below(3))).basis));
    ASSERT_TRUE(is_stable(mm, {gen}));
    ASSERT_NE(mm, ld.basis);
    ASSERT_EQ(proper_sublattice_image(mm, ld, p), SublatticeImage::ProperNonzero);
  }
}
