#include <gtest/gtest.h>

#include <cstdint>
#include <cstdlib>
#include <vector>

#include "irredcert/factor.hpp"
#include "irredcert/linalg.hpp"
#include "irredcert/normal_form.hpp"
#include "irredcert/scalar.hpp"

using namespace irredcert;
using nf::IntMatrix;

namespace {

IntMatrix int_matrix(std::size_t r, std::size_t c, std::vector<long> v) {
  std::vector<mpz_class> d(v.begin(), v.end());
  return IntMatrix(r, c, d);
}

MatrixOver<Rationals> q_matrix(std::size_t r, std::size_t c, std::vector<std::string> v) {
  const Rationals q;
  std::vector<mpq_class> d;
  for (auto& s : v) d.push_back(q.parse(s));
  return MatrixOver<Rationals>(r, c, d);
}

// Oracle: column echelon form by Euclid-by-subtraction on 64-bit integers,
// recording every elementary column operation and checking each one has
// determinant +-1.
struct NaiveHnf {
  std::vector<std::vector<long>> a;  // a[i][j]
  int ops = 0;
  void swap_cols(std::size_t x, std::size_t y) {
    for (auto& row : a) std::swap(row[x], row[y]);
    ++ops;  // permutation, det -1
  }
  void sub_col(std::size_t dst, std::size_t src, long q) {
    for (auto& row : a) row[dst] -= q * row[src];
    ++ops;  // shear, det 1
  }
  void neg_col(std::size_t c) {
    for (auto& row : a) row[c] = -row[c];
    ++ops;  // det -1
  }
  void run() {
    const std::size_t rows = a.size(), cols = a[0].size();
    std::size_t k = 0;
    for (std::size_t i = 0; i < rows && k < cols; ++i) {
      while (true) {
        std::size_t best = cols;
        for (std::size_t j = k; j < cols; ++j)
          if (a[i][j] != 0 && (best == cols || std::labs(a[i][j]) < std::labs(a[i][best]))) best = j;
        if (best == cols) break;
        if (best != k) swap_cols(best, k);
        bool done = true;
        for (std::size_t j = k + 1; j < cols; ++j)
          if (a[i][j] != 0) {
            sub_col(j, k, a[i][j] / a[i][k]);
            done = false;
          }
        if (done) break;
      }
      if (a[i][k] == 0) continue;
      if (a[i][k] < 0) neg_col(k);
      for (std::size_t l = 0; l < k; ++l) {
        long q = a[i][l] / a[i][k];
        if (a[i][l] - q * a[i][k] < 0) --q;
        if (q != 0) sub_col(l, k, q);
      }
      ++k;
    }
  }
};

// Oracle for det(xI - m): cofactor expansion over Q[x].
poly::Poly<Rationals> cofactor_char_poly(const MatrixOver<Rationals>& m) {
  const Rationals q;
  const std::size_t n = m.rows();
  std::vector<std::vector<poly::Poly<Rationals>>> e(n, std::vector<poly::Poly<Rationals>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      e[i][j] = poly::constant(q, -m(i, j));
      if (i == j) e[i][j] = poly::add(q, e[i][j], poly::x(q));
    }
  std::function<poly::Poly<Rationals>(std::vector<std::size_t>, std::size_t)> rec =
      [&](std::vector<std::size_t> cols, std::size_t row) -> poly::Poly<Rationals> {
    if (cols.empty()) return poly::constant(q, q.one());
    poly::Poly<Rationals> acc;
    for (std::size_t k = 0; k < cols.size(); ++k) {
      auto rest = cols;
      rest.erase(rest.begin() + k);
      auto term = poly::mul(q, e[row][cols[k]], rec(rest, row + 1));
      acc = (k % 2 == 0) ? poly::add(q, acc, term) : poly::sub(q, acc, term);
    }
    return acc;
  };
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  return rec(all, 0);
}

IntMatrix random_unimodular(Xoshiro256& rng, std::size_t n) {
  IntMatrix u = mat::identity(Integers{}, n);
  for (int step = 0; step < 8; ++step) {
    const std::size_t i = rng.below(n), j = rng.below(n);
    if (i == j) continue;
    const long q = rng.between(-2, 2);
    for (std::size_t r = 0; r < n; ++r) u(r, i) += q * u(r, j);
  }
  return u;
}

}  // namespace

TEST(Primality, DeterministicBelowBound) {
  EXPECT_TRUE(is_prime(std::uint64_t{2}));
  EXPECT_TRUE(is_prime(std::uint64_t{1000003}));
  EXPECT_FALSE(is_prime(std::uint64_t{1}));
  EXPECT_FALSE(is_prime(std::uint64_t{561}));          // Carmichael
  EXPECT_FALSE(is_prime(std::uint64_t{3215031751}));   // strong pseudoprime to 2,3,5,7
  EXPECT_TRUE(is_prime(std::uint64_t{2147483647}));
  EXPECT_THROW(is_prime(mpz_class{"341550071728361"}), NotPrime);
  EXPECT_THROW(PrimeField{9}, NotPrime);
}

TEST(Hnf, IdentityIsFixed) {
  const auto hf = nf::hnf(int_matrix(2, 2, {1, 0, 0, 1}));
  EXPECT_EQ(hf.h, int_matrix(2, 2, {1, 0, 0, 1}));
  EXPECT_EQ(hf.transform, int_matrix(2, 2, {1, 0, 0, 1}));
}

TEST(Hnf, MatchesNaiveColumnReduction) {
  NaiveHnf oracle{{{2, 4}, {4, 2}}};
  oracle.run();
  // Frozen from the oracle run.
  ASSERT_EQ(oracle.a, (std::vector<std::vector<long>>{{2, 0}, {4, 6}}));
  const IntMatrix m = int_matrix(2, 2, {2, 4, 4, 2});
  const auto hf = nf::hnf(m);
  EXPECT_EQ(hf.h, int_matrix(2, 2, {2, 0, 4, 6}));
  EXPECT_EQ(mat::mul(Integers{}, m, hf.transform), hf.h);
  const Rationals q;
  EXPECT_EQ(abs(linalg::det(q, nf::to_rational(hf.transform)).get_num()), 1);
}

TEST(Hnf, ScalarLattice) {
  EXPECT_EQ(nf::hnf(int_matrix(2, 2, {3, 0, 0, 3})).h, int_matrix(2, 2, {3, 0, 0, 3}));
}

TEST(Hnf, RejectsNonIntegralInput) {
  EXPECT_THROW(nf::to_integer(q_matrix(1, 1, {"1/2"})), IntegralityError);
}

TEST(Hnf, CanonicalUnderUnimodularChange) {
  Xoshiro256 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix m(3, 3, mpz_class{0});
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = rng.between(-5, 5);
    const IntMatrix u = random_unimodular(rng, 3);
    const auto a = nf::hnf(m);
    const auto b = nf::hnf(mat::mul(Integers{}, m, u));
    ASSERT_EQ(a.h, b.h) << "trial " << trial;
    ASSERT_EQ(mat::mul(Integers{}, m, a.transform), a.h);
  }
}

TEST(Snf, Examples) {
  EXPECT_EQ(nf::snf(int_matrix(2, 2, {1, 0, 0, 1})).d, int_matrix(2, 2, {1, 0, 0, 1}));
  EXPECT_EQ(nf::snf(int_matrix(2, 2, {2, 4, 4, 2})).d, int_matrix(2, 2, {2, 0, 0, 6}));
  EXPECT_EQ(nf::snf(int_matrix(2, 3, {0, 0, 0, 0, 0, 0})).d, int_matrix(2, 3, {0, 0, 0, 0, 0, 0}));
}

TEST(Snf, DivisibilityChainAndDeterminant) {
  Xoshiro256 rng(11);
  const Integers z;
  const Rationals q;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng.below(4);
    IntMatrix m(n, n, mpz_class{0});
    for (auto i = 0u; i < n; ++i)
      for (auto j = 0u; j < n; ++j) m(i, j) = rng.between(-6, 6);
    const auto s = nf::snf(m);
    ASSERT_EQ(mat::mul(z, mat::mul(z, s.left, m), s.right), s.d);
    for (std::size_t i = 0; i + 1 < n; ++i)
      if (s.d(i, i) != 0) {
        ASSERT_TRUE(mpz_divisible_p(s.d(i + 1, i + 1).get_mpz_t(), s.d(i, i).get_mpz_t()));
      } else {
        ASSERT_EQ(s.d(i + 1, i + 1), 0);
      }
    mpz_class prod = 1;
    for (std::size_t i = 0; i < n; ++i) prod *= s.d(i, i);
    const mpq_class det = linalg::det(q, nf::to_rational(m));
    ASSERT_EQ(mpq_class(prod), abs(det));
    ASSERT_EQ(abs(linalg::det(q, nf::to_rational(s.left))), 1);
    ASSERT_EQ(abs(linalg::det(q, nf::to_rational(s.right))), 1);
  }
}

TEST(CharPoly, Examples) {
  const PrimeField f5(5);
  const auto id = mat::identity(f5, 2);
  // (x-1)^2 = x^2 - 2x + 1 = x^2 + 3x + 1 over F_5
  EXPECT_EQ(linalg::char_poly(f5, id), (std::vector<std::uint64_t>{1, 3, 1}));

  const Rationals q;
  const auto m = q_matrix(2, 2, {"0", "-1", "1", "-1"});
  EXPECT_EQ(poly::format(q, linalg::char_poly(q, m), "x"), "x^2+x+1");
  EXPECT_TRUE(poly::equal(q, linalg::char_poly(q, m), cofactor_char_poly(m)));

  const auto diag = q_matrix(2, 2, {"2/3", "0", "0", "-5"});
  const auto expected = poly::mul(q, poly::Poly<Rationals>{mpq_class(-2, 3), 1}, poly::Poly<Rationals>{5, 1});
  EXPECT_TRUE(poly::equal(q, linalg::char_poly(q, diag), expected));
  EXPECT_THROW(linalg::char_poly(q, q_matrix(1, 2, {"1", "2"})), ShapeError);
}

TEST(CharPoly, AgreesWithCofactorOracleAndSimilarity) {
  Xoshiro256 rng(3);
  const Rationals q;
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng.below(5);
    auto m = mat::zeros(q, n, n);
    auto p = mat::zeros(q, n, n);
    for (auto i = 0u; i < n; ++i)
      for (auto j = 0u; j < n; ++j) {
        m(i, j) = rng.between(-4, 4);
        p(i, j) = rng.between(-3, 3);
      }
    const auto cp = linalg::char_poly(q, m);
    ASSERT_TRUE(poly::equal(q, cp, cofactor_char_poly(m)));
    if (q.is_zero(linalg::det(q, p))) continue;
    const auto conj = mat::mul(q, mat::mul(q, p, m), linalg::inverse(q, p));
    ASSERT_TRUE(poly::equal(q, cp, linalg::char_poly(q, conj)));
  }
}

TEST(Kernel, Examples) {
  const Rationals q;
  EXPECT_TRUE(linalg::kernel_basis(q, mat::identity(q, 3)).empty());
  const PrimeField f3(3);
  EXPECT_EQ(linalg::kernel_basis(f3, mat::zeros(f3, 2, 2)),
            (std::vector<std::vector<std::uint64_t>>{{1, 0}, {0, 1}}));
  const auto k = linalg::kernel_basis(q, q_matrix(2, 2, {"1", "1", "2", "2"}));
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0], (std::vector<mpq_class>{-1, 1}));
}

template <class F>
void check_field_axioms(const F& field, Xoshiro256& rng) {
  for (int i = 0; i < 1000; ++i) {
    const auto a = field.random(rng), b = field.random(rng), c = field.random(rng);
    ASSERT_TRUE(field.equal(field.mul(field.mul(a, b), c), field.mul(a, field.mul(b, c))));
    ASSERT_TRUE(field.equal(field.mul(a, field.add(b, c)), field.add(field.mul(a, b), field.mul(a, c))));
    if (!field.is_zero(a)) ASSERT_TRUE(field.equal(field.mul(a, field.inv(a)), field.one()));
  }
}

TEST(Fields, AxiomsSpotChecked) {
  Xoshiro256 rng(99);
  check_field_axioms(PrimeField(2), rng);
  check_field_axioms(PrimeField(1000003), rng);
  check_field_axioms(PrimeField(281474976710597ULL), rng);
  check_field_axioms(ExtensionField(2, smallest_irreducible(2, 8)), rng);
  check_field_axioms(ExtensionField(3, {2, 2, 1}), rng);
  check_field_axioms(ExtensionField(2147483629ULL, smallest_irreducible(2147483629ULL, 2)), rng);

  const Rationals q;
  const RationalFunctions qt;
  for (int i = 0; i < 1000; ++i) {
    mpq_class a(rng.between(-50, 50), 1 + rng.below(20)), b(rng.between(-50, 50), 1 + rng.below(20));
    a.canonicalize();
    b.canonicalize();
    ASSERT_EQ(q.mul(q.mul(a, b), a), q.mul(a, q.mul(b, a)));
    if (a != 0) ASSERT_EQ(q.mul(a, q.inv(a)), 1);
  }
  for (int i = 0; i < 200; ++i) {
    const auto a = qt.make({mpq_class(rng.between(-3, 3)), mpq_class(rng.between(-3, 3))},
                           {mpq_class(rng.between(1, 3)), mpq_class(rng.between(0, 2))});
    const auto b = qt.from_poly({mpq_class(rng.between(-3, 3)), 0, 1});
    ASSERT_TRUE(qt.equal(qt.mul(qt.mul(a, b), a), qt.mul(a, qt.mul(b, a))));
    if (!qt.is_zero(a)) ASSERT_TRUE(qt.equal(qt.mul(a, qt.inv(a)), qt.one()));
  }
}

TEST(Fields, ExtensionModulusMustBeIrreducible) {
  EXPECT_THROW(ExtensionField(2, {1, 0, 1}), NotIrreducible);  // x^2+1 = (x+1)^2
  EXPECT_NO_THROW(ExtensionField(2, {1, 1, 1}));
  EXPECT_THROW(ExtensionField(5, {2, 0, 0, 0, 0, 0, 0, 0, 0, 1}), Error);  // degree 9
  EXPECT_EQ(smallest_irreducible(2, 2), (std::vector<std::uint64_t>{1, 1, 1}));
}

TEST(Scalars, TextForms) {
  EXPECT_EQ(Scalar::parse(RingDescriptor::rationals(), "6/8").to_string(), "3/4");
  EXPECT_EQ(Scalar::parse(RingDescriptor::rational_functions(), "t^2 + 2*t + 1/3").to_string(), "t^2+2*t+1/3");
  EXPECT_EQ(Scalar::parse(RingDescriptor::rational_functions(), "(t^2-1)/(2*t+2)").to_string(), "1/2*t-1/2");
  EXPECT_EQ(Scalar::parse(RingDescriptor::rational_functions(), "(1)/(t-2)").to_string(), "(1)/(t-2)");
  EXPECT_EQ(Scalar::parse(RingDescriptor::poly_z(), "-t^3+t").to_string(), "-t^3+t");
  EXPECT_THROW(Scalar::parse(RingDescriptor::poly_z(), "t/2"), ParseError);
  EXPECT_THROW(Scalar::parse(RingDescriptor::poly_z(), "1/2*t"), IntegralityError);
  EXPECT_EQ(Scalar::parse(RingDescriptor::prime_field(5), "-1").to_string(), "4");
  const auto gf8 = RingDescriptor::parse("GF(2^3; x^3+x+1)");
  EXPECT_EQ(Scalar::parse(gf8, "x^2+x+1 mod 2").to_string(), "x^2+x+1");
  EXPECT_EQ(Scalar::parse(gf8, "x^3").to_string(), "x+1");
  EXPECT_THROW(Scalar::parse(gf8, "x mod 3"), RingMismatch);
  EXPECT_THROW(Scalar::parse(RingDescriptor::rationals(), "1/0"), DivisionByZero);
}

TEST(Scalars, RingDescriptors) {
  for (const char* s : {"Z", "Q", "Z[t]", "Q(t)", "Q(s)", "GF(5)", "GF(2^2; x^2+x+1)", "GF(3^2; a^2+1)"})
    EXPECT_EQ(RingDescriptor::parse(s).to_string(), s);
  EXPECT_EQ(RingDescriptor::parse("F_7").to_string(), "GF(7)");
  EXPECT_EQ(RingDescriptor::parse("GF(2^3)").to_string(), "GF(2^3; x^3+x+1)");
  EXPECT_THROW(RingDescriptor::parse("GF(6)"), NotPrime);
  EXPECT_THROW(RingDescriptor::parse("GF(2^2; x^2+1)"), NotIrreducible);
  EXPECT_THROW(RingDescriptor::parse("R"), ParseError);
  EXPECT_EQ(RingDescriptor::parse("Z[t]").fraction_field().to_string(), "Q(t)");
  EXPECT_FALSE(RingDescriptor::parse("Z").is_field());
}

TEST(Factor, FiniteFieldFactorizationRecombines) {
  Xoshiro256 rng(5);
  for (std::uint64_t p : {2, 3, 5, 7}) {
    const PrimeField fp(p);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<std::uint64_t> f;
      const int deg = 1 + static_cast<int>(rng.below(9));
      for (int i = 0; i < deg; ++i) f.push_back(fp.random(rng));
      f.push_back(1);
      const auto fs = factor::factor(fp, f, rng);
      std::vector<std::uint64_t> prod{1};
      for (const auto& [g, m] : fs) {
        ASSERT_TRUE(factor::is_irreducible(fp, g));
        for (int i = 0; i < m; ++i) prod = poly::mul(fp, prod, g);
      }
      ASSERT_EQ(prod, f);
    }
  }
  const ExtensionField f4(2, {1, 1, 1});
  // x^2 + x + 1 splits over F_4 into (x + a)(x + a + 1).
  const poly::Poly<ExtensionField> g{f4.one(), f4.one(), f4.one()};
  const auto fs = factor::factor(f4, g, rng);
  ASSERT_EQ(fs.size(), 2u);
  EXPECT_EQ(poly::degree(fs[0].first), 1);
  EXPECT_EQ(poly::degree(fs[1].first), 1);
}

TEST(Factor, RationalRoots) {
  const Rationals q;
  // (x - 1/2)(x + 3)(x^2 + 1)
  auto f = poly::mul(q, poly::Poly<Rationals>{mpq_class(-1, 2), 1}, poly::Poly<Rationals>{3, 1});
  f = poly::mul(q, f, poly::Poly<Rationals>{1, 0, 1});
  const auto roots = factor::rational_roots(f);
  ASSERT_TRUE(roots.has_value());
  EXPECT_EQ(*roots, (std::vector<mpq_class>{-3, mpq_class(1, 2)}));
  // Large root, repeated factor.
  auto g = poly::mul(q, poly::Poly<Rationals>{mpq_class("-123456789012345/7"), 1},
                     poly::Poly<Rationals>{mpq_class("-123456789012345/7"), 1});
  g = poly::mul(q, g, poly::Poly<Rationals>{0, 1});
  EXPECT_EQ(*factor::rational_roots(g), (std::vector<mpq_class>{0, mpq_class("123456789012345/7")}));
  EXPECT_TRUE(factor::proven_irreducible_over_q({1, 1, 1}));
  EXPECT_FALSE(factor::proven_irreducible_over_q({-1, 0, 1}));
  EXPECT_FALSE(factor::proven_irreducible_over_q({1, 0, 0, 0, 1}));  // reducible mod every p, so unproven
  EXPECT_TRUE(factor::proven_irreducible_over_q({-2, 0, 0, 0, 0, 1}));  // x^5-2, irreducible mod 3
}
