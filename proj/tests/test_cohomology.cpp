#include <gtest/gtest.h>

#include <numeric>

#include "irredcert/cohomology.hpp"
#include "irredcert/lattice.hpp"
#include "support/fixtures.hpp"

using namespace irredcert;
using namespace fixtures;

namespace {

/// Oracle for a cyclic group <g> of order n acting by A on F^m, from the
/// periodic resolution: H^0 = ker(A - 1), H^1 = ker N / im(A - 1),
/// H^2 = ker(A - 1) / im N with N = 1 + A + ... + A^(n-1).
CohomologyDims cyclic_oracle(const PrimeField& f, const MatrixOver<PrimeField>& a, std::size_t n) {
  const std::size_t m = a.rows();
  const auto id = mat::identity(f, m);
  auto norm = mat::zeros(f, m, m);
  auto power = id;
  for (std::size_t i = 0; i < n; ++i) {
    norm = mat::add(f, norm, power);
    power = mat::mul(f, power, a);
  }
  const std::size_t r_diff = linalg::rank(f, mat::sub(f, a, id));
  const std::size_t r_norm = linalg::rank(f, norm);
  CohomologyDims d;
  d.d0 = m - r_diff;
  d.d1 = (m - r_norm) - r_diff;
  d.d2 = (m - r_diff) - r_norm;
  return d;
}

void expect_dims(const CohomologyDims& got, std::size_t d0, std::size_t d1, std::size_t d2) {
  EXPECT_EQ(got.d0, d0);
  EXPECT_EQ(got.d1, d1);
  EXPECT_EQ(got.d2, d2);
}

}  // namespace

TEST(Group, ClosureOrders) {
  const PrimeField f5(5);
  const std::vector<std::size_t> orders{2, 3, 4, 4, 6, 8, 8, 24};
  const auto groups = test_groups(f5);
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const auto t = close_group(groups[i].second);
    EXPECT_EQ(t.order(), orders[i]) << groups[i].first;
    for (std::size_t g = 0; g < t.order(); ++g) {
      EXPECT_EQ(t.mult[g][t.inverse[g]], 0u);
      EXPECT_EQ(t.mult[0][g], g);
      for (std::size_t h = 0; h < t.order(); ++h)
        for (std::size_t k = 0; k < t.order(); ++k)
          ASSERT_EQ(t.mult[t.mult[g][h]][k], t.mult[g][t.mult[h][k]]);
    }
  }
}

TEST(Group, BoundExceeded) {
  const PrimeField f5(5);
  EXPECT_THROW(close_group(perm_group(f5, {{1, 2, 3, 0}, {1, 0, 2, 3}}), 23), GroupTooLarge);
}

TEST(Group, ModuleMustFactorThroughGroup) {
  const PrimeField f3(3);
  const auto t = close_group(cyclic(f3, 2));
  // An element of order 3 cannot be a module for Z/2.
  const Representation<PrimeField> bad(f3, 2, {MatrixOver<PrimeField>(2, 2, {1, 1, 0, 1})});
  EXPECT_THROW(cohomology_dims(t, bad), ModuleMismatch);
}

TEST(Cohomology, CyclicOfOrderThree) {
  const auto f3 = PrimeField(3), f5 = PrimeField(5);
  expect_dims(cohomology_dims(close_group(cyclic(f3, 3)), trivial_rep(f3, 1, 1)), 1, 1, 1);
  expect_dims(cohomology_dims(close_group(cyclic(f5, 3)), trivial_rep(f5, 1, 1)), 1, 0, 0);
}

TEST(Cohomology, TrivialGroup) {
  const PrimeField f2(2);
  const auto t = close_group(trivial_rep(f2, 2, 1));
  ASSERT_EQ(t.order(), 1u);
  expect_dims(cohomology_dims(t, trivial_rep(f2, 3, 1)), 3, 0, 0);
}

TEST(Cohomology, CyclicAgainstPeriodicResolution) {
  Xoshiro256 rng(2024);
  for (std::uint64_t p : {2, 3, 5}) {
    const PrimeField f(p);
    for (std::size_t n : {2, 3, 4, 6}) {
      const auto t = close_group(cyclic(f, n));
      // Modules: the regular permutation module, a trivial module and the
      // module pulled back along Z/n -> Z/n itself via a random power.
      const auto gen = cyclic(f, n).generators().front();
      std::vector<MatrixOver<PrimeField>> actions{gen, mat::identity(f, 2)};
      auto power = mat::identity(f, n);
      const std::size_t e = rng.below(n);
      for (std::size_t i = 0; i < e; ++i) power = mat::mul(f, power, gen);
      actions.push_back(power);
      for (const auto& a : actions) {
        const Representation<PrimeField> module(f, a.rows(), {a});
        EXPECT_EQ(cohomology_dims(t, module).d0, cyclic_oracle(f, a, n).d0);
        const auto got = cohomology_dims(t, module), want = cyclic_oracle(f, a, n);
        EXPECT_EQ(got.d1, want.d1) << "p=" << p << " n=" << n;
        EXPECT_EQ(got.d2, want.d2) << "p=" << p << " n=" << n;
      }
    }
  }
}

TEST(Cohomology, DifferentialsComposeToZero) {
  for (std::uint64_t p : {2, 3}) {
    const PrimeField f(p);
    for (const auto& [name, g] : test_groups(f)) {
      const auto t = close_group(g);
      EXPECT_TRUE(is_complex(t, g)) << name;
      EXPECT_TRUE(is_complex(t, trivial_rep(f, 1, g.generators().size()))) << name;
    }
  }
}

TEST(Cohomology, CoprimeOrderVanishes) {
  // Coprime characteristic: H^1 and H^2 vanish for every module.
  for (std::uint64_t p : {5, 7}) {
    const PrimeField f(p);
    for (const auto& [name, g] : test_groups(f)) {
      if (std::gcd<std::uint64_t>(close_group(g).order(), p) != 1) continue;
      const auto t = close_group(g);
      const auto trivial = cohomology_dims(t, trivial_rep(f, 1, g.generators().size()));
      EXPECT_EQ(trivial.d1, 0u) << name;
      EXPECT_EQ(trivial.d2, 0u) << name;
      if (g.dim() * g.dim() * t.order() * t.order() <= kMaxC2) {
        const auto ad = cohomology_dims(t, adjoint_rep(g));
        EXPECT_EQ(ad.d1, 0u) << name;
        EXPECT_EQ(ad.d2, 0u) << name;
      }
    }
  }
}

TEST(Cohomology, ModularTrivialCoefficients) {
  // H^1(G, F_p) = Hom(G, F_p) and H^2 values for small groups, frozen from
  // the abelianisations and Schur multipliers.
  const PrimeField f2(2);
  const auto groups = test_groups(f2);
  // Z2, Z3, Z4, V4, S3, D4, Q8 over F_2.
  const std::vector<std::array<std::size_t, 2>> want{{1, 1}, {0, 0}, {1, 1}, {2, 3}, {1, 1}, {2, 3}, {2, 2}};
  for (std::size_t i = 0; i < want.size(); ++i) {
    const auto t = close_group(groups[i].second);
    const auto d = cohomology_dims(t, trivial_rep(f2, 1, groups[i].second.generators().size()));
    EXPECT_EQ(d.d0, 1u) << groups[i].first;
    EXPECT_EQ(d.d1, want[i][0]) << groups[i].first;
    EXPECT_EQ(d.d2, want[i][1]) << groups[i].first;
  }
}

TEST(Cohomology, H0OfAdjointIsCommutant) {
  for (std::uint64_t p : {2, 3, 5}) {
    const PrimeField f(p);
    for (const auto& [name, g] : test_groups(f)) {
      const auto t = close_group(g);
      if (g.dim() * g.dim() * t.order() * t.order() > kMaxC2) continue;
      EXPECT_EQ(cohomology_dims(t, adjoint_rep(g)).d0, endo_dim(g)) << name << " p=" << p;
    }
  }
}

TEST(Cohomology, SizeBound) {
  const PrimeField f5(5);
  const auto s4 = perm_group(f5, {{1, 2, 3, 0}, {1, 0, 2, 3}});
  EXPECT_THROW(cohomology_dims(close_group(s4), adjoint_rep(s4)), SizeBound);
}

TEST(Obstruction, S3OverF5) {
  const auto rep = mod_p("s3_q", 5);
  const auto r = obstruction_report(rep);
  EXPECT_EQ(r.group_order, 6u);
  EXPECT_EQ(r.schur_dim, 1u);
  EXPECT_EQ(r.d0, 1u);
  EXPECT_EQ(r.d1, 0u);
  EXPECT_EQ(r.d2, 0u);
  EXPECT_TRUE(r.unobstructed);
  EXPECT_EQ(r.predicted_ring, std::optional<std::string>("Λ"));
  EXPECT_EQ(r.meataxe, Verdict::Irreducible);
  EXPECT_TRUE(r.irreducible_deformation);
  const auto j = to_json(r);
  EXPECT_EQ(j["predicted_ring"], "Λ");
  EXPECT_EQ(j["universal_deformation_irreducible"], true);
}

TEST(Obstruction, ReducibleHasNoIrreducibleDeformation) {
  const PrimeField f5(5);
  // Z/2 acting by diag(1, -1): commutant of dimension 2.
  const Representation<PrimeField> rep(f5, 2, {MatrixOver<PrimeField>(2, 2, {1, 0, 0, 4})});
  const auto r = obstruction_report(rep);
  EXPECT_EQ(r.schur_dim, 2u);
  EXPECT_FALSE(r.predicted_ring.has_value());
  EXPECT_FALSE(r.irreducible_deformation);
}

TEST(Obstruction, PowerSeriesRingNames) {
  EXPECT_EQ(power_series_ring(0), "Λ");
  EXPECT_EQ(power_series_ring(1), "Λ[[x_1]]");
  EXPECT_EQ(power_series_ring(3), "Λ[[x_1,x_2,x_3]]");
}
