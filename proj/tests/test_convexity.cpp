#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "test_support.hpp"

using namespace coxconv;
using testing_support::Rng;

namespace {

constexpr std::size_t kBudget = 100000;

DenseVector random_chamber_point(Rng& rng, const ReflectionData& d) {
  // v with alpha_s(v) >= 0 from the chamber generators
  const auto k = fundamental_chamber(d);
  DenseVector v(d.dim());
  for (const auto& g : k.generators()) v += ratio(rng.uniform(0, 6), rng.uniform(1, 3)) * g;
  for (const auto& g : k.lineality()) v += rng.rational() * g;
  return v;
}

}  // namespace

TEST(ConeCv, InteriorPointOfFiniteSystemGivesCs) {
  const std::vector<std::pair<Family, DenseVector>> cases{
      {Family::A, DenseVector{3, 2, 1, 0}}, {Family::B, DenseVector{3, 2, 1}}, {Family::D, DenseVector{2, 1, 0}}};
  for (const auto& [f, rho] : cases) {
    const auto d = build_root_system(f, 3).data;
    for (const auto& a : d.alphas()) ASSERT_GT(pair(a, rho), 0);
    const auto cv = cone_Cv(d, rho);
    EXPECT_FALSE(cv.truncated);
    EXPECT_TRUE(cv.cone.equals_as_set(d.coroot_cone()));
  }
}

TEST(ConeCv, CorootOfRankTwoAffine) {
  const auto d = rank_two_system(2);
  const auto cv = cone_Cv(d, d.alpha_check(0), 8);
  EXPECT_TRUE(cv.truncated);
  EXPECT_TRUE(cv.cone.equals_as_set(VectorCone(2, {d.alpha_check(0)})));
}

TEST(VerifyPrimal, ExhaustiveOnA3) {
  const auto d = build_root_system(Family::A, 3).data;
  Rng rng(51);
  for (int i = 0; i < 10; ++i) {
    const auto v = random_chamber_point(rng, d);
    const auto rep = verify_primal(d, v, kBudget);
    EXPECT_TRUE(rep.precondition_met);
    EXPECT_FALSE(rep.truncated);
    EXPECT_TRUE(rep.ok());
  }
}

TEST(VerifyPrimal, OrbitPointsOfTheTitsConeToo) {
  // W K = V for finite groups; the theorem applies to every v
  const auto d = build_root_system(Family::B, 3).data;
  Rng rng(52);
  for (int i = 0; i < 10; ++i) EXPECT_TRUE(verify_primal(d, rng.vec<PrimalTag>(3), kBudget).ok());
}

TEST(VerifyPrimal, HyperbolicNegativeControl) {
  const auto d = rank_two_system(3);
  const auto rep = verify_primal(d, d.alpha_check(0), 50, 6);
  EXPECT_FALSE(rep.precondition_met);
  EXPECT_FALSE(rep.ok());
  const DenseVector as = d.alpha_check(0), at = d.alpha_check(1);
  const DenseVector st = element_from_word(d, {0, 1}).apply(as);
  const DenseVector ts = element_from_word(d, {1, 0}).apply(as);
  EXPECT_EQ(st, Rational(8) * as + Rational(3) * at);
  EXPECT_EQ(ts, -as - Rational(3) * at);
  EXPECT_EQ(ratio(1, 2) * (st + ts), ratio(7, 2) * as);
}

TEST(VerifyPrimal, RankTwoAffineInteriorBudgeted) {
  const auto d = rank_two_system(2);
  const auto rep = verify_primal(d, DenseVector{1, 2}, 7, 3);
  EXPECT_TRUE(rep.precondition_met);
  EXPECT_TRUE(rep.truncated);
  EXPECT_EQ(rep.checked, 7u);
  EXPECT_TRUE(rep.ok());
}

TEST(VerifyDual, ExhaustiveOnB2) {
  const auto d = build_root_system(Family::B, 2).data;
  Rng rng(53);
  for (int i = 0; i < 20; ++i) {
    Covector lambda{ratio(rng.uniform(0, 9), rng.uniform(1, 4)), ratio(rng.uniform(0, 9), rng.uniform(1, 4))};
    // shift into C_S^*: lambda(alpha_check) >= 0 via the fundamental weights
    Covector mu = lambda[0] * Covector{1, 0} + lambda[1] * Covector{ratio(1, 2), ratio(1, 2)};
    ASSERT_TRUE(in_dual_chamber(d, mu));
    const auto rep = verify_dual(d, mu, kBudget);
    EXPECT_TRUE(rep.precondition_met);
    EXPECT_TRUE(rep.ok());
  }
}

TEST(VerifyDual, RankTwoAffineInvariantLine) {
  // C_S^* is the W-fixed line through alpha_s + alpha_t
  const auto d = rank_two_system(2);
  const auto rep = verify_dual(d, Covector{3, 3}, 7, 3);
  EXPECT_TRUE(rep.precondition_met);
  EXPECT_EQ(rep.checked, 1u);
  EXPECT_TRUE(rep.ok());
}

TEST(VerifyDual, SimpleRootOfRankTwoAffineIsOutsideTheDualTitsCone) {
  const auto d = rank_two_system(2);
  EXPECT_FALSE(in_dual_chamber(d, d.alpha(0)));
  const auto rep = verify_dual(d, d.alpha(0), 7, 3);
  EXPECT_FALSE(rep.precondition_met);
  EXPECT_FALSE(rep.ok());
}

TEST(ConeOfDifferences, EqualsMinusCsOnA2Interior) {
  const auto d = build_root_system(Family::A, 2).data;
  const DenseVector v{2, 1, 0};
  const auto diff = cone_of_differences(d, v, kBudget);
  EXPECT_FALSE(diff.truncated);
  EXPECT_TRUE(diff.cone.equals_as_set(d.coroot_cone().negated()));
}

TEST(ConeOfDifferences, WallOfB2GivesSmallerCone) {
  const auto d = build_root_system(Family::B, 2).data;
  const DenseVector v{1, 1};
  const auto cv = cone_Cv(d, v).cone;
  EXPECT_TRUE(d.coroot_cone().contains_cone(cv));
  EXPECT_FALSE(cv.contains_cone(d.coroot_cone()));
  EXPECT_TRUE(cone_of_differences(d, v, kBudget).cone.equals_as_set(cv.negated()));
}

TEST(IsExtreme, FiniteInteriorAndAffineLine) {
  const auto a2 = build_root_system(Family::A, 2).data;
  EXPECT_TRUE(is_extreme(a2, DenseVector{2, 1, 0}));
  EXPECT_FALSE(is_extreme(rank_two_system(2), DenseVector{1, 2}, 6));
}

TEST(IsMinimizing, AgreesWithOrbitMinimum) {
  const auto d = build_root_system(Family::A, 2).data;
  const DenseVector v{2, 1, 0};
  EXPECT_TRUE(is_minimizing(d, Covector{0, 0, 1}, v));   // antidominant
  EXPECT_FALSE(is_minimizing(d, Covector{2, 1, 0}, v));  // strictly dominant
  Rng rng(54);
  for (int i = 0; i < 40; ++i) {
    const auto lambda = rng.vec<DualTag>(3);
    const bool attained = orbit_minimum(d, lambda, v, kBudget) == pair(lambda, v);
    EXPECT_EQ(is_minimizing(d, lambda, v), attained);
  }
}

TEST(MaximizerSet, WallOfB2) {
  const auto d = build_root_system(Family::B, 2).data;
  const Covector lambda{1, 1};  // lambda(alpha_check_1) = 0
  ASSERT_EQ(pair(lambda, d.alpha_check(0)), 0);
  const DenseVector v{2, 1};
  const auto rep = maximizer_set(d, lambda, v, kBudget);
  EXPECT_EQ(rep.max_value, 3);
  EXPECT_EQ(rep.maximizers.size(), 2u);
  EXPECT_TRUE(rep.equals_stabilizer_orbit);
  EXPECT_TRUE(rep.dual_condition);
  EXPECT_THROW(maximizer_set(d, Covector{-1, 0}, v, kBudget), PreconditionViolated);
  EXPECT_THROW(maximizer_set(rank_two_system(2), Covector{1, 1}, DenseVector{1, 1}, 50), TruncatedEnumeration);
}

TEST(LocallyFinite, DualConvexityOnA3AndBC2) {
  Rng rng(55);
  for (int i = 0; i < 5; ++i) {
    SparseVector lambda;
    for (std::size_t j = 1; j <= 4; ++j) lambda.set(j, rng.uniform(-3, 3));
    EXPECT_TRUE(verify_locfin_convexity(Family::A, 3, lambda).ok());
  }
  EXPECT_TRUE(verify_locfin_convexity(Family::BC, 2, SparseVector::unit(1)).ok());
}
