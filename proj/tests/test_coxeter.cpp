#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "coxconv/oracles.hpp"
#include "test_support.hpp"

using namespace coxconv;
using testing_support::Rng;

namespace {

constexpr std::size_t kBudget = 100000;

/// Number of positive roots made negative by g^{-1}; equals the length for
/// finite Weyl groups.
std::size_t inversions(const RootTables& roots, const GroupElement& g) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (!roots.positive[i]) continue;
    // g^{-1} alpha = alpha o g
    const Covector img = g.matrix.apply_right(roots.roots[i]);
    const auto j = roots.index.find(img);
    if (j == roots.index.end()) ADD_FAILURE() << "image of a root is not a root";
    else if (!roots.positive[j->second]) ++n;
  }
  return n;
}

}  // namespace

TEST(EnumerateGroup, SmallOrdersAgainstMatrixProducts) {
  const auto a2 = build_root_system(Family::A, 2).data;
  const auto g = enumerate_group(a2, kBudget);
  EXPECT_EQ(g.size(), 6u);
  EXPECT_FALSE(g.truncated);
  EXPECT_EQ(g.max_length(), 3u);
  EXPECT_EQ(oracle::distinct_products(a2, 6), 6u);
  const auto b3 = build_root_system(Family::B, 3).data;
  EXPECT_EQ(enumerate_group(b3, kBudget).size(), 48u);
  EXPECT_EQ(oracle::distinct_products(b3, 12), 48u);
}

TEST(EnumerateGroup, InfiniteDihedralIsTruncated) {
  const auto d = rank_two_system(2);
  const auto g = enumerate_group(d, 20);
  EXPECT_EQ(g.size(), 20u);
  EXPECT_TRUE(g.truncated);
  for (const auto& e : g.elements)
    for (std::size_t i = 1; i < e.word.size(); ++i) EXPECT_NE(e.word[i], e.word[i - 1]);
}

TEST(EnumerateGroup, ZeroBudgetIsRejected) {
  EXPECT_THROW(enumerate_group(rank_two_system(2), 0), InvalidBudget);
  EXPECT_THROW(enumerate_orbit(rank_two_system(2), DenseVector{1, 1}, 0), InvalidBudget);
  EXPECT_THROW(generate_roots(rank_two_system(2), 0), InvalidBudget);
}

TEST(EnumerateGroup, WordsMatchMatricesAndAreReduced) {
  for (auto f : {Family::A, Family::B, Family::D}) {
    const auto d = build_root_system(f, 3).data;
    const auto g = enumerate_group(d, kBudget);
    const auto roots = generate_roots(d, 16);
    ASSERT_FALSE(roots.truncated);
    for (const auto& e : g.elements) {
      EXPECT_EQ(element_from_word(d, e.word).matrix, e.matrix);
      EXPECT_EQ(e.matrix * e.inverse, Matrix::identity(d.dim()));
      EXPECT_EQ(e.length(), inversions(roots, e));
    }
  }
}

TEST(DescentTest, AgreesWithLengthComparison) {
  const auto d = build_root_system(Family::A, 3).data;
  const auto g = enumerate_group(d, kBudget);
  Rng rng(41);
  for (int i = 0; i < 40; ++i) {
    const auto& e = g.elements[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(g.size()) - 1))];
    for (std::size_t s = 0; s < d.rank(); ++s) {
      const auto longer = g.find(e.times_generator(d, s).matrix);
      ASSERT_TRUE(longer);
      const bool up = g.elements[*longer].length() > e.length();
      EXPECT_EQ(descent_test(d, e, s) == Descent::Ascent, up);
    }
  }
}

TEST(DescentTest, DecidesWhenCorootConeIsALine) {
  const auto d = rank_two_system(2);
  const auto g = enumerate_group(d, 30);
  for (const auto& e : g.elements)
    for (std::size_t s = 0; s < 2; ++s) EXPECT_NO_THROW(descent_test(d, e, s));
}

TEST(EnumerateOrbit, ElementsMapBaseToPoints) {
  const auto d = build_root_system(Family::B, 3).data;
  const DenseVector v{3, 1, ratio(1, 2)};
  const auto o = enumerate_orbit(d, v, kBudget);
  EXPECT_FALSE(o.truncated);
  EXPECT_EQ(o.size(), 48u);
  for (std::size_t i = 0; i < o.size(); ++i) EXPECT_EQ(o.elements[i].apply(v), o.points[i]);
  const Covector f{1, 0, 0};
  const auto od = enumerate_orbit(d, f, kBudget);
  EXPECT_EQ(od.size(), 6u);
  for (std::size_t i = 0; i < od.size(); ++i) EXPECT_EQ(od.elements[i].apply_dual(f), od.points[i]);
}

TEST(EnumerateOrbit, OrbitStabilizerCounts) {
  const auto d = build_root_system(Family::A, 3).data;
  const std::size_t order = enumerate_group(d, kBudget).size();
  for (const DenseVector& v : {DenseVector{3, 2, 1, 0}, DenseVector{1, 1, 0, 0}, DenseVector{2, 1, 1, 0}}) {
    ASSERT_TRUE(in_chamber(d, v));
    const auto o = enumerate_orbit(d, v, kBudget);
    const auto st = stabilizer(d, v, kBudget);
    EXPECT_EQ(o.size() * st.group.size(), order);
  }
}

TEST(EnumerateOrbit, BudgetTruncates) {
  const auto o = enumerate_orbit(rank_two_system(2), DenseVector{1, 2}, 9);
  EXPECT_TRUE(o.truncated);
  EXPECT_EQ(o.size(), 9u);
}

TEST(GenerateRoots, FiniteCounts) {
  const auto a2 = generate_roots(build_root_system(Family::A, 2).data, 16);
  EXPECT_EQ(a2.size(), 6u);
  EXPECT_EQ(a2.positive_count(), 3u);
  EXPECT_FALSE(a2.truncated);
  EXPECT_EQ(generate_roots(build_root_system(Family::B, 2).data, 16).size(), 8u);
  // non-reduced: the orbit of the simple roots misses the 2 eps_j
  EXPECT_EQ(generate_roots(build_root_system(Family::BC, 2).data, 16).size(), 8u);
}

TEST(GenerateRoots, RankTwoAffineRootsAndCoroots) {
  const auto d = rank_two_system(2);
  const auto roots = generate_roots(d, 8);
  EXPECT_TRUE(roots.truncated);
  std::set<DenseVector> coroots;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const Rational a = roots.roots[i][0], b = roots.roots[i][1];
    // {+-alpha_s, +-alpha_t} + 2Z(alpha_s + alpha_t) = {(a, b) in Z^2 : |a - b| = 1}
    EXPECT_TRUE(is_integer(a) && is_integer(b) && abs(a - b) == 1);
    EXPECT_EQ(roots.coroots[i], (a - b) * d.alpha_check(0));
    coroots.insert(roots.coroots[i]);
  }
  EXPECT_EQ(coroots, (std::set<DenseVector>{d.alpha_check(0), -d.alpha_check(0)}));
  for (long n = -3; n <= 3; ++n)
    for (const Covector& base : {Covector{1, 0}, Covector{-1, 0}, Covector{0, 1}, Covector{0, -1}})
      EXPECT_TRUE(roots.index.count(base + Rational(2 * n) * Covector{1, 1})) << n;
}

TEST(GenerateRoots, ReflectionsMatchRootAndCoroot) {
  const auto d = build_root_system(Family::C, 3).data;
  const auto roots = generate_roots(d, 16);
  Rng rng(42);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const auto r = roots.reflection(d, i);
    const auto v = rng.vec<PrimalTag>(3);
    EXPECT_EQ(r.apply(v), v - pair(roots.roots[i], v) * roots.coroots[i]);
    EXPECT_EQ(pair(roots.roots[i], roots.coroots[i]), 2);
  }
}

TEST(GenerateRoots, InconsistentCorootsAreDetected) {
  const ReflectionData d(2, {"s", "t"}, {Covector{1, 0}, Covector{1, 0}}, {DenseVector{2, 0}, DenseVector{2, 1}});
  EXPECT_THROW(generate_roots(d, 4), CorootInconsistency);
}

TEST(TitsCone, FiniteGroupsCoverEverything) {
  const auto d = build_root_system(Family::A, 3).data;
  Rng rng(43);
  for (int i = 0; i < 40; ++i) {
    const auto v = rng.vec<PrimalTag>(4);
    const auto verdict = tits_cone_member(d, v, 1000);
    ASSERT_EQ(verdict.status, TitsStatus::Yes);
    EXPECT_TRUE(in_chamber(d, verdict.chamber_point));
    EXPECT_EQ(element_from_word(d, verdict.word).apply(verdict.chamber_point), v);
  }
}

TEST(TitsCone, OutsidePointOfRankTwoAffineIsUnknown) {
  const auto d = rank_two_system(2);
  for (std::size_t cap : {10u, 100u, 1000u})
    EXPECT_EQ(tits_cone_member(d, DenseVector{-1, -1}, cap).status, TitsStatus::Unknown);
  EXPECT_EQ(tits_cone_member(d, DenseVector{-1, 3}, 100).status, TitsStatus::Yes);
}

TEST(TitsCone, ImaginaryRootCertifiesOutsidePoints) {
  const auto d = affine_reflection_data(AffineType::A1, 3);
  // -d is outside, d is inside
  DenseVector v(5);
  v[4] = -1;
  const auto verdict = tits_cone_member(d, v, 100);
  EXPECT_EQ(verdict.status, TitsStatus::NoProof);
  EXPECT_FALSE(verdict.certificate.empty());
  v[4] = 1;
  EXPECT_EQ(tits_cone_member(d, v, 100).status, TitsStatus::Yes);
}

TEST(Stabilizer, WallOfB2) {
  const auto d = build_root_system(Family::B, 2).data;
  DenseVector v{1, 1};  // alpha_1 = e1 - e2 vanishes
  const auto st = stabilizer(d, v, kBudget);
  EXPECT_EQ(st.generators, std::vector<std::size_t>{0});
  EXPECT_EQ(st.group.size(), 2u);
  EXPECT_THROW(stabilizer(d, DenseVector{-1, 1}, kBudget), PreconditionViolated);
}

TEST(Stabilizer, DualOfRankTwoAffine) {
  const auto d = rank_two_system(2);
  const auto st = stabilizer_dual(d, Covector{1, 1}, 20);
  EXPECT_EQ(st.generators, (std::vector<std::size_t>{0, 1}));
  EXPECT_TRUE(st.group.truncated);
}

TEST(Stabilizer, FundamentalWeightOfA2) {
  const auto d = build_root_system(Family::A, 2).data;
  // lambda(alpha_check_1) = 1, lambda(alpha_check_2) = 0
  const Covector lambda{1, 0, 0};
  ASSERT_EQ(pair(lambda, d.alpha_check(0)), 1);
  ASSERT_EQ(pair(lambda, d.alpha_check(1)), 0);
  const auto st = stabilizer_dual(d, lambda, kBudget);
  EXPECT_EQ(st.generators, std::vector<std::size_t>{1});
  EXPECT_EQ(st.group.size(), 2u);
}
