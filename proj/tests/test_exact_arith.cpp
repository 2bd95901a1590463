#include <gtest/gtest.h>

#include <vector>

#include "test_support.hpp"

using namespace coxconv;
using testing_support::Rng;

TEST(Rational, ParseAndPrintRoundTrip) {
  EXPECT_EQ(parse_rational("2/4"), ratio(1, 2));
  EXPECT_EQ(to_string(parse_rational("-6/4")), "-3/2");
  EXPECT_EQ(to_string(parse_rational("7")), "7");
  EXPECT_EQ(to_string(parse_rational("0/5")), "0");
  EXPECT_EQ(parse_rational("+3/9"), ratio(1, 3));
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const Rational q = rng.rational(1000, 97);
    EXPECT_EQ(parse_rational(to_string(q)), q);
  }
}

TEST(Rational, MalformedInputIsRejected) {
  for (const char* bad : {"", "1/0", "a", "1.5", "1/", "/2", "--1", "1/-2", " 1"})
    EXPECT_THROW(parse_rational(bad), ParseError) << bad;
  EXPECT_THROW(ratio(1, 0), Error);
}

TEST(Rational, RatioIsCanonical) {
  EXPECT_EQ(ratio(4, -6), ratio(-2, 3));
  EXPECT_EQ(ratio(4, -6).get_den(), 3);
  EXPECT_EQ(hash_rational(ratio(2, 4)), hash_rational(ratio(1, 2)));
}

TEST(Rational, FloorCeilRound) {
  EXPECT_EQ(floor_of(ratio(-7, 2)), -4);
  EXPECT_EQ(ceil_of(ratio(-7, 2)), -3);
  EXPECT_EQ(round_of(ratio(-7, 2)), -3);
  EXPECT_EQ(round_of(ratio(5, 2)), 3);
  EXPECT_EQ(round_of(ratio(-8, 3)), -3);
  EXPECT_EQ(floor_of(Rational(6)), 6);
  EXPECT_TRUE(is_integer(ratio(6, 3)));
  EXPECT_FALSE(is_integer(ratio(1, 3)));
  EXPECT_EQ(sign(ratio(-1, 9)), -1);
}

TEST(Rational, FieldAxiomsOnRandomSamples) {
  Rng rng(7);
  for (int i = 0; i < 300; ++i) {
    const Rational a = rng.rational(), b = rng.rational(), c = rng.rational();
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a - a, 0);
    if (a != 0) {
      EXPECT_EQ(a * (Rational(1) / a), 1);
    }
  }
}

TEST(Pairing, HandExample) {
  EXPECT_EQ(pair(Covector{2, ratio(-3, 2)}, DenseVector{1, 1}), ratio(1, 2));
}

TEST(Pairing, Bilinear) {
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    const auto f = rng.vec<DualTag>(4), g = rng.vec<DualTag>(4);
    const auto v = rng.vec<PrimalTag>(4), w = rng.vec<PrimalTag>(4);
    const Rational a = rng.rational();
    EXPECT_EQ(pair(f + a * g, v), pair(f, v) + a * pair(g, v));
    EXPECT_EQ(pair(f, v + a * w), pair(f, v) + a * pair(f, w));
  }
}

TEST(Pairing, DimensionMismatchThrows) {
  EXPECT_THROW(pair(Covector{1, 2}, DenseVector{1, 2, 3}), DimensionMismatch);
  EXPECT_THROW(DenseVector({1, 2}) + DenseVector({1}), DimensionMismatch);
}

TEST(SparseVector, ScalarProduct) {
  const SparseVector e1 = SparseVector::unit(1), e2 = SparseVector::unit(2);
  EXPECT_EQ(dot(e1 - e2, e1 + e2), 0);
  EXPECT_EQ(norm2(SparseVector{{3, 2}, {17, -1}}), 5);
  SparseVector x{{1, 1}};
  x.add(1, -1);
  EXPECT_TRUE(x.empty());
}

TEST(SparseVector, DensifyRoundTrip) {
  const SparseVector x{{1, ratio(1, 2)}, {3, -4}};
  const auto v = densify<PrimalTag>(x, 3, 1);
  EXPECT_EQ(v, (DenseVector{ratio(1, 2), 0, -4}));
  EXPECT_EQ(sparsify(v, 1), x);
}

TEST(Linalg, RankAndAnnihilator) {
  const std::vector<DenseVector> vs{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  EXPECT_EQ(linalg::rank<PrimalTag>(vs), 2u);
  const auto ann = linalg::annihilator<PrimalTag>(vs, 3);
  ASSERT_EQ(ann.size(), 1u);
  for (const auto& v : vs) EXPECT_EQ(pair(ann[0], v), 0);
}

TEST(Linalg, SolveInSpan) {
  const std::vector<DenseVector> basis{{1, 0, 1}, {0, 1, 1}};
  const auto c = linalg::solve_in_span<PrimalTag>(basis, DenseVector{2, 3, 5});
  ASSERT_TRUE(c);
  EXPECT_EQ((*c)[0], 2);
  EXPECT_EQ((*c)[1], 3);
  EXPECT_FALSE(linalg::solve_in_span<PrimalTag>(basis, DenseVector{0, 0, 1}));
}

TEST(Simplex, FeasibilityMatchesHandCases) {
  const std::vector<std::vector<Rational>> cols{{1, 0}, {0, 1}};
  const std::vector<Rational> inside{3, 2}, outside{-1, 2};
  const auto sol = lp::feasible_nonnegative(cols, inside);
  ASSERT_TRUE(sol);
  EXPECT_EQ((*sol)[0], 3);
  EXPECT_EQ((*sol)[1], 2);
  EXPECT_FALSE(lp::feasible_nonnegative(cols, outside));
}

TEST(Simplex, SolutionsAreExactAndNonnegative) {
  Rng rng(5);
  for (int i = 0; i < 60; ++i) {
    std::vector<std::vector<Rational>> cols;
    for (int j = 0; j < 5; ++j) cols.push_back({rng.rational(), rng.rational(), rng.rational()});
    // b built as a nonnegative combination is always feasible
    std::vector<Rational> b(3, 0);
    for (int j = 0; j < 5; ++j) {
      const Rational w = ratio(rng.uniform(0, 4), rng.uniform(1, 3));
      for (int r = 0; r < 3; ++r) b[r] += w * cols[j][r];
    }
    const auto sol = lp::feasible_nonnegative(cols, b);
    ASSERT_TRUE(sol);
    std::vector<Rational> got(3, 0);
    for (int j = 0; j < 5; ++j) {
      EXPECT_GE((*sol)[j], 0);
      for (int r = 0; r < 3; ++r) got[r] += (*sol)[j] * cols[j][r];
    }
    EXPECT_EQ(got, b);
  }
}

TEST(Simplex, DegenerateProblemTerminates) {
  const std::vector<std::vector<Rational>> cols{{1, 1, 0}, {1, -1, 0}, {2, 0, 0}, {0, 0, 1}, {0, 0, -1}};
  const std::vector<Rational> b{2, 0, 0};
  EXPECT_TRUE(lp::feasible_nonnegative(cols, b));
}
