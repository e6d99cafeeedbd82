#include <gtest/gtest.h>

#include <cmath>

#include "l2burau/fkdet.hpp"
#include "support.hpp"

using namespace l2b;

namespace {

IntElement el(const char* text) { return IntElement(parse_word(text)); }
IntElement one() { return IntElement::one(); }

OperatorMatrix one_by_one(OraclePtr g, const IntElement& e) {
  OperatorMatrix m(1, 1, std::move(g));
  m.set(0, 0, e);
  return m;
}

// 1 - x1, an element of infinite order with psi = 1.
OperatorMatrix one_minus_generator(OraclePtr g) { return one_by_one(std::move(g), one() - el("x1")); }

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace

TEST(Trace, Examples) {
  EXPECT_EQ(trace(OperatorMatrix::identity(3, free_group(2)), 0.5), 3.0);
  EXPECT_EQ(trace(one_by_one(free_group(2), el("x1")), 0.5), 0.0);
  for (double t : {0.25, 0.5, 2.0}) {
    const RealMatrix s = gram(evaluate(one_minus_generator(free_group(2)), t));
    EXPECT_NEAR(trace(s), 1 + t * t, 1e-12);
    EXPECT_NEAR(s(0, 0).coefficient(parse_word("x1")), -t, 1e-12);
  }
}

TEST(Trace, ExactEvaluationKeepsDyadicValues) {
  const RationalMatrix s = gram(evaluate_exact(one_minus_generator(free_abelian_group(1)), 0.5));
  EXPECT_EQ(trace(s), Rational(5, 4));
}

TEST(Trace, GramIsSelfAdjoint) {
  std::mt19937 rng(61);
  const auto f = free_group(2);
  OperatorMatrix m(2, 2, f);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      IntElement e;
      for (int k = 0; k < 3; ++k) e.add_term(testing_support::random_word(rng, 2, 4), Integer(1 + k));
      m.set(i, j, e);
    }
  const RealMatrix s = gram(evaluate(m, 0.7));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (const auto& [w, c] : s(i, j).terms()) EXPECT_NEAR(s(j, i).coefficient(w.inverse()), c, 1e-12);
}

TEST(FKDet, ZeroOperatorGivesZero) {
  OperatorMatrix z(2, 2, free_abelian_group(1));
  const DetEstimate d = fk_det(z, 0.5);
  EXPECT_EQ(d.value, 0.0);
  EXPECT_TRUE(d.zero_operator);
}

TEST(FKDet, IdentityIsExactlyOne) {
  for (const auto& g : {free_abelian_group(1), free_group(2)}) {
    const OperatorMatrix id = OperatorMatrix::identity(3, g);
    EXPECT_NEAR(fk_det_truncation(id, 2.0, {.radius = 16}).value, 1.0, 1e-12);
    EXPECT_NEAR(fk_det_series(id, 2.0).value, 1.0, 1e-12);
  }
}

TEST(FKDet, UnitMonomialHasDeterminantPowerOfT) {
  // det(g) = t^{psi(g)} for a group element.
  const OperatorMatrix m = one_by_one(free_group(2), el("x1 x2"));
  EXPECT_NEAR(fk_det_truncation(m, 2.0, {.radius = 8}).value, 4.0, 1e-9);
  EXPECT_NEAR(fk_det_series(m, 2.0).value, 4.0, 1e-9);
}

TEST(FKDet, ProportionTwoThreeOnZ) {
  const OperatorMatrix m = one_minus_generator(free_abelian_group(1));
  for (double t : {0.25, 0.5, 2.0, 4.0}) {
    const double expected = std::max(1.0, t);
    const DetEstimate tr = fk_det_truncation(m, t);
    const DetEstimate se = fk_det_series(m, t);
    EXPECT_EQ(tr.method, "truncation:averaged");
    EXPECT_LT(rel(tr.value, expected), 0.02) << t;
    EXPECT_LT(rel(se.value, expected), 0.02) << t;
  }
}

TEST(FKDet, ProportionTwoThreeOnFreeGroup) {
  const OperatorMatrix m = one_minus_generator(free_group(2));
  for (double t : {0.25, 0.5, 2.0, 4.0}) {
    const double expected = std::max(1.0, t);
    const DetEstimate tr = fk_det_truncation(m, t);
    EXPECT_EQ(tr.method, "truncation:rooted");
    EXPECT_LT(rel(tr.value, expected), 0.05) << t;
    EXPECT_LT(rel(fk_det_series(m, t).value, expected), 0.05) << t;
  }
}

TEST(FKDet, TruncationIncrementsShrinkOnZ) {
  const OperatorMatrix m = one_minus_generator(free_abelian_group(1));
  for (double t : {0.25, 0.5, 2.0, 4.0}) {
    const DetEstimate d = fk_det_truncation(m, t);
    ASSERT_GE(d.estimates.size(), 3u);
    for (std::size_t k = 2; k < d.estimates.size(); ++k) {
      const double prev = std::abs(d.estimates[k - 1] - d.estimates[k - 2]);
      const double cur = std::abs(d.estimates[k] - d.estimates[k - 1]);
      EXPECT_LE(cur, prev + 1e-12) << "t=" << t << " k=" << k;
    }
  }
}

TEST(FKDet, SeriesIsMonotoneFromAbove) {
  // Q = 1 - S/b has spectrum in [0, 1], so every partial sum is an upper bound.
  for (const auto& g : {free_abelian_group(1), free_group(2)}) {
    const DetEstimate d = fk_det_series(one_minus_generator(g), 0.5, {.order = 20});
    for (std::size_t k = 1; k < d.estimates.size(); ++k) EXPECT_LE(d.estimates[k], d.estimates[k - 1] * (1 + 1e-12));
  }
}

TEST(FKDet, SeriesFirstTermMatchesClosedForm) {
  // S = 1 + t^2 - t x - t x^-1, b = (1 + t)^2, tr Q = 2t / (1 + t)^2.
  const double t = 0.5;
  const DetEstimate d = fk_det_series(one_minus_generator(free_abelian_group(1)), t, {.order = 1});
  EXPECT_NEAR(d.value, (1 + t) * std::exp(-t / ((1 + t) * (1 + t))), 1e-12);
}

TEST(FKDet, ScalingIsHomogeneous) {
  // det(2 m) = 2^k det(m) for a k x k matrix.
  const auto z = free_abelian_group(1);
  OperatorMatrix m(2, 2, z), twice(2, 2, z);
  m.set(0, 0, one() - el("x1"));
  m.set(0, 1, el("x1"));
  m.set(1, 1, one());
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) twice.set(i, j, m(i, j) * Integer(2));
  for (double t : {0.5, 2.0}) {
    const double a = fk_det_truncation(m, t, {.radius = 400}).value;
    const double b = fk_det_truncation(twice, t, {.radius = 400}).value;
    EXPECT_NEAR(b / a, 4.0, 1e-6) << t;
  }
}

TEST(FKDet, AdjointHasTheSameDeterminant) {
  // (1 - x)(2 - x) on Z has determinant max(1, t) max(2, t); 1 - x1 x2 on F_2 has max(1, t^2).
  const OperatorMatrix z = one_by_one(free_abelian_group(1), one() * Integer(2) - el("x1") * Integer(3) + el("x1 x1"));
  const OperatorMatrix f = one_by_one(free_group(2), one() - el("x1 x2"));
  for (double t : {0.5, 2.0}) {
    const double dz = std::max(1.0, t) * std::max(2.0, t);
    EXPECT_LT(rel(fk_det_truncation(z, t).value, dz), 0.02) << t;
    EXPECT_LT(rel(fk_det_truncation(adjoint(z), t).value, dz), 0.02) << t;
    const double df = std::max(1.0, t * t);
    EXPECT_LT(rel(fk_det_truncation(f, t).value, df), 0.05) << t;
    EXPECT_LT(rel(fk_det_truncation(adjoint(f), t).value, df), 0.05) << t;
  }
}

TEST(FKDet, CombinedEstimateRecordsCrossDeviation) {
  const DetEstimate d = fk_det(one_minus_generator(free_abelian_group(1)), 2.0);
  EXPECT_GE(d.cross_deviation, 0.0);
  EXPECT_LT(d.cross_deviation, 0.02);
  EXPECT_FALSE(d.rank_deficient);
}

TEST(FKDet, RejectsNonSquare) {
  EXPECT_THROW(fk_det(OperatorMatrix(1, 2, free_group(2)), 0.5), std::invalid_argument);
}

TEST(FKDet, SeriesTermCapRaisesResourceLimit) {
  EXPECT_THROW(fk_det_series(one_minus_generator(free_group(2)), 0.5, {.order = 30, .term_cap = 50}), SeriesOverflow);
}

TEST(TruncationMode, RoundTripsNames) {
  for (auto m : {TruncationMode::automatic, TruncationMode::averaged, TruncationMode::rooted})
    EXPECT_EQ(truncation_mode_from_string(to_string(m)), m);
  EXPECT_THROW(truncation_mode_from_string("bogus"), std::invalid_argument);
}
