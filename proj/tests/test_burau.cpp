#include <gtest/gtest.h>

#include "l2burau/burau.hpp"
#include "l2burau/verify.hpp"
#include "support.hpp"

using namespace l2b;

namespace {

LaurentPolynomial T(long long e = 1) { return LaurentPolynomial::monomial(e); }
LaurentPolynomial c(long long v) { return LaurentPolynomial(v); }

LaurentMatrix mat(std::initializer_list<std::initializer_list<LaurentPolynomial>> rows) {
  LaurentMatrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (const auto& e : r) m(i, j++) = e;
    ++i;
  }
  return m;
}

LaurentMatrix at_one(const LaurentMatrix& m) {
  LaurentMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = LaurentPolynomial(m(i, j).at_one().get_si());
  return out;
}

}  // namespace

TEST(Laurent, Arithmetic) {
  EXPECT_EQ((c(1) - T()) * (c(1) + T()), c(1) - T(2));
  EXPECT_EQ(T(-1) * T(), c(1));
  EXPECT_TRUE((T() - T()).is_zero());
  EXPECT_EQ(format_laurent(c(1) - T() + T(-2) * c(3)), "3*T^-2 + 1 - T");
  EXPECT_EQ(format_laurent(LaurentPolynomial()), "0");
}

TEST(Laurent, Determinant) {
  EXPECT_EQ(determinant(mat({{c(1) - T(), c(1)}, {T(), c(0)}})), -T());
  EXPECT_EQ(determinant(LaurentMatrix::identity(4)), c(1));
}

TEST(Burau, Generator) {
  EXPECT_EQ(burau(BraidWord::generator(2, 1)), mat({{c(1) - T(), c(1)}, {T(), c(0)}}));
  EXPECT_EQ(burau(BraidWord::generator(2, 1, -1)), mat({{c(0), T(-1)}, {c(1), c(1) - T(-1)}}));
  EXPECT_EQ(burau(BraidWord::identity(4)), LaurentMatrix::identity(4));
}

TEST(Burau, LongPatonIsInTheKernel) { EXPECT_EQ(burau(longpaton()), LaurentMatrix::identity(6)); }

TEST(Burau, FoxRouteAgreesWithGeneratorProduct) {
  std::mt19937 rng(41);
  for (int k = 0; k < 150; ++k) {
    const BraidWord b = random_braid(rng, 2 + k % 5, 12);
    ASSERT_EQ(burau(b), burau_by_generators(b)) << format_braid(b);
  }
}

TEST(Burau, AntiHomomorphism) {
  std::mt19937 rng(42);
  for (int k = 0; k < 100; ++k) {
    const int n = 2 + k % 5;
    const BraidWord a = random_braid(rng, n, 8), b = random_braid(rng, n, 8);
    ASSERT_EQ(burau(a * b), burau(b) * burau(a));
    ASSERT_EQ(reduced_burau(a * b), reduced_burau(b) * reduced_burau(a));
  }
}

TEST(Burau, BraidRelations) {
  for (int n = 3; n <= 6; ++n) {
    for (int i = 1; i + 1 < n; ++i)
      EXPECT_EQ(burau(BraidWord(n, {i, i + 1, i})), burau(BraidWord(n, {i + 1, i, i + 1})));
    for (int i = 1; i < n; ++i)
      for (int j = i + 2; j < n; ++j) EXPECT_EQ(burau(BraidWord(n, {i, j})), burau(BraidWord(n, {j, i})));
  }
}

TEST(Burau, SpecializesToPermutationMatrix) {
  std::mt19937 rng(43);
  for (int k = 0; k < 100; ++k) {
    const int n = 2 + k % 5;
    const BraidWord b = random_braid(rng, n, 10);
    const auto perm = permutation(b);
    LaurentMatrix p(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    // Column j is the image of x_j, a conjugate of x_{perm[j]}.
    for (int j = 0; j < n; ++j) p(static_cast<std::size_t>(perm[static_cast<std::size_t>(j)] - 1), static_cast<std::size_t>(j)) = c(1);
    ASSERT_EQ(at_one(burau(b)), p) << format_braid(b);
  }
}

TEST(ReducedBurau, Examples) {
  EXPECT_EQ(reduced_burau(BraidWord::generator(2, 1)), mat({{-T()}}));
  EXPECT_EQ(reduced_burau(BraidWord::generator(3, 1)), mat({{-T(), c(0)}, {c(1), c(1)}}));
  EXPECT_EQ(reduced_burau(BraidWord::identity(4)), LaurentMatrix::identity(3));
}

TEST(ReducedBurau, GeneratorDeterminants) {
  for (int n = 2; n <= 6; ++n)
    for (int i = 1; i < n; ++i) EXPECT_EQ(determinant(reduced_burau(BraidWord::generator(n, i))), -T()) << n << " " << i;
}

TEST(Theta, Examples) {
  const GammaMap id2 = identity_gamma(2);
  EXPECT_EQ(theta(l2_burau(BraidWord::generator(2, 1), id2)), mat({{c(1) - T(), c(1)}, {T(), c(0)}}));
  EXPECT_EQ(theta(OperatorMatrix::identity(3, free_group(3))), LaurentMatrix::identity(3));
}

TEST(Theta, RecoversClassicalBurau) {
  std::mt19937 rng(44);
  for (int k = 0; k < 100; ++k) {
    const int n = 2 + k % 5;
    const BraidWord b = random_braid(rng, n, 10);
    ASSERT_EQ(theta(l2_burau(b, identity_gamma(n))), burau(b));
    ASSERT_EQ(theta(l2_burau(b, abelianization_gamma(n))), burau(b));
    ASSERT_EQ(theta(l2_burau(b, cyclic_gamma(n))), burau(b));
  }
}

TEST(Theta, RecoversReducedBurauInGCoordinates) {
  std::mt19937 rng(45);
  for (int k = 0; k < 60; ++k) {
    const int n = 2 + k % 4;
    const BraidWord b = random_braid(rng, n, 10);
    ASSERT_EQ(theta(to_g_coordinates(reduced_l2_burau(b, identity_gamma(n)))), reduced_burau(b));
    ASSERT_EQ(theta(reduced_l2_burau(b, cyclic_gamma(n))), reduced_burau(b));
  }
}
