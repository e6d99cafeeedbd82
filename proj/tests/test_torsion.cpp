#include <gtest/gtest.h>

#include <cmath>

#include "l2burau/torsion.hpp"
#include "l2burau/verify.hpp"
#include "support.hpp"

using namespace l2b;

namespace {

GammaMap trefoil_gamma() { return GammaMap(torus_knot_group(2, 3), {parse_word("b^-1 a"), parse_word("a^-1 b^2")}); }

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace

TEST(ClosurePresentation, Examples) {
  EXPECT_EQ(closure_presentation(BraidWord::generator(2, 1)).relators, std::vector<Word>{parse_word("g2 g1^-2")});
  EXPECT_EQ(closure_presentation(BraidWord(2, {1, 1, 1})).relators,
            std::vector<Word>{parse_word("g2 g2 g1^-1 g2^-1 g1^-1")});
  const auto unlink = closure_presentation(BraidWord::identity(3));
  for (const Word& r : unlink.relators) EXPECT_TRUE(r.is_identity());
  EXPECT_EQ(unlink.relators.size(), 2u);
}

TEST(ClosurePresentation, ShiftConjugatesByLastGenerator) {
  const auto p = closure_presentation(BraidWord::generator(2, 1));
  EXPECT_EQ(shift_relators(p, 1).relators, std::vector<Word>{parse_word("g2 g2 g1^-2 g2^-1")});
  EXPECT_EQ(shift_relators(p, 0).relators, p.relators);
}

TEST(FoxMatrix, EqualsReducedMinusIdentity) {
  // Holds once gamma kills the relators h(g_j) g_j^-1; the cyclic map always does.
  std::mt19937 rng(71);
  auto check = [](const BraidWord& b, const GammaMap& gamma) {
    const OperatorMatrix f = fox_matrix(closure_presentation(b), gamma);
    const auto k = static_cast<std::size_t>(b.strands() - 1);
    const OperatorMatrix r = reduced_l2_burau(b, gamma) - OperatorMatrix::identity(k, gamma.target(), Basis::reduced);
    ASSERT_EQ(f.rows(), k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) ASSERT_EQ(f(i, j), r(i, j)) << format_braid(b);
  };
  for (int k = 0; k < 60; ++k) {
    const int n = 2 + k % 4;
    check(random_braid(rng, n, 8), cyclic_gamma(n));
  }
  check(BraidWord(2, {1, 1, 1}), trefoil_gamma());
}

TEST(Torsion, Unknot) {
  const TorsionReport rep = torsion_determinant(BraidWord::generator(2, 1), cyclic_gamma(2), {0.5, 2.0});
  ASSERT_EQ(rep.records.size(), 2u);
  for (const auto& rec : rep.records) {
    EXPECT_LT(rel(rec.det, std::max(1.0, rec.t)), 0.05) << rec.t;
    EXPECT_LT(rel(rec.torsion, 1.0 / std::max(1.0, rec.t)), 0.05) << rec.t;
  }
  EXPECT_EQ(rep.path, "reduced-burau");
  EXPECT_EQ(rep.strands, 2);
}

TEST(Torsion, SplitUnlinkVanishes) {
  const TorsionReport rep = torsion_determinant(BraidWord::identity(2), identity_gamma(2), {0.5, 2.0});
  for (const auto& rec : rep.records) {
    EXPECT_EQ(rec.det, 0.0);
    EXPECT_EQ(rec.torsion, 0.0);
    EXPECT_TRUE(rec.estimate.zero_operator);
  }
}

TEST(Torsion, Trefoil) {
  const TorsionReport rep = torsion_determinant(BraidWord(2, {1, 1, 1}), trefoil_gamma(), {0.5, 2.0});
  for (const auto& rec : rep.records) {
    const double m = std::max(1.0, rec.t);
    EXPECT_LT(rel(rec.det, m * m * m), 0.15) << rec.t;
    EXPECT_GE(rec.estimate.cross_deviation, 0.0);
    EXPECT_LT(rec.estimate.cross_deviation, 0.10);
  }
}

TEST(Torsion, FoxPathAgreesWithReducedPath) {
  struct Case {
    BraidWord beta;
    GammaMap gamma;
  };
  const std::vector<Case> cases = {{BraidWord::generator(2, 1), cyclic_gamma(2)},
                                   {BraidWord(2, {1, 1, 1}), trefoil_gamma()},
                                   {BraidWord(3, {1, 2}), cyclic_gamma(3)}};
  for (const auto& c : cases) {
    const auto a = torsion_determinant(c.beta, c.gamma, {0.5, 2.0});
    const auto b = fox_torsion_report(closure_presentation(c.beta), c.gamma, {0.5, 2.0});
    EXPECT_EQ(b.path, "fox-presentation");
    for (std::size_t k = 0; k < a.records.size(); ++k)
      EXPECT_LT(rel(b.records[k].torsion, a.records[k].torsion), 0.05) << format_braid(c.beta);
  }
}

TEST(Torsion, ShiftedRelatorsChangeOnlyByAMonomial) {
  // n = 2, k = 1: the ratio is t^{n k (n - 1)} = t^2.
  const auto p = closure_presentation(BraidWord::generator(2, 1));
  for (double t : {0.5, 2.0}) {
    const double base = fox_torsion_from_presentation(p, cyclic_gamma(2), t).value;
    const double shifted = fox_torsion_from_presentation(shift_relators(p, 1), cyclic_gamma(2), t).value;
    EXPECT_LT(rel(shifted / base, t * t), 0.01) << t;
  }
}

TEST(Torsion, RejectsGammaThatDoesNotKillRelators) {
  EXPECT_THROW(torsion_determinant(BraidWord(2, {1, 1, 1}), identity_gamma(2), {0.5}), VerificationError);
  EXPECT_THROW(fox_torsion_report(closure_presentation(BraidWord(2, {1, 1, 1})), identity_gamma(2), {0.5}),
               VerificationError);
}

TEST(Torsion, GridOrderIsPreserved) {
  const std::vector<double> grid = {4.0, 0.25, 2.0, 0.5};
  const TorsionReport rep = torsion_determinant(BraidWord::generator(2, 1), cyclic_gamma(2), grid);
  ASSERT_EQ(rep.records.size(), grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) EXPECT_EQ(rep.records[k].t, grid[k]);
}
