#include <gtest/gtest.h>

#include "l2burau/fox.hpp"
#include "support.hpp"

using namespace l2b;
using testing_support::fox_by_product_rule;
using testing_support::naive_reduce;
using testing_support::random_letters;
using testing_support::random_word;

namespace {

IntElement el(const char* text) { return IntElement(parse_word(text)); }
IntElement one() { return IntElement::one(); }

}  // namespace

TEST(Reduce, CancelsAdjacentInversePairs) {
  EXPECT_TRUE(Word::reduce({1, -1}).is_identity());
  EXPECT_EQ(Word::reduce({1, 2, -2, 1}), Word::reduce({1, 1}));
  const Word w = Word::reduce({1, 2, -1, 3});
  EXPECT_EQ(Word::reduce(w.letters()), w);
}

TEST(Reduce, RejectsZeroLetter) { EXPECT_THROW(Word::reduce({1, 0}), std::invalid_argument); }

TEST(Reduce, MatchesRepeatedSweepsOnRandomInput) {
  std::mt19937 rng(11);
  for (int k = 0; k < 1000; ++k) {
    auto raw = random_letters(rng, 3, 30);
    auto expected = naive_reduce(raw);
    const Word w = Word::reduce(raw);
    ASSERT_EQ(std::vector<Letter>(w.letters().begin(), w.letters().end()), expected);
  }
}

TEST(Reduce, EmptyWordsCompareEqualWhateverTheirOrigin) {
  EXPECT_EQ(Word{}, Word::reduce({2, -2}));
  EXPECT_EQ(Word{}.hash(), Word::reduce({2, -2}).hash());
}

TEST(WordText, ParsesAllSpellings) {
  EXPECT_EQ(parse_word("x1 x2^-1 x1"), Word::reduce({1, -2, 1}));
  EXPECT_EQ(parse_word("1 -2 1"), Word::reduce({1, -2, 1}));
  EXPECT_EQ(parse_word("g2 g1^-1"), Word::reduce({2, -1}));
  EXPECT_EQ(parse_word("a a b^-1"), Word::reduce({1, 1, -2}));
  EXPECT_EQ(parse_word("x1^3"), Word::reduce({1, 1, 1}));
  EXPECT_TRUE(parse_word("e").is_identity());
  EXPECT_TRUE(parse_word("").is_identity());
}

TEST(WordText, ReportsColumnOfBadToken) {
  try {
    parse_word("x1 x2^q");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 7);
  }
}

TEST(WordText, RoundTripsRandomWords) {
  std::mt19937 rng(12);
  for (int k = 0; k < 300; ++k) {
    const Word w = random_word(rng, 4, 15);
    EXPECT_EQ(parse_word(format_word(w)), w);
    EXPECT_EQ(parse_word(format_word(w, WordStyle{"g", false})), w);
  }
  EXPECT_EQ(format_word(Word::reduce({1, -2}), WordStyle{"", true}), "a b^-1");
}

TEST(RingMul, SmallProducts) {
  EXPECT_EQ((one() - el("x1")) * el("x1"), el("x1") - el("x1 x1"));
  EXPECT_EQ(el("x1") * el("x1^-1"), one());
  const IntElement a = el("x1") * Integer(3) - el("x2 x1");
  EXPECT_EQ(a * one(), a);
  EXPECT_EQ(one() * a, a);
}

TEST(RingMul, AssociativeAndDistributiveOnRandomTriples) {
  std::mt19937 rng(13);
  auto random_element = [&rng] {
    IntElement e;
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int k = 0; k < 4; ++k) e.add_term(random_word(rng, 3, 6), Integer(coef(rng)));
    return e;
  };
  for (int k = 0; k < 200; ++k) {
    const IntElement a = random_element(), b = random_element(), c = random_element();
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
  }
}

TEST(RingMul, NoZeroCoefficientsStored) {
  IntElement a = el("x1") - el("x1");
  EXPECT_TRUE(a.is_zero());
  EXPECT_EQ(a.term_count(), 0u);
}

TEST(Fox, PaperExamples) {
  const Word w = parse_word("x1 x2 x1^-1");
  EXPECT_EQ(fox_derivative(w, 1), one() - el("x1 x2 x1^-1"));
  EXPECT_EQ(fox_derivative(w, 2), el("x1"));
  EXPECT_TRUE(fox_derivative(parse_word("x2"), 1).is_zero());
  EXPECT_EQ(fox_derivative(parse_word("x1^-1"), 1), -el("x1^-1"));
}

TEST(Fox, AgreesWithProductRuleRecursion) {
  std::mt19937 rng(14);
  for (int k = 0; k < 500; ++k) {
    const Word w = random_word(rng, 3, 25);
    std::vector<Letter> raw(w.letters().begin(), w.letters().end());
    for (int i = 1; i <= 3; ++i) ASSERT_EQ(fox_derivative(w, i), fox_by_product_rule(raw, i));
  }
}

TEST(Fox, ProductRuleOnRandomPairs) {
  std::mt19937 rng(15);
  for (int k = 0; k < 1000; ++k) {
    const Word u = random_word(rng, 3, 20), v = random_word(rng, 3, 20);
    for (int i = 1; i <= 3; ++i)
      ASSERT_EQ(fox_derivative(u * v, i), fox_derivative(u, i) + IntElement(u) * fox_derivative(v, i));
  }
}

TEST(Fox, FundamentalIdentity) {
  std::mt19937 rng(16);
  for (int k = 0; k < 1000; ++k) {
    const Word w = random_word(rng, 4, 20);
    IntElement rhs;
    for (int i = 1; i <= 4; ++i) rhs += fox_derivative(w, i) * (IntElement(Word::generator(i)) - one());
    ASSERT_EQ(IntElement(w) - one(), rhs);
  }
}

TEST(Fox, LinearExtension) {
  const IntElement a = el("x1 x2") * Integer(2) - el("x2^-1");
  EXPECT_EQ(fox_derivative(a, 2), el("x1") * Integer(2) + el("x2^-1"));
}

TEST(RewriteAlphabet, ChangeOfGenerators) {
  const auto to_g = x_in_g(3);
  const auto to_x = g_in_x(3);
  EXPECT_EQ(rewrite_alphabet(parse_word("x2"), to_g), parse_word("g1^-1 g2"));
  EXPECT_EQ(rewrite_alphabet(parse_word("g2"), to_x), parse_word("x1 x2"));
  EXPECT_TRUE(rewrite_alphabet(Word{}, to_x).is_identity());
}

TEST(RewriteAlphabet, RoundTripOnRandomWords) {
  std::mt19937 rng(17);
  const auto to_g = x_in_g(4);
  const auto to_x = g_in_x(4);
  for (int k = 0; k < 500; ++k) {
    const Word w = random_word(rng, 4, 20);
    ASSERT_EQ(rewrite_alphabet(rewrite_alphabet(w, to_x), to_g), w);
    ASSERT_EQ(rewrite_alphabet(rewrite_alphabet(w, to_g), to_x), w);
  }
}
