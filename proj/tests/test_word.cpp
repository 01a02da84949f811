#include <gtest/gtest.h>

#include <random>

#include "e5proof/engel.hpp"
#include "e5proof/word.hpp"
#include "oracles.hpp"

using namespace e5proof;

namespace {

Word w(std::string_view s) { return parse_word(s); }

}  // namespace

TEST(Parse, MapsLettersToSignedGenerators) {
  EXPECT_EQ(w("ABab"), (Word{-1, -2, 1, 2}));
  EXPECT_EQ(w("bAbAbAbA"), (Word{2, -1, 2, -1, 2, -1, 2, -1}));
}

TEST(Parse, DoesNotReduce) {
  EXPECT_EQ(w("aA"), (Word{1, -1}));
  EXPECT_EQ(to_string(w("aA")), "aA");
}

TEST(Parse, IgnoresWhitespace) { EXPECT_EQ(w(" ab\n\tAB \r\n"), w("abAB")); }

TEST(Parse, RejectsLettersOutsideAlphabet) {
  try {
    parse_word("abc", Alphabet{2});
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
  EXPECT_THROW(parse_word("a(b", Alphabet{2}), ParseError);
  EXPECT_NO_THROW(parse_word("abcC", Alphabet{3}));
}

TEST(Alphabet, RankBounds) {
  EXPECT_THROW(Alphabet{0}, std::invalid_argument);
  EXPECT_THROW(Alphabet{27}, std::invalid_argument);
  EXPECT_EQ(Alphabet{26}.letter_count(), 52);
}

TEST(Order, LowercaseBeforeItsInverse) {
  EXPECT_LT(w("a"), w("A"));
  EXPECT_LT(w("A"), w("b"));
  EXPECT_LT(w("b"), w("B"));
  EXPECT_LT(w("ab"), w("abA"));
}

TEST(FreeReduce, Examples) {
  EXPECT_EQ(free_reduce(w("aAb")), w("b"));
  EXPECT_EQ(free_reduce(Word{}), Word{});
  EXPECT_EQ(free_reduce(w("abBA")), Word{});
}

TEST(FreeReduce, ExpandedE5HasLength72) {
  const Word expanded = engel_expansion(5);
  EXPECT_EQ(expanded.size(), 94u);
  EXPECT_EQ(free_reduce(expanded).size(), 72u);
}

TEST(FreeReduce, AgreesWithStringStack) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const Word x = oracle::random_word(rng, 2, 30);
    EXPECT_EQ(to_string(free_reduce(x)), oracle::reduce_string(to_string(x)));
  }
}

TEST(FreeReduce, Properties) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    const Word x = oracle::random_word(rng, 3, 1 + i % 40);
    const Word r = free_reduce(x);
    EXPECT_TRUE(is_freely_reduced(r));
    EXPECT_EQ(free_reduce(r), r);
    EXPECT_LE(r.size(), x.size());
    EXPECT_EQ(r.size() % 2, x.size() % 2);
    EXPECT_TRUE(free_reduce(x * invert(x)).empty());
  }
}

TEST(Invert, Examples) {
  EXPECT_EQ(invert(w("ab")), w("BA"));
  EXPECT_EQ(invert(Word{}), Word{});
  EXPECT_EQ(invert(w("aaB")), w("bAA"));
  EXPECT_EQ(invert(invert(w("abBAbaa"))), w("abBAbaa"));
}

TEST(Conjugate, Examples) {
  EXPECT_EQ(conjugate(w("abababab"), w("a")), w("babababa"));
  EXPECT_EQ(conjugate(w("bAbAbAbA"), w("b")), w("AbAbAbAb"));
  EXPECT_EQ(conjugate(w("aAbb"), Word{}), w("bb"));
}

TEST(Conjugate, InverseConjugatorUndoes) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    const Word x = oracle::random_word(rng, 2, 20);
    const Word u = oracle::random_word(rng, 2, 6);
    EXPECT_EQ(conjugate(conjugate(x, u), invert(u)), free_reduce(x));
  }
}

TEST(ReducedProduct, MatchesFreeReduceOfConcatenation) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    const Word x = oracle::random_reduced_word(rng, 2, i % 12);
    const Word y = oracle::random_reduced_word(rng, 2, (i * 7) % 13);
    EXPECT_EQ(reduced_product(x, y), free_reduce(x * y));
  }
}

TEST(CyclicReduce, Examples) {
  const auto e5 = cyclic_reduce(engel_word(5));
  EXPECT_EQ(e5.core.size(), 64u);
  EXPECT_EQ(e5.conjugator, w("bbbb"));

  const auto aba = cyclic_reduce(w("aba"));
  EXPECT_EQ(aba.core, w("aba"));
  EXPECT_TRUE(aba.conjugator.empty());

  const auto bab = cyclic_reduce(w("Bab"));
  EXPECT_EQ(bab.core, w("a"));
  EXPECT_EQ(bab.conjugator, w("b"));
}

TEST(CyclicReduce, RoundTrip) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 1000; ++i) {
    const Word x = oracle::random_word(rng, 2, 1 + i % 25);
    const auto cr = cyclic_reduce(x);
    EXPECT_TRUE(is_cyclically_reduced(cr.core));
    EXPECT_EQ(conjugate(cr.core, cr.conjugator), free_reduce(x));
  }
}

TEST(Rotations, Examples) {
  EXPECT_EQ(rotations(w("AbA")), (std::vector<Word>{w("AAb"), w("AbA"), w("bAA")}));
  EXPECT_EQ(rotations(w("aa")), (std::vector<Word>{w("aa")}));
  EXPECT_THROW(rotations(w("abA")), ContractViolation);
  for (const Word& r : rotations(w("aaBab"))) EXPECT_TRUE(is_cyclically_reduced(r));
}

TEST(Power, Examples) {
  EXPECT_EQ(power(w("bA"), 4), w("bAbAbAbA"));
  EXPECT_THROW(power(w("a"), 0), std::invalid_argument);
}

TEST(Power, LengthAndCyclicReduction) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    const Word x = oracle::random_cyclically_reduced(rng, 2, 1 + i % 7);
    const int e = 1 + i % 5;
    const Word p = power(x, e);
    EXPECT_EQ(p.size(), x.size() * static_cast<std::size_t>(e));
    EXPECT_TRUE(is_cyclically_reduced(p));
  }
}

TEST(LeastRotation, MatchesMinimumOfAllRotations) {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 500; ++i) {
    const Word x = oracle::random_word(rng, 2, 1 + i % 16);
    Word best = x;
    for (std::size_t k = 1; k < x.size(); ++k) best = std::min(best, rotate(x, k));
    EXPECT_EQ(least_rotation(x), best);
  }
}
