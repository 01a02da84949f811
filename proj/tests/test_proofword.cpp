#include <gtest/gtest.h>

#include <random>
#include <set>

#include "e5proof/bracelets.hpp"
#include "e5proof/engel.hpp"
#include "e5proof/proofword.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace e5proof;

namespace {

Word w(std::string_view s) { return parse_word(s); }

ProofWord random_valid(std::mt19937_64& rng, int e) {
  auto r = oracle::random_proof(rng, e, 6, 4, 5);
  return ProofWord(r.conjugators, r.relators);
}

}  // namespace

TEST(Symmetrize, SingleLetter) {
  const auto r = symmetrize(std::vector<Word>{w("a")}, 4);
  EXPECT_EQ(r.members(), (std::vector<Word>{w("aaaa"), w("AAAA")}));
  EXPECT_EQ(r.bases(), (std::vector<Word>{w("a")}));
}

TEST(Symmetrize, TwoLetterBase) {
  const auto r = symmetrize(std::vector<Word>{w("bA")}, 4);
  for (const char* m : {"bAbAbAbA", "AbAbAbAb", "aBaBaBaB", "BaBaBaBa"}) EXPECT_TRUE(r.is_member(w(m))) << m;
  EXPECT_EQ(r.members().size(), 4u);
}

TEST(Symmetrize, RotatedBasesGiveSameSet) {
  const auto x = symmetrize(std::vector<Word>{w("AbA")}, 4);
  const auto y = symmetrize(std::vector<Word>{w("bAA")}, 4);
  EXPECT_EQ(x.members(), y.members());
  EXPECT_EQ(x.bases(), y.bases());
  EXPECT_TRUE(x.contains(w("AbAAbAAbAAbA")));
  EXPECT_TRUE(x.contains(w("bAAbAAbAAbAA")));
}

TEST(Symmetrize, RejectsNonCyclicallyReducedBase) {
  EXPECT_THROW(symmetrize(std::vector<Word>{w("abA")}, 4), ContractViolation);
}

TEST(Symmetrize, ClosedAndStructuralMembershipAgrees) {
  const auto bases = canonical_words(enumerate_up_to(Alphabet{2}, 4, false));
  const auto r = symmetrize(bases, 3);
  for (const Word& m : r.members()) {
    EXPECT_TRUE(r.is_member(invert(m)));
    for (std::size_t k = 0; k < m.size(); ++k) EXPECT_TRUE(r.is_member(rotate(m, k)));
    EXPECT_TRUE(r.contains(m));
  }
  // every cyclically reduced word up to length 12 is classified the same way
  for (std::size_t n = 1; n <= 12; ++n) {
    for (const auto& s : oracle::all_strings(2, n)) {
      if (n > 8 && s[0] != 'a') continue;  // keep the sweep small
      const Word x = w(s);
      if (!is_cyclically_reduced(x)) continue;
      EXPECT_EQ(r.is_member(x), r.contains(x)) << s;
    }
  }
}

TEST(ParseProof, Segments) {
  const auto p = parse_proof("a(babababa)A");
  ASSERT_EQ(p.relator_count(), 1u);
  EXPECT_EQ(p.conjugators(), (std::vector<Word>{w("a"), w("A")}));
  EXPECT_EQ(p.relators(), (std::vector<Word>{w("babababa")}));

  const auto q = parse_proof("(aaaa)");
  EXPECT_EQ(q.conjugators(), (std::vector<Word>{Word{}, Word{}}));
  EXPECT_EQ(q.relators(), (std::vector<Word>{w("aaaa")}));
}

TEST(ParseProof, CommentsAndWhitespace) {
  const auto p = parse_proof("# header\n  a (babababa)\n  # more\nA\n");
  EXPECT_EQ(to_string(p), "a(babababa)A");
}

TEST(ParseProof, Errors) {
  auto position_of = [](std::string_view text) -> std::size_t {
    try {
      parse_proof(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    return std::string_view::npos;
  };
  EXPECT_EQ(position_of("a((aaaa))"), 2u);
  EXPECT_EQ(position_of("(aaaa))"), 6u);
  EXPECT_EQ(position_of("b(aaaa"), 1u);
  EXPECT_EQ(position_of("aA(bbbb)"), 2u);
  EXPECT_EQ(position_of("a()A"), 2u);
  EXPECT_EQ(position_of("a(ax)A"), 3u);
}

TEST(ParseProof, StoredE5Proof) {
  EXPECT_EQ(fixture::e5_proof.size(), 444u);
  const auto p = parse_proof(fixture::e5_proof);
  EXPECT_EQ(p.relator_count(), 26u);
  EXPECT_EQ(to_string(p), fixture::e5_proof);
}

TEST(Flatten, Examples) {
  EXPECT_EQ(flatten(parse_proof("a(babababa)A")), w("abababab"));
  EXPECT_EQ(flatten(parse_proof("(abAbabAb)")), w("abAbabAb"));
  EXPECT_EQ(flatten(parse_proof(fixture::e5_proof)), engel_word(5));
}

TEST(Verify, StoredE5Proof) {
  const auto p = parse_proof(fixture::e5_proof);
  const auto bases = canonical_words(enumerate_up_to(Alphabet{2}, 5, false));
  const auto report = verify(p, engel_word(5), symmetrize(bases, 4));
  EXPECT_TRUE(report.flattens_to_target);
  EXPECT_TRUE(report.every_segment_is_relator);
  EXPECT_TRUE(report.excision_trivial);
  EXPECT_TRUE(report.valid());
  EXPECT_TRUE(report.diagnostics.empty());
  EXPECT_TRUE(verify(p, engel_word(5), 4).valid());
}

TEST(Verify, StoredE5ProofNeedsBasesOfLengthFive) {
  const auto p = parse_proof(fixture::e5_proof);
  const auto bases = canonical_words(enumerate_up_to(Alphabet{2}, 4, false));
  const auto report = verify(p, engel_word(5), symmetrize(bases, 4));
  EXPECT_TRUE(report.flattens_to_target);
  EXPECT_FALSE(report.every_segment_is_relator);
  EXPECT_FALSE(report.valid());
}

TEST(Verify, DeletedLetterBreaksFlatten) {
  std::string text(fixture::e5_proof);
  text.erase(text.find("(bbbb)BBaBAb") + 7, 1);  // drop a conjugating letter
  const auto report = verify(parse_proof(text), engel_word(5), 4);
  EXPECT_FALSE(report.flattens_to_target);
  EXPECT_FALSE(report.valid());
}

TEST(Verify, Trivial) {
  const auto r = symmetrize(std::vector<Word>{w("a")}, 4);
  EXPECT_TRUE(verify(parse_proof("(aaaa)"), w("aaaa"), r).valid());
  const auto bad = verify(parse_proof("b(aaaa)"), w("baaaa"), r);
  EXPECT_TRUE(bad.flattens_to_target);
  EXPECT_FALSE(bad.excision_trivial);
  EXPECT_FALSE(verify(parse_proof("(aaa)"), w("aaa"), r).every_segment_is_relator);
}

TEST(Fold, BorderPairExample) {
  EXPECT_EQ(to_string(fold(parse_proof("a(babababa)A"))), "(abababab)");
}

TEST(Fold, FixedPoints) {
  EXPECT_EQ(to_string(fold(parse_proof("(aaaa)"))), "(aaaa)");
  EXPECT_EQ(to_string(fold(parse_proof("bb(AAAA)BB"))), "bb(AAAA)BB");
  EXPECT_EQ(fold(parse_proof(fixture::e5_proof)), parse_proof(fixture::e5_proof));
}

TEST(Fold, RepeatsAcrossBothEnds) {
  EXPECT_EQ(to_string(fold(parse_proof("ab(abababab)BA"))), "(abababab)");
  EXPECT_EQ(to_string(fold(parse_proof("a(AbAbAbAb)A"))), "(bAbAbAbA)");
  EXPECT_EQ(to_string(fold(parse_proof("Bab(aaaa)BAb"))), "Bab(aaaa)BAb");
}

TEST(Fold, Properties) {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 1000; ++i) {
    const ProofWord p = random_valid(rng, 1 + i % 4);
    const ProofWord f = fold(p);
    EXPECT_EQ(fold(f), f);
    EXPECT_EQ(flatten(f), flatten(p));
    EXPECT_LE(to_string(f).size(), to_string(p).size());
    const int e = 1 + i % 4;
    EXPECT_EQ(verify(f, flatten(p), e).valid(), verify(p, flatten(p), e).valid());
    EXPECT_TRUE(verify(f, flatten(p), e).valid());
  }
}

TEST(Stats, StoredProofColumn) {
  const auto s = stats(parse_proof(fixture::e5_proof), 4);
  EXPECT_EQ(s.overall_length, 444u);
  EXPECT_EQ(s.relator_count, 26u);
  EXPECT_EQ(s.relator_length_sum, 272u);
  EXPECT_EQ(s.mean_base_length(), "2.62");
  EXPECT_EQ(s.conjugating_pairs, 60u);
  EXPECT_EQ(s.pairs_per_relator(), "2.31");
  EXPECT_EQ(s.distinct_relators, 13u);
  EXPECT_EQ(infer_exponent(parse_proof(fixture::e5_proof)), 4);
}

TEST(Stats, SingleRelator) {
  const auto s = stats(parse_proof("(aaaa)"), 4);
  EXPECT_EQ(s.overall_length, 6u);
  EXPECT_EQ(s.relator_count, 1u);
  EXPECT_EQ(s.relator_length_sum, 4u);
  EXPECT_EQ(s.mean_base_length(), "1.00");
  EXPECT_EQ(s.conjugating_pairs, 0u);
  EXPECT_EQ(s.distinct_relators, 1u);
}

TEST(Stats, RejectsNonPowers) { EXPECT_THROW(stats(parse_proof("(aab)"), 4), std::invalid_argument); }

TEST(Stats, LengthIdentityOnRandomProofs) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 300; ++i) {
    const ProofWord p = random_valid(rng, 4);
    const auto s = stats(p, 4);
    EXPECT_EQ(s.conjugating_symbols % 2, 0u);
    EXPECT_EQ(s.overall_length, s.relator_length_sum + 2 * s.relator_count + 2 * s.conjugating_pairs);
  }
}

TEST(Stats, RatioRounding) {
  EXPECT_EQ(format_ratio(68, 26), "2.62");
  EXPECT_EQ(format_ratio(60, 26), "2.31");
  EXPECT_EQ(format_ratio(1, 8), "0.13");  // half up
  EXPECT_EQ(format_ratio(0, 0), "0.00");
}

TEST(DistinctPresentation, Examples) {
  EXPECT_EQ(distinct_presentation(parse_proof(fixture::e5_proof), 4).size(), 13u);
  EXPECT_EQ(distinct_presentation(parse_proof("(aaaa)(AAAA)"), 4), (std::vector<Word>{w("aaaa")}));
  EXPECT_EQ(distinct_presentation(parse_proof("(AbAAbAAbAAbA)(bAAbAAbAAbAA)"), 4).size(), 1u);
}

TEST(DistinctPresentation, AsWrittenCountDiffers) {
  // As-written strings overcount: rotations and inverses are separate.
  const auto p = parse_proof(fixture::e5_proof);
  std::set<Word> written(p.relators().begin(), p.relators().end());
  EXPECT_EQ(written.size(), 20u);
}
