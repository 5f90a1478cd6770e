#include <gtest/gtest.h>

#include <random>

#include "conescope/errors.hpp"
#include "conescope/group_model.hpp"
#include "conescope/magnus.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace conescope;
using namespace conescope::testing;

namespace {

DensePoly as_dense(const MagnusSeries& s) {
  DensePoly out;
  for (const auto& [m, c] : s.coefficients()) {
    if (c != 0) out[m] = c;
  }
  return out;
}

}  // namespace

TEST(Magnus, LetterExpansions) {
  EXPECT_EQ(magnus_expand(parse_word("a"), 3).to_string(), "1 + X1");
  EXPECT_EQ(magnus_expand(parse_word("A"), 2).to_string(), "1 - X1 + X1X1");
  EXPECT_EQ(magnus_expand(Word{}, 4).to_string(), "1");
  EXPECT_TRUE(magnus_expand(Word{}, 4).is_one());
}

TEST(Magnus, CommutatorAgreesWithDenseOracle) {
  const Word w = parse_word("abAB");
  const MagnusSeries s = magnus_expand(w, 4);
  EXPECT_EQ(as_dense(s), dense_expand(w, 4));
  const MagnusSeries s2 = magnus_expand(parse_word("ab"), 2) * magnus_expand(parse_word("AB"), 2);
  EXPECT_EQ(s2.to_string(), "1 + X1X2 - X2X1");
}

TEST(Magnus, ExpansionAgreesWithDenseOracleOnRandomWords) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 150; ++i) {
    const Word w = free_reduce(random_word(rng, 2, 7));
    const int degree = std::max<int>(static_cast<int>(w.size()), 1);
    EXPECT_EQ(as_dense(magnus_expand(w, degree)), dense_expand(w, degree)) << format_word(w);
  }
}

TEST(Magnus, DegreeTooSmall) { EXPECT_THROW(magnus_expand(parse_word("aab"), 2), DegreeTooSmall); }

TEST(Magnus, SignExamples) {
  EXPECT_EQ(magnus_sign(Word{}), Sign::Identity);
  EXPECT_EQ(magnus_sign(parse_word("a")), Sign::Positive);
  EXPECT_EQ(magnus_sign(parse_word("A")), Sign::Negative);
  EXPECT_EQ(magnus_sign(parse_word("Ab")), Sign::Negative);
  EXPECT_EQ(magnus_sign(parse_word("aA")), Sign::Identity);
}

TEST(Magnus, SignAgreesWithDenseOracle) {
  const Ball b = ball(f2(), 6);
  for (const Element& g : b.members()) {
    const int expected = dense_sign(g.word);
    EXPECT_EQ(static_cast<int>(magnus_sign(g.word)), expected) << to_string(g);
  }
}

TEST(Magnus, InjectiveUpToLengthSix) {
  const Ball b = ball(f2(), 6);
  for (const Element& g : b.members()) {
    if (g.is_identity()) continue;
    EXPECT_FALSE(magnus_expand(g.word, 6).is_one()) << to_string(g);
  }
}

TEST(Magnus, ConjugationInvariance) {
  const GroupModel m = f2();
  const int radius = 6;
  const Ball b = ball(m, radius);
  const Ball small = ball(m, 3);
  for (const Element& g : small.members()) {
    if (magnus_sign(g.word) != Sign::Positive) continue;
    for (const Element& h : small.members()) {
      const Element c = m.multiply(m.multiply(h, g), m.invert(h));
      if (static_cast<int>(m.length(c)) > radius) continue;
      EXPECT_EQ(magnus_sign(c.word), Sign::Positive) << to_string(h) << " " << to_string(g);
    }
  }
  EXPECT_GT(b.size(), small.size());
}

TEST(Magnus, ProductTruncatesAtTheSmallerDegree) {
  const MagnusSeries x = magnus_expand(parse_word("a"), 1);
  const MagnusSeries y = magnus_expand(parse_word("A"), 3);
  const MagnusSeries p = x * y;
  EXPECT_EQ(p.degree(), 1);
  EXPECT_TRUE(p.is_one());
}

TEST(Magnus, LeadingTerm) {
  const auto lt = magnus_expand(parse_word("Ba"), 2).leading_term();
  ASSERT_TRUE(lt.has_value());
  EXPECT_EQ(lt->first, (Monomial{0}));
  EXPECT_EQ(lt->second, 1);
  EXPECT_FALSE(MagnusSeries(3).leading_term().has_value());
}
