// Copyright 2026 The streamctc Authors. All Rights Reserved.

#include <cmath>
#include <sstream>

#include "gtest/gtest.h"
#include "streamctc/error.h"
#include "streamctc/lang_model.h"
#include "streamctc/ngram_lm.h"
#include "support/test_util.h"

namespace streamctc {
namespace {

std::vector<double> Distribution(const CharLm& lm, const LmState& state) {
  std::vector<double> logp(static_cast<std::size_t>(lm.vocab_size()));
  lm.NextLogProbs(state, logp);
  std::vector<double> p;
  for (double v : logp) p.push_back(std::exp(v));
  return p;
}

std::string Serialized(const NgramLm& lm) {
  std::ostringstream out;
  SaveNgramLm(lm, out);
  return out.str();
}

TEST(UniformLmTest, InitialDistributionIsUniform) {
  UniformLm lm("ab");
  const auto p = Distribution(lm, lm.InitialState());
  ASSERT_EQ(p.size(), 3u);
  for (double v : p) EXPECT_NEAR(v, 1.0 / 3.0, 1e-15);
  auto [score, next] = lm.ScoreAndAdvance(lm.InitialState(), 'b');
  EXPECT_DOUBLE_EQ(score, std::log(1.0 / 3.0));
  EXPECT_DOUBLE_EQ(lm.ScoreEos(next), std::log(1.0 / 3.0));
}

TEST(NgramLmTest, UnigramInitialDistribution) {
  // "aab" + eos: a=2 b=1 eos=1, total 4, |V|=3, k=1.
  const auto lm = TrainNgramLm(std::vector<std::string>{"aab"}, Alphabet("ab"), 1);
  const auto p = Distribution(lm, lm.InitialState());
  EXPECT_NEAR(p[0], 3.0 / 7.0, 1e-15);
  EXPECT_NEAR(p[1], 2.0 / 7.0, 1e-15);
  EXPECT_NEAR(p[2], 2.0 / 7.0, 1e-15);
}

TEST(NgramLmTest, BigramAddOneExample) {
  // Context "a" occurs twice, both times followed by b.
  const auto lm = TrainNgramLm(std::vector<std::string>{"abab"}, Alphabet("ab"), 2);
  auto [score, state] = lm.ScoreAndAdvance(lm.StateFor("a"), 'b');
  EXPECT_NEAR(std::exp(score), 0.6, 1e-15);
  // Context "b": followed once by a, once by eos.
  EXPECT_NEAR(std::exp(lm.ScoreAndAdvance(state, 'a').first), 0.4, 1e-15);
  EXPECT_NEAR(std::exp(lm.ScoreEos(state)), 0.4, 1e-15);
}

TEST(NgramLmTest, ScoringIsPureAndDeterministic) {
  const auto lm = TrainNgramLm(std::vector<std::string>{"abab"}, Alphabet("ab"), 2);
  const LmState state = lm.StateFor("ab");
  const auto first = lm.ScoreAndAdvance(state, 'a');
  const auto second = lm.ScoreAndAdvance(state, 'a');
  EXPECT_EQ(first.first, second.first);
  EXPECT_EQ(first.second, second.second);
  EXPECT_EQ(state, lm.StateFor("ab"));
}

TEST(NgramLmTest, CloneIsIndependent) {
  const auto lm = TrainNgramLm(std::vector<std::string>{"abba", "bab"}, Alphabet("ab"), 3);
  const LmState original = lm.InitialState();
  const auto before = Distribution(lm, original);
  LmState clone = original;
  clone = lm.Advance(clone, 'b');
  clone = lm.Advance(clone, 'a');
  EXPECT_EQ(Distribution(lm, original), before);
}

TEST(NgramLmTest, RejectsForeignCharactersAndStates) {
  const auto lm = TrainNgramLm(std::vector<std::string>{"ab"}, Alphabet("ab"), 2);
  EXPECT_THROW(lm.ScoreAndAdvance(lm.InitialState(), 'z'), ValidationError);
  UniformLm other("ab");
  EXPECT_THROW(lm.ScoreAndAdvance(other.InitialState(), 'a'), ValidationError);
}

TEST(NgramTrainTest, CountsContexts) {
  const auto lm = TrainNgramLm(std::vector<std::string>{"ab"}, Alphabet("ab"), 2);
  const auto& counts = lm.counts();
  ASSERT_EQ(counts.size(), 3u);
  EXPECT_TRUE(counts.count(""));
  EXPECT_TRUE(counts.count("a"));
  EXPECT_TRUE(counts.count("b"));
  EXPECT_EQ(counts.at("a")[1], 1u);  // a -> b
  EXPECT_EQ(counts.at("b")[2], 1u);  // b -> eos
}

TEST(NgramTrainTest, SingleCharacterCorpusFavoursThatCharacter) {
  const auto lm = TrainNgramLm(std::vector<std::string>{"a"}, Alphabet("abc"), 1);
  const auto p = Distribution(lm, lm.InitialState());
  EXPECT_GT(p[0], p[1]);
  EXPECT_GT(p[0], p[2]);
}

TEST(NgramTrainTest, Deterministic) {
  const std::vector<std::string> corpus{"the cat", "a hat", "that"};
  const Alphabet alphabet = Alphabet::Default();
  EXPECT_EQ(Serialized(TrainNgramLm(corpus, alphabet, 3)),
            Serialized(TrainNgramLm(corpus, alphabet, 3)));
}

TEST(NgramTrainTest, NormalizesCorpusLines) {
  const Alphabet alphabet("ab ");
  EXPECT_EQ(NormalizeCorpusLine("  A\tb -  B?a  ", alphabet), "a b ba");
  EXPECT_EQ(NormalizeCorpusLine("a b", Alphabet("ab")), "ab");
  EXPECT_EQ(NormalizeCorpusLine(" ?! ", alphabet), "");
}

TEST(NgramTrainTest, RejectsEmptyCorpusAndBadParameters) {
  const Alphabet alphabet("ab");
  EXPECT_THROW(TrainNgramLm(std::vector<std::string>{}, alphabet, 2), ValidationError);
  EXPECT_THROW(TrainNgramLm(std::vector<std::string>{"??", ""}, alphabet, 2),
               ValidationError);
  EXPECT_THROW(TrainNgramLm(std::vector<std::string>{"ab"}, alphabet, 0), ValidationError);
  EXPECT_THROW(TrainNgramLm(std::vector<std::string>{"ab"}, alphabet, 2, 0.0),
               ValidationError);
}

TEST(NgramTrainTest, UnseenContextBacksOffToLongestSeenSuffix) {
  const auto lm = TrainNgramLm(std::vector<std::string>{"abc"}, Alphabet("abc"), 3);
  EXPECT_EQ(lm.BackoffContext("ab"), "ab");
  EXPECT_EQ(lm.BackoffContext("cb"), "b");
  EXPECT_EQ(lm.BackoffContext("ca"), "a");
  EXPECT_EQ(Distribution(lm, lm.StateFor("cb")), Distribution(lm, lm.StateFor("b")));
}

class NgramPropertyTest : public ::testing::Test {
 protected:
  NgramPropertyTest()
      : alphabet_("abc "),
        lm_(TrainNgramLm(std::vector<std::string>{"abc cab", "bca a", "cc b a"},
                         alphabet_, 3, 0.5)) {}

  std::string RandomText(Rng& rng, int max_len) {
    std::string s;
    for (auto n = rng.UniformInt(0, max_len); n > 0; --n) {
      s.push_back(alphabet_.symbol(
          static_cast<int>(rng.UniformInt(0, alphabet_.num_visible() - 1))));
    }
    return s;
  }

  Alphabet alphabet_;
  NgramLm lm_;
};

TEST_F(NgramPropertyTest, DistributionsNormalizeAndArePositive) {
  Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const auto state = lm_.StateFor(RandomText(rng, 12));
    std::vector<double> logp(static_cast<std::size_t>(lm_.vocab_size()));
    lm_.NextLogProbs(state, logp);
    double total = 0.0;
    for (double v : logp) {
      EXPECT_TRUE(std::isfinite(v));
      total += std::exp(v);
    }
    EXPECT_NEAR(total, 1.0, 1e-9);
  }
}

TEST_F(NgramPropertyTest, DependsOnlyOnTheLastOrderMinusOneCharacters) {
  Rng rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    std::string tail;
    while (tail.size() < 2) tail = RandomText(rng, 2);
    const auto a = lm_.StateFor(RandomText(rng, 6) + tail);
    const auto b = lm_.StateFor(RandomText(rng, 6) + tail);
    EXPECT_EQ(Distribution(lm_, a), Distribution(lm_, b));
  }
}

TEST_F(NgramPropertyTest, ClonesStayIndependentUnderInterleavedAdvances) {
  Rng rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const std::string text_a = RandomText(rng, 8);
    const std::string text_b = RandomText(rng, 8);
    const std::string shared = RandomText(rng, 3);
    LmState a = lm_.StateFor(shared);
    LmState b = a;
    for (std::size_t i = 0; i < std::max(text_a.size(), text_b.size()); ++i) {
      if (i < text_a.size()) a = lm_.Advance(a, text_a[i]);
      if (i < text_b.size()) b = lm_.Advance(b, text_b[i]);
    }
    EXPECT_EQ(Distribution(lm_, a), Distribution(lm_, lm_.StateFor(shared + text_a)));
    EXPECT_EQ(Distribution(lm_, b), Distribution(lm_, lm_.StateFor(shared + text_b)));
  }
}

TEST(NgramFormatTest, SaveLoadSaveIsByteIdentical) {
  const auto lm = TrainNgramLm(std::vector<std::string>{"the cat sat", "that hat"},
                               Alphabet::Default(), 3, 0.25);
  const std::string first = Serialized(lm);
  std::istringstream in(first);
  const auto loaded = LoadNgramLm(in);
  EXPECT_EQ(Serialized(loaded), first);
  EXPECT_EQ(loaded.order(), 3);
  EXPECT_EQ(loaded.smoothing(), 0.25);
  for (const std::string s : {"", "th", "the c", "xq"}) {
    EXPECT_EQ(Distribution(lm, lm.StateFor(s)), Distribution(loaded, loaded.StateFor(s)));
  }
}

TEST(NgramFormatTest, LoadedBigramReproducesScores) {
  const auto lm = TrainNgramLm(std::vector<std::string>{"abab"}, Alphabet("ab"), 2);
  std::istringstream in(Serialized(lm));
  const auto loaded = LoadNgramLm(in);
  EXPECT_NEAR(std::exp(loaded.ScoreAndAdvance(loaded.StateFor("a"), 'b').first),
              0.6, 1e-15);
}

TEST(NgramFormatTest, TruncatedOrMalformedFilesRaiseParseErrors) {
  const auto lm = TrainNgramLm(std::vector<std::string>{"abab", "ba"}, Alphabet("ab"), 2);
  const std::string good = Serialized(lm);
  // Dropping only the final newline leaves a complete file.
  for (std::size_t cut = 0; cut + 1 < good.size(); ++cut) {
    std::istringstream in(good.substr(0, cut));
    EXPECT_THROW(LoadNgramLm(in), ParseError) << "cut at " << cut;
  }
  const std::vector<std::string> bad{
      "NGLM v2 2 1 ab\nend\t0\n",
      "NGLM v1 x 1 ab\nend\t0\n",
      "NGLM v1 2 1 ab\na\tz\t1\nend\t1\n",
      "NGLM v1 2 1 ab\na\tb\tfoo\nend\t1\n",
      "NGLM v1 2 1 ab\na\tb\t1\nend\t1\nextra\n",
      "NGLM v1 2 0 ab\na\tb\t1\nend\t1\n",
  };
  for (const auto& text : bad) {
    std::istringstream in(text);
    EXPECT_THROW(LoadNgramLm(in), ParseError) << text;
  }
  std::istringstream in("NGLM v1 2 1 ab\na\tb\tfoo\nend\t1\n");
  try {
    LoadNgramLm(in);
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

}  // namespace
}  // namespace streamctc
