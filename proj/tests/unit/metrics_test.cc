// Copyright 2026 The streamctc Authors. All Rights Reserved.

#include "streamctc/metrics.h"

#include "gtest/gtest.h"
#include "streamctc/error.h"
#include "streamctc/random.h"

namespace streamctc {
namespace {

std::string RandomString(Rng& rng, const std::string& chars, int max_len) {
  std::string s;
  for (auto n = rng.UniformInt(0, max_len); n > 0; --n) {
    s.push_back(chars[static_cast<std::size_t>(
        rng.UniformInt(0, static_cast<std::int64_t>(chars.size()) - 1))]);
  }
  return s;
}

// Applies an alignment to `ref` and returns the resulting hypothesis.
std::string Apply(const EditAlignment& alignment, const std::string& ref,
                  const std::string& hyp) {
  std::string out;
  std::size_t edits = 0;
  int next_ref = 0;
  for (const auto& step : alignment.steps) {
    switch (step.op) {
      case EditOp::kMatch:
        EXPECT_EQ(ref[static_cast<std::size_t>(step.ref_index)],
                  hyp[static_cast<std::size_t>(step.hyp_index)]);
        out.push_back(ref[static_cast<std::size_t>(step.ref_index)]);
        EXPECT_EQ(step.ref_index, next_ref++);
        break;
      case EditOp::kSubstitute:
        out.push_back(hyp[static_cast<std::size_t>(step.hyp_index)]);
        EXPECT_EQ(step.ref_index, next_ref++);
        ++edits;
        break;
      case EditOp::kDelete:
        EXPECT_EQ(step.ref_index, next_ref++);
        ++edits;
        break;
      case EditOp::kInsert:
        out.push_back(hyp[static_cast<std::size_t>(step.hyp_index)]);
        ++edits;
        break;
    }
  }
  EXPECT_EQ(edits, alignment.distance);
  return out;
}

TEST(EditDistanceTest, Examples) {
  EXPECT_EQ(AlignChars("abc", "abc").distance, 0u);
  const auto inserts = AlignChars("", "xyz");
  EXPECT_EQ(inserts.distance, 3u);
  for (const auto& s : inserts.steps) EXPECT_EQ(s.op, EditOp::kInsert);

  const auto sub = AlignChars("abc", "axc");
  EXPECT_EQ(sub.distance, 1u);
  ASSERT_EQ(sub.steps.size(), 3u);
  EXPECT_EQ(sub.steps[1].op, EditOp::kSubstitute);
  EXPECT_EQ(sub.steps[1].ref_index, 1);
  EXPECT_EQ(sub.steps[1].hyp_index, 1);
}

TEST(EditDistanceTest, TieBreakPrefersSubstitutionOverIndels) {
  // "ab" -> "ba": two substitutions or delete+insert; both cost 2.
  const auto alignment = AlignChars("ab", "ba");
  EXPECT_EQ(alignment.distance, 2u);
  for (const auto& s : alignment.steps) EXPECT_EQ(s.op, EditOp::kSubstitute);
}

TEST(EditDistanceTest, AlignmentsAreValidAndMinimal) {
  Rng rng(1);
  for (int trial = 0; trial < 500; ++trial) {
    const auto ref = RandomString(rng, "abc", 8);
    const auto hyp = RandomString(rng, "abc", 8);
    const auto alignment = AlignChars(ref, hyp);
    EXPECT_EQ(Apply(alignment, ref, hyp), hyp);
    EXPECT_EQ(alignment.distance, CharEditDistance(ref, hyp));
  }
}

TEST(EditDistanceTest, MetricAxioms) {
  Rng rng(2);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto a = RandomString(rng, "abcd", 10);
    const auto b = RandomString(rng, "abcd", 10);
    const auto c = RandomString(rng, "abcd", 10);
    EXPECT_EQ(CharEditDistance(a, b), CharEditDistance(b, a));
    EXPECT_LE(CharEditDistance(a, c), CharEditDistance(a, b) + CharEditDistance(b, c));
    EXPECT_EQ(CharEditDistance(a, a), 0u);
    EXPECT_EQ(CharEditDistance(a, b) == 0, a == b);
  }
}

TEST(ErrorRateTest, Examples) {
  EXPECT_DOUBLE_EQ(WordErrorRate("home to an animal", "home you and animal"), 0.5);
  EXPECT_EQ(WordErrorRate("home to an animal", "home to an animal"), 0.0);
  EXPECT_EQ(CharErrorRate("home to an animal", "home to an animal"), 0.0);
  EXPECT_DOUBLE_EQ(WordErrorRate("we did a different", "we did a different thing"),
                   0.25);
  EXPECT_DOUBLE_EQ(CharErrorRate("abcd", "abxd"), 0.25);
  EXPECT_THROW(WordErrorRate("", "a"), ValidationError);
  EXPECT_THROW(WordErrorRate("   ", "a"), ValidationError);
  EXPECT_THROW(CharErrorRate("", "a"), ValidationError);
}

TEST(ErrorRateTest, ZeroIffEqualAfterTokenization) {
  Rng rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    auto ref = RandomString(rng, "ab ", 12);
    if (WordTokens(ref).empty()) ref = "a";
    const auto hyp = RandomString(rng, "ab ", 12);
    const double wer = WordErrorRate(ref, hyp);
    EXPECT_GE(wer, 0.0);
    EXPECT_EQ(wer == 0.0, WordTokens(ref) == WordTokens(hyp));
    const double cer = CharErrorRate(ref, hyp);
    EXPECT_EQ(cer == 0.0, ref == hyp);
  }
}

TEST(WordTokensTest, SplitsOnSpaces) {
  EXPECT_EQ(WordTokens("  a bb  c "), (std::vector<std::string>{"a", "bb", "c"}));
  EXPECT_TRUE(WordTokens("").empty());
}

TEST(ConfusionMatrixTest, Examples) {
  const Alphabet alphabet = Alphabet::Default();
  const std::vector<std::pair<std::string, std::string>> perfect{{"abc", "abc"},
                                                                 {"x", "x"}};
  const auto none = BuildConfusionMatrix(perfect, alphabet);
  for (char r : alphabet.visible()) EXPECT_EQ(none.row_total(r), 0.0);

  const std::vector<std::pair<std::string, std::string>> one{{"b", "m"}};
  EXPECT_EQ(BuildConfusionMatrix(one, alphabet).normalized('b', 'm'), 1.0);

  const std::vector<std::pair<std::string, std::string>> vf{{"vf", "ff"}, {"vv", "fv"}};
  const auto m = BuildConfusionMatrix(vf, alphabet);
  EXPECT_EQ(m.normalized('v', 'f'), 1.0);
  EXPECT_EQ(m.count('v', 'f'), 2.0);
  EXPECT_EQ(m.row_total('f'), 0.0);
}

TEST(ConfusionMatrixTest, RowsNormalize) {
  Rng rng(4);
  const Alphabet alphabet("abcd");
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int i = 0; i < 200; ++i) {
    pairs.emplace_back(RandomString(rng, "abcd", 10), RandomString(rng, "abcd", 10));
  }
  const auto m = BuildConfusionMatrix(pairs, alphabet);
  for (char r : alphabet.visible()) {
    if (m.row_total(r) == 0.0) continue;
    double sum = 0.0;
    for (char h : alphabet.visible()) {
      EXPECT_GE(m.normalized(r, h), 0.0);
      sum += m.normalized(r, h);
    }
    EXPECT_NEAR(sum, 1.0, 1e-9);
  }
}

}  // namespace
}  // namespace streamctc
