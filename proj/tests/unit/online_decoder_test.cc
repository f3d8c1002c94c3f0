// Copyright 2026 The streamctc Authors. All Rights Reserved.

#include "streamctc/online_decoder.h"

#include "gtest/gtest.h"
#include "streamctc/error.h"
#include "streamctc/ngram_lm.h"
#include "support/test_util.h"

namespace streamctc {
namespace {

using testing::OneHot;
using testing::RandomEmissions;
using testing::SmallAlphabet;

BeamConfig Config(int width, double alpha, double beta) {
  BeamConfig c;
  c.width = width;
  c.alpha = alpha;
  c.beta = beta;
  return c;
}

std::vector<IncrementalOutput> PushAll(OnlineDecoder& decoder,
                                   const EmissionMatrix& em) {
  std::vector<IncrementalOutput> outputs;
  for (int t = 0; t < em.num_frames(); ++t) outputs.push_back(decoder.Push(em.row(t)));
  return outputs;
}

TEST(ReceptiveFieldTest, ConvolutionStacks) {
  auto rf11 = ComputeReceptiveField(ReceptiveFieldSpec::Uniform(11, 5));
  EXPECT_EQ(rf11.future, 22);
  EXPECT_EQ(rf11.total, 45);
  auto rf16 = ComputeReceptiveField(ReceptiveFieldSpec::Uniform(16, 5));
  EXPECT_EQ(rf16.future, 32);
  EXPECT_EQ(rf16.total, 65);
  auto pointwise = ComputeReceptiveField(ReceptiveFieldSpec::Uniform(1, 1));
  EXPECT_EQ(pointwise.future, 0);
  EXPECT_EQ(pointwise.total, 1);
  EXPECT_EQ(ComputeReceptiveField({{3, 7, 1}}).future, 4);
}

TEST(ReceptiveFieldTest, RejectsEvenOrNonPositiveWidths) {
  EXPECT_THROW(ComputeReceptiveField({{5, 4}}), ValidationError);
  EXPECT_THROW(ComputeReceptiveField({{0}}), ValidationError);
  EXPECT_THROW(ComputeReceptiveField({{-3}}), ValidationError);
}

TEST(ReceptiveFieldTest, ConcatenationAddsFutureFrames) {
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    ReceptiveFieldSpec a, b;
    for (auto n = rng.UniformInt(0, 6); n > 0; --n) {
      a.filter_widths.push_back(static_cast<int>(2 * rng.UniformInt(0, 5) + 1));
    }
    for (auto n = rng.UniformInt(0, 6); n > 0; --n) {
      b.filter_widths.push_back(static_cast<int>(2 * rng.UniformInt(0, 5) + 1));
    }
    EXPECT_EQ(ComputeReceptiveField(a.Concat(b)).future,
              ComputeReceptiveField(a).future + ComputeReceptiveField(b).future);
  }
}

TEST(CompleteWordTest, Examples) {
  const Alphabet alphabet = Alphabet::Default();
  const auto lm = TrainNgramLm(std::vector<std::string>{"the cat"}, alphabet, 2);
  EXPECT_EQ(CompleteWord("th", lm), "e ");
  EXPECT_EQ(CompleteWord("the ", lm), "");
  EXPECT_EQ(CompleteWord("", lm), "");
  EXPECT_EQ(CompleteWord("th", lm, 0), "");
  EXPECT_EQ(CompleteWord("th", lm, 1), "e");
}

TEST(CompleteWordTest, StopsAtEndOfSentence) {
  const Alphabet alphabet("ab ");
  // After "b" the LM has only ever seen eos.
  const auto lm = TrainNgramLm(std::vector<std::string>{"ab", "ab", "ab"}, alphabet, 2);
  EXPECT_EQ(CompleteWord("a", lm), "b");
}

TEST(CompleteWordTest, HoldsNoSpaceExceptATerminalOne) {
  Rng rng(8);
  const Alphabet alphabet("abc ");
  const auto lm = TrainNgramLm(
      std::vector<std::string>{"abc cab bca", "ccc a b", "ba ab"}, alphabet, 3);
  for (int trial = 0; trial < 100; ++trial) {
    std::string prefix;
    for (auto n = rng.UniformInt(1, 6); n > 0; --n) {
      prefix.push_back(alphabet.symbol(static_cast<int>(rng.UniformInt(0, 3))));
    }
    const std::string completion = CompleteWord(prefix, lm);
    EXPECT_LE(completion.size(), static_cast<std::size_t>(kMaxCompletionChars));
    const auto space = completion.find(' ');
    EXPECT_TRUE(space == std::string::npos || space + 1 == completion.size());
  }
}

TEST(OnlineDecoderTest, ZeroLagTracksOfflinePrefixes) {
  Rng rng(12);
  const Alphabet alphabet = SmallAlphabet(4);
  UniformLm lm(alphabet.visible());
  CtcPrefixBeamSearch search(alphabet, Config(8, 0.0, 0.1), lm);
  const auto em = RandomEmissions(rng, alphabet, 20, 3.0);
  OnlineDecoder decoder(search, 0, 0);
  const auto outputs = PushAll(decoder, em);
  for (int t = 0; t < em.num_frames(); ++t) {
    const auto offline = search.Decode(em.Slice(0, t + 1));
    EXPECT_EQ(outputs[static_cast<std::size_t>(t)].hypothesis, offline.text);
    EXPECT_EQ(outputs[static_cast<std::size_t>(t)].committed, offline.text);
    EXPECT_EQ(outputs[static_cast<std::size_t>(t)].score, offline.score);
  }
}

TEST(OnlineDecoderTest, LagTwoTrace) {
  const Alphabet alphabet = SmallAlphabet(2);
  UniformLm lm(alphabet.visible());
  CtcPrefixBeamSearch search(alphabet, Config(10, 0.0, 0.0), lm);
  OnlineDecoder decoder(search, 2, 0);
  const auto outputs = PushAll(decoder, OneHot(alphabet, "a-b"));
  ASSERT_EQ(outputs.size(), 3u);
  EXPECT_EQ(outputs[0].hypothesis, "a");
  EXPECT_EQ(outputs[1].hypothesis, "a");
  EXPECT_EQ(outputs[2].hypothesis, "ab");
  EXPECT_EQ(outputs[0].commits + outputs[1].commits, 0);
  EXPECT_EQ(outputs[2].commits, 1);
  EXPECT_EQ(outputs[1].committed, "");
  EXPECT_EQ(outputs[2].committed, "a");
  EXPECT_EQ(decoder.committed_beam().frame_index(), 1);
  EXPECT_EQ(decoder.Flush().text, "ab");
}

TEST(OnlineDecoderTest, ReplayIsDeterministic) {
  Rng rng(13);
  const Alphabet alphabet = Alphabet::Default();
  const auto lm = TrainNgramLm(std::vector<std::string>{"home to an animal"}, alphabet, 3);
  CtcPrefixBeamSearch search(alphabet, Config(6, 0.5, 0.1), lm);
  const auto em = RandomEmissions(rng, alphabet, 25, 6.0);
  OnlineDecoder decoder(search, 5);
  const auto first = PushAll(decoder, em);
  const auto first_final = decoder.Flush();
  decoder.Reset();
  const auto second = PushAll(decoder, em);
  ASSERT_EQ(first.size(), second.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    EXPECT_EQ(first[i].hypothesis, second[i].hypothesis);
    EXPECT_EQ(first[i].committed, second[i].committed);
    EXPECT_EQ(first[i].completion, second[i].completion);
    EXPECT_EQ(first[i].score, second[i].score);
  }
  EXPECT_EQ(decoder.Flush().text, first_final.text);
}

TEST(OnlineDecoderTest, FlushEqualsOfflineDecoding) {
  Rng rng(14);
  const Alphabet alphabet = SmallAlphabet(5);
  const auto lm = TrainNgramLm(std::vector<std::string>{"abcde", "edcba", "aabbe"},
                               alphabet, 2);
  for (int lag : {0, 1, 5, 22}) {
    for (double alpha : {0.0, 0.5}) {
      for (int trial = 0; trial < 10; ++trial) {
        const auto em = RandomEmissions(rng, alphabet,
                                        static_cast<int>(rng.UniformInt(0, 30)),
                                        1.0 + 5 * rng.Uniform());
        CtcPrefixBeamSearch search(alphabet, Config(4, alpha, 0.1), lm);
        OnlineDecoder decoder(search, lag);
        PushAll(decoder, em);
        const auto offline = search.Decode(em);
        const auto online = decoder.Flush();
        EXPECT_EQ(online.text, offline.text);
        EXPECT_EQ(online.score, offline.score);
      }
    }
  }
}

TEST(OnlineDecoderTest, EmptyStream) {
  const Alphabet alphabet = SmallAlphabet(2);
  UniformLm lm(alphabet.visible());
  CtcPrefixBeamSearch search(alphabet, Config(4, 0.0, 0.0), lm);
  OnlineDecoder decoder(search, 3);
  const auto result = decoder.Flush();
  EXPECT_EQ(result.text, "");
  EXPECT_EQ(result.score, 0.0);
}

TEST(OnlineDecoderTest, LagBeyondLengthCommitsOnlyOnFlush) {
  Rng rng(15);
  const Alphabet alphabet = SmallAlphabet(3);
  UniformLm lm(alphabet.visible());
  CtcPrefixBeamSearch search(alphabet, Config(4, 0.0, 0.0), lm);
  const auto em = RandomEmissions(rng, alphabet, 8, 2.0);
  OnlineDecoder decoder(search, 8);
  for (const auto& out : PushAll(decoder, em)) {
    EXPECT_EQ(out.commits, 0);
    EXPECT_EQ(out.committed, "");
  }
  EXPECT_EQ(decoder.committed_beam().frame_index(), 0);
  EXPECT_EQ(decoder.Flush().text, search.Decode(em).text);
}

TEST(OnlineDecoderTest, WorkPerPushIsBoundedByLag) {
  Rng rng(16);
  const Alphabet alphabet = SmallAlphabet(3);
  UniformLm lm(alphabet.visible());
  CtcPrefixBeamSearch search(alphabet, Config(4, 0.0, 0.0), lm);
  const auto em = RandomEmissions(rng, alphabet, 40);
  for (int lag : {0, 1, 5, 22}) {
    OnlineDecoder decoder(search, lag);
    for (int t = 0; t < em.num_frames(); ++t) {
      const auto out = decoder.Push(em.row(t));
      EXPECT_EQ(out.lookahead_steps, static_cast<int>(decoder.buffered()));
      EXPECT_EQ(out.commits, t + 1 > lag ? 1 : 0);
      EXPECT_LE(out.commits + out.lookahead_steps, 1 + lag);
    }
  }
}

TEST(OnlineDecoderTest, CommittedBeamOnlyEverAdvances) {
  Rng rng(17);
  const Alphabet alphabet = SmallAlphabet(3);
  UniformLm lm(alphabet.visible());
  CtcPrefixBeamSearch search(alphabet, Config(3, 0.0, 0.2), lm);
  const auto em = RandomEmissions(rng, alphabet, 30, 3.0);
  const int lag = 4;
  OnlineDecoder decoder(search, lag);
  for (int t = 0; t < em.num_frames(); ++t) {
    const auto out = decoder.Push(em.row(t));
    const int committed_frames = std::max(0, t + 1 - lag);
    EXPECT_EQ(decoder.committed_beam().frame_index(), committed_frames);
    if (committed_frames > 0) {
      EXPECT_EQ(out.committed, search.Decode(em.Slice(0, committed_frames)).text);
    }
  }
}

TEST(OnlineDecoderTest, RejectsBadInput) {
  const Alphabet alphabet = SmallAlphabet(2);
  UniformLm lm(alphabet.visible());
  CtcPrefixBeamSearch search(alphabet, Config(4, 0.0, 0.0), lm);
  EXPECT_THROW(OnlineDecoder(search, -1), ValidationError);
  OnlineDecoder decoder(search, 1);
  EXPECT_THROW(decoder.Push(std::vector<double>{1.0}), ValidationError);
  EXPECT_EQ(decoder.frames_seen(), 0);
}

IncrementalOutput Shown(const std::string& text) {
  IncrementalOutput out;
  out.hypothesis = text;
  out.completion = "ignored";
  return out;
}

TEST(ChangesPerFrameTest, Examples) {
  std::vector<IncrementalOutput> growing{Shown("a"), Shown("ab"), Shown("abc")};
  EXPECT_DOUBLE_EQ(ChangesPerFrame(growing), 1.0);

  std::vector<IncrementalOutput> constant(7, Shown("a"));
  EXPECT_DOUBLE_EQ(ChangesPerFrame(constant), 1.0 / 7.0);

  std::vector<IncrementalOutput> rewrite;
  for (const char* s : {"a", "ab", "abc", "abcd", "xyzd", "xyzde", "xyzdef",
                        "xyzdefg", "xyzdefgh", "xyzdefghi"}) {
    rewrite.push_back(Shown(s));
  }
  EXPECT_DOUBLE_EQ(ChangesPerFrame(rewrite), 1.2);

  EXPECT_THROW(ChangesPerFrame({}), ValidationError);
}

}  // namespace
}  // namespace streamctc
