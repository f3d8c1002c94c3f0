// Copyright 2026 The streamctc Authors. All Rights Reserved.

#include <string>
#include <vector>

#include "benchmark/benchmark.h"
#include "streamctc/ctc.h"
#include "streamctc/ctc_beam.h"
#include "streamctc/emission_sim.h"
#include "streamctc/ngram_lm.h"
#include "streamctc/online_decoder.h"

namespace streamctc {
namespace {

const std::vector<std::string>& Corpus() {
  static const std::vector<std::string> corpus{
      "home to an animal", "we did a different thing", "the cat sat on the mat",
      "it's all right", "there is no way about it", "people say so"};
  return corpus;
}

// Peaky but ambiguous emissions for `frames` frames of repeated corpus text.
EmissionMatrix Emissions(int frames) {
  std::string text;
  for (std::size_t i = 0; text.size() < static_cast<std::size_t>(frames); ++i) {
    text += Corpus()[i % Corpus().size()] + " ";
  }
  SimConfig sim;
  sim.peak_prob = 0.5;
  sim.frames_per_char = 2;
  sim.seed = 1;
  return Simulate(text, Alphabet::Default(), sim);
}

// One beam step at steady state, W = range(0).
void BM_BeamStep(benchmark::State& state) {
  const Alphabet alphabet = Alphabet::Default();
  const auto lm = TrainNgramLm(Corpus(), alphabet, 3);
  BeamConfig config;
  config.width = static_cast<int>(state.range(0));
  const CtcPrefixBeamSearch search(alphabet, config, lm);
  const auto em = Emissions(200);
  Beam beam = search.Init();
  for (int t = 0; t < 100; ++t) beam = search.Step(beam, em.row(t));
  for (auto _ : state) {
    benchmark::DoNotOptimize(search.Step(beam, em.row(100)));
  }
}
BENCHMARK(BM_BeamStep)->Arg(10)->Arg(100)->Unit(benchmark::kMicrosecond);

// One Push (r = 22, W = 100) after range(0) frames; flat across positions
// when per-frame cost does not grow with the stream.
void BM_OnlinePushAt(benchmark::State& state) {
  const Alphabet alphabet = Alphabet::Default();
  const auto lm = TrainNgramLm(Corpus(), alphabet, 3);
  const CtcPrefixBeamSearch search(alphabet, BeamConfig{}, lm);
  const int position = static_cast<int>(state.range(0));
  const auto em = Emissions(position + 100);
  OnlineDecoder decoder(search, 22);
  for (int t = 0; t < position; ++t) decoder.Push(em.row(t));
  const auto frame = em.row(position);
  for (auto _ : state) {
    state.PauseTiming();
    OnlineDecoder copy = decoder;
    state.ResumeTiming();
    benchmark::DoNotOptimize(copy.Push(frame));
  }
}
BENCHMARK(BM_OnlinePushAt)->Arg(100)->Arg(1000)->Arg(3000)->Unit(benchmark::kMillisecond);

// Exact transcript probability via the forward recursion.
void BM_ForwardOracle(benchmark::State& state) {
  const auto em = Emissions(static_cast<int>(state.range(0)));
  const std::string transcript = GreedyDecode(em);
  for (auto _ : state) {
    benchmark::DoNotOptimize(TranscriptProbabilityByForward(em, transcript));
  }
}
BENCHMARK(BM_ForwardOracle)->Arg(100)->Arg(1000)->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace streamctc

BENCHMARK_MAIN();
