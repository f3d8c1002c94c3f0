// Copyright 2026 The streamctc Authors. All Rights Reserved.

#ifndef STREAMCTC_ONLINE_DECODER_H_
#define STREAMCTC_ONLINE_DECODER_H_

#include <deque>
#include <span>
#include <string>
#include <vector>

#include "streamctc/ctc_beam.h"

namespace streamctc {

// Temporal convolution stack, one odd filter width per layer.
struct ReceptiveFieldSpec {
  std::vector<int> filter_widths;

  // n layers of the same width.
  static ReceptiveFieldSpec Uniform(int layers, int width);
  ReceptiveFieldSpec Concat(const ReceptiveFieldSpec& other) const;
};

struct ReceptiveField {
  int total = 1;   // R = 2r + 1
  int future = 0;  // r
};

// r = sum (K_i - 1) / 2, R = 2r + 1. Throws ValidationError on an even or
// non-positive width.
ReceptiveField ComputeReceptiveField(const ReceptiveFieldSpec& spec);

// Default cap on LM word completions.
inline constexpr int kMaxCompletionChars = 16;

// Greedy argmax rollout of `lm` after `prefix` until a space (included),
// eos (excluded) or `max_chars`. Empty if `prefix` is empty or already ends
// in a space.
std::string CompleteWord(std::string_view prefix, const CharLm& lm,
                         int max_chars = kMaxCompletionChars);

struct IncrementalOutput {
  int frame_index = 0;          // 1-based count of frames pushed
  Transcript committed;         // best of the committed beam
  Transcript hypothesis;        // best after running the buffered frames
  std::string completion;       // LM word completion of `hypothesis`
  double score = 0.0;           // normalized score of `hypothesis`
  int commits = 0;              // beam steps applied to the committed beam
  int lookahead_steps = 0;      // beam steps run on the lookahead copy
};

// Lagged streaming decoder. Frames are committed to the running beam once
// `lag` newer frames have arrived; every push also runs the buffered frames
// on a copy of the beam as if the utterance ended now. Flush() returns
// exactly what offline decoding of all pushed frames returns.
class OnlineDecoder {
 public:
  // `completion_chars` = 0 disables word completion.
  OnlineDecoder(const CtcPrefixBeamSearch& search, int lag,
                int completion_chars = kMaxCompletionChars);

  IncrementalOutput Push(std::span<const double> frame);
  // Commits every buffered frame and returns the final best transcript.
  DecodeResult Flush();
  // Back to the empty-stream state.
  void Reset();

  int lag() const { return lag_; }
  int frames_seen() const { return frames_seen_; }
  std::size_t buffered() const { return buffer_.size(); }
  const Beam& committed_beam() const { return committed_; }

 private:
  const CtcPrefixBeamSearch& search_;
  int lag_;
  int completion_chars_;
  Beam committed_;
  std::deque<std::vector<double>> buffer_;
  int frames_seen_ = 0;
};

// Mean edit distance between successive displayed hypotheses (completions
// excluded), the first compared against "". Throws ValidationError on an
// empty sequence.
double ChangesPerFrame(std::span<const IncrementalOutput> outputs);

}  // namespace streamctc

#endif  // STREAMCTC_ONLINE_DECODER_H_
