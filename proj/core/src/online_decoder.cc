// Copyright 2026 The streamctc Authors. All Rights Reserved.

#include "streamctc/online_decoder.h"

#include <algorithm>

#include "streamctc/error.h"
#include "streamctc/metrics.h"

namespace streamctc {

ReceptiveFieldSpec ReceptiveFieldSpec::Uniform(int layers, int width) {
  if (layers < 0) throw ValidationError("layer count must be >= 0");
  return {std::vector<int>(static_cast<std::size_t>(layers), width)};
}

ReceptiveFieldSpec ReceptiveFieldSpec::Concat(
    const ReceptiveFieldSpec& other) const {
  ReceptiveFieldSpec out = *this;
  out.filter_widths.insert(out.filter_widths.end(),
                           other.filter_widths.begin(),
                           other.filter_widths.end());
  return out;
}

ReceptiveField ComputeReceptiveField(const ReceptiveFieldSpec& spec) {
  ReceptiveField rf;
  for (int width : spec.filter_widths) {
    if (width < 1 || width % 2 == 0) {
      throw ValidationError("filter width " + std::to_string(width) +
                            " must be odd and positive");
    }
    rf.future += (width - 1) / 2;
  }
  rf.total = 2 * rf.future + 1;
  return rf;
}

std::string CompleteWord(std::string_view prefix, const CharLm& lm,
                         int max_chars) {
  std::string out;
  if (prefix.empty() || prefix.back() == ' ' || max_chars <= 0) return out;
  LmState state = lm.StateFor(prefix);
  std::vector<double> scores(static_cast<std::size_t>(lm.vocab_size()));
  while (static_cast<int>(out.size()) < max_chars) {
    lm.NextLogProbs(state, scores);
    const auto best = static_cast<int>(
        std::max_element(scores.begin(), scores.end()) - scores.begin());
    if (best == lm.eos_index()) break;
    const char c = lm.visible()[static_cast<std::size_t>(best)];
    out.push_back(c);
    if (c == ' ') break;
    state = lm.Advance(state, c);
  }
  return out;
}

OnlineDecoder::OnlineDecoder(const CtcPrefixBeamSearch& search, int lag,
                             int completion_chars)
    : search_(search),
      lag_(lag),
      completion_chars_(completion_chars),
      committed_(search.Init()) {
  if (lag_ < 0) throw ValidationError("lag must be >= 0");
}

void OnlineDecoder::Reset() {
  committed_ = search_.Init();
  buffer_.clear();
  frames_seen_ = 0;
}

IncrementalOutput OnlineDecoder::Push(std::span<const double> frame) {
  ValidateRow(frame, search_.alphabet().size());
  buffer_.emplace_back(frame.begin(), frame.end());
  ++frames_seen_;

  IncrementalOutput out;
  out.frame_index = frames_seen_;
  if (static_cast<int>(buffer_.size()) > lag_) {
    committed_ = search_.Step(committed_, buffer_.front());
    buffer_.pop_front();
    out.commits = 1;
  }
  Beam lookahead = committed_;
  for (const auto& row : buffer_) {
    lookahead = search_.Step(lookahead, row);
    ++out.lookahead_steps;
  }
  out.committed = committed_.best().prefix.str();
  out.hypothesis = lookahead.best().prefix.str();
  out.score = lookahead.best_score();
  out.completion = CompleteWord(out.hypothesis, search_.lm(), completion_chars_);
  return out;
}

DecodeResult OnlineDecoder::Flush() {
  while (!buffer_.empty()) {
    committed_ = search_.Step(committed_, buffer_.front());
    buffer_.pop_front();
  }
  if (frames_seen_ == 0) return {"", 0.0};
  return {committed_.best().prefix.str(), committed_.best_score()};
}

double ChangesPerFrame(std::span<const IncrementalOutput> outputs) {
  if (outputs.empty()) {
    throw ValidationError("changes per frame needs at least one output");
  }
  std::size_t total = 0;
  std::string previous;
  for (const auto& out : outputs) {
    total += CharEditDistance(previous, out.hypothesis);
    previous = out.hypothesis;
  }
  return static_cast<double>(total) / static_cast<double>(outputs.size());
}

}  // namespace streamctc
