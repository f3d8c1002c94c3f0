// Copyright 2026 The streamctc Authors. All Rights Reserved.

#ifndef STREAMCTC_CTC_BEAM_H_
#define STREAMCTC_CTC_BEAM_H_

#include <span>
#include <vector>

#include "streamctc/alphabet.h"
#include "streamctc/emission.h"
#include "streamctc/lang_model.h"
#include "streamctc/prefix.h"

namespace streamctc {

struct BeamConfig {
  int width = 100;
  // LM weight; each new character contributes alpha * log p_LM(c | s).
  double alpha = 0.5;
  // Length normalization exponent: hypotheses are ranked by
  // log p(s) / max(1, |s|)^beta.
  double beta = 0.1;

  // Throws ValidationError for width < 1 or negative/non-finite weights.
  void Validate() const;
};

struct Hypothesis {
  Prefix prefix;
  double log_pb = 0.0;   // paths ending in blank
  double log_pnb = 0.0;  // paths ending in the last character
  LmState lm_state;
  double lm_logprob = 0.0;  // sum of log p_LM over the prefix characters

  double log_prob() const;
};

// log p / max(1, length)^beta.
double NormalizedScore(double log_prob, std::size_t length, double beta);

// At most `width` hypotheses with distinct prefixes, best first.
class Beam {
 public:
  Beam() = default;
  Beam(std::vector<Hypothesis> hypotheses, int frame_index, double beta)
      : hypotheses_(std::move(hypotheses)),
        frame_index_(frame_index),
        beta_(beta) {}

  const std::vector<Hypothesis>& hypotheses() const { return hypotheses_; }
  std::size_t size() const { return hypotheses_.size(); }
  // Number of frames consumed.
  int frame_index() const { return frame_index_; }

  const Hypothesis& best() const { return hypotheses_.front(); }
  double score(const Hypothesis& h) const {
    return NormalizedScore(h.log_prob(), h.prefix.size(), beta_);
  }
  double best_score() const { return score(best()); }

 private:
  std::vector<Hypothesis> hypotheses_;
  int frame_index_ = 0;
  double beta_ = 0.0;
};

struct DecodeResult {
  Transcript text;
  double score = 0.0;
};

// CTC prefix beam search with shallow LM fusion.
//
// Every step extends each prefix by blank, by a repeat of its last
// character and by every visible character; repeats of the last character
// only extend paths ending in blank. Candidates with zero probability are
// dropped and the `width` best survive, ties broken by ascending prefix.
// The LM must cover every visible character of the alphabet; eos is never
// scored here.
class CtcPrefixBeamSearch {
 public:
  CtcPrefixBeamSearch(Alphabet alphabet, BeamConfig config, const CharLm& lm);

  const Alphabet& alphabet() const { return alphabet_; }
  const BeamConfig& config() const { return config_; }
  const CharLm& lm() const { return lm_; }

  // Empty prefix with probability 1, ending in blank.
  Beam Init() const;
  // Consumes one emission row; `beam` is left untouched.
  Beam Step(const Beam& beam, std::span<const double> frame) const;
  // Init followed by one Step per row. T = 0 gives ("", 0).
  DecodeResult Decode(const EmissionMatrix& em) const;

 private:
  Alphabet alphabet_;
  BeamConfig config_;
  const CharLm& lm_;
  std::vector<int> lm_token_;  // alphabet index -> LM token
};

}  // namespace streamctc

#endif  // STREAMCTC_CTC_BEAM_H_
