// Copyright 2026 The streamctc Authors. All Rights Reserved.

#ifndef STREAMCTC_NGRAM_LM_H_
#define STREAMCTC_NGRAM_LM_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "streamctc/alphabet.h"
#include "streamctc/lang_model.h"

namespace streamctc {

inline constexpr char kNgramFormatTag[] = "NGLM v1";
inline constexpr char kEosToken[] = "<eos>";

// Add-k smoothed character n-gram model.
//
// Counts are kept for every history suffix of length < order, so a history
// that was never observed backs off to its longest observed suffix. Every
// (context, token) pair has strictly positive probability.
class NgramLm : public CharLm {
 public:
  // Next-token counts per context; each vector has vocab_size() entries.
  using CountTable = std::map<std::string, std::vector<std::uint64_t>>;

  NgramLm(std::string visible, int order, double smoothing, CountTable counts);

  int order() const { return order_; }
  double smoothing() const { return smoothing_; }
  const CountTable& counts() const { return counts_; }

  LmState InitialState() const override { return LmState(id(), {}); }

  // Longest suffix of `history` with observed counts ("" if none).
  std::string BackoffContext(const std::string& history) const;

 protected:
  void DoNextLogProbs(const LmState& state,
                      std::span<double> out) const override;
  LmState DoAdvance(const LmState& state, int token) const override;

 private:
  int order_;
  double smoothing_;
  CountTable counts_;
  std::unordered_map<std::string, std::vector<double>> log_probs_;
  std::vector<double> uniform_;
};

// Lowercases, maps whitespace to ' ', drops characters outside `alphabet`,
// collapses runs of spaces and trims.
std::string NormalizeCorpusLine(std::string_view line,
                                const Alphabet& alphabet);

// Counts n-grams over the normalized lines of `corpus`; each line ends with
// an implicit eos. Throws ValidationError if no line survives normalization
// or the parameters are invalid (order < 1, smoothing <= 0).
NgramLm TrainNgramLm(std::istream& corpus, const Alphabet& alphabet,
                     int order, double smoothing = 1.0);
NgramLm TrainNgramLm(const std::vector<std::string>& lines,
                     const Alphabet& alphabet, int order,
                     double smoothing = 1.0);

// NGLM v1 text format:
//   NGLM v1 <order> <k> <visible characters>
//   <context> TAB <char or <eos>> TAB <count>     (sorted, non-zero only)
//   end TAB <number of count lines>
void SaveNgramLm(const NgramLm& lm, std::ostream& out);
// Throws ParseError (with line number) on malformed input.
NgramLm LoadNgramLm(std::istream& in);

}  // namespace streamctc

#endif  // STREAMCTC_NGRAM_LM_H_
