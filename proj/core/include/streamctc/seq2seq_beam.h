// Copyright 2026 The streamctc Authors. All Rights Reserved.

#ifndef STREAMCTC_SEQ2SEQ_BEAM_H_
#define STREAMCTC_SEQ2SEQ_BEAM_H_

#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "streamctc/lang_model.h"

namespace streamctc {

inline constexpr char kScorerFormatTag[] = "S2SM v1";

// Left-to-right character model p(y_i | y_<i, x). Token order matches
// CharLm: visible characters, then eos.
class AutoregressiveScorer {
 public:
  virtual ~AutoregressiveScorer() = default;

  virtual const std::string& visible() const = 0;
  int vocab_size() const { return static_cast<int>(visible().size()) + 1; }
  int eos_index() const { return static_cast<int>(visible().size()); }

  // Log-probabilities of every token after `prefix`.
  virtual void NextLogProbs(std::string_view prefix,
                            std::span<double> out) const = 0;
};

// Table-driven scorer: explicit next-token distributions per prefix,
// uniform for prefixes not in the table.
class TableScorer : public AutoregressiveScorer {
 public:
  // prefix -> probabilities over vocab_size() tokens.
  using Table = std::map<std::string, std::vector<double>>;

  // Throws ValidationError if a row has the wrong size, negative entries,
  // does not sum to 1 within 1e-9, or a prefix uses unknown characters.
  TableScorer(std::string visible, Table table);

  const std::string& visible() const override { return visible_; }
  const Table& table() const { return table_; }

  void NextLogProbs(std::string_view prefix,
                    std::span<double> out) const override;

 private:
  std::string visible_;
  Table table_;
};

// S2SM v1:
//   S2SM v1 <visible characters>
//   <prefix> TAB <char or <eos>> TAB <probability>   (non-zero only)
//   end TAB <number of entry lines>
void SaveTableScorer(const TableScorer& scorer, std::ostream& out);
TableScorer LoadTableScorer(std::istream& in);

struct S2SConfig {
  int width = 15;
  double alpha = 0.1;
  double beta = 0.7;
  int max_length = 100;

  void Validate() const;
};

// ((5 + length) / 6)^beta.
double LengthPenalty(std::size_t length, double beta);

// (log p(y|x) + alpha * log p_LM(y)) / LengthPenalty(|y|, beta), with |y|
// counting visible characters.
double Seq2SeqScore(double log_p, double lm_log_p, std::size_t length,
                    double alpha, double beta);

struct S2SResult {
  std::string text;
  double score = 0.0;
  double log_p = 0.0;     // scorer log-probability including eos
  double lm_log_p = 0.0;  // LM log-probability including eos
};

// Beam search over scorer and LM (shallow fusion). Each step expands every
// live hypothesis by all tokens; the `width` best expansions by fused score
// survive and those ending in eos are finalized. Hypotheses of
// `max_length` characters may only emit eos. Ties break on ascending text.
S2SResult Seq2SeqDecode(const AutoregressiveScorer& scorer, const CharLm& lm,
                        const S2SConfig& config);

}  // namespace streamctc

#endif  // STREAMCTC_SEQ2SEQ_BEAM_H_
