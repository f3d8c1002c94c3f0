// Copyright 2026 The streamctc Authors. All Rights Reserved.

#include "streamctc/seq2seq_beam.h"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>

#include "streamctc/error.h"
#include "streamctc/log_math.h"
#include "streamctc/ngram_lm.h"
#include "streamctc/text_format.h"

namespace streamctc {

namespace {

constexpr double kScorerSumTolerance = 1e-9;

int TokenIndex(const std::string& visible, std::string_view token) {
  if (token == kEosToken) return static_cast<int>(visible.size());
  if (token.size() != 1) return -1;
  const auto pos = visible.find(token[0]);
  return pos == std::string::npos ? -1 : static_cast<int>(pos);
}

}  // namespace

TableScorer::TableScorer(std::string visible, Table table)
    : visible_(std::move(visible)), table_(std::move(table)) {
  if (visible_.empty()) throw ValidationError("scorer alphabet is empty");
  for (std::size_t i = 0; i < visible_.size(); ++i) {
    if (visible_.find(visible_[i], i + 1) != std::string::npos) {
      throw ValidationError("duplicate scorer character");
    }
  }
  const auto vocab = static_cast<std::size_t>(vocab_size());
  for (const auto& [prefix, probs] : table_) {
    for (char c : prefix) {
      if (visible_.find(c) == std::string::npos) {
        throw ValidationError("prefix '" + prefix +
                              "' uses a character outside the alphabet");
      }
    }
    if (probs.size() != vocab) {
      throw ValidationError("distribution for '" + prefix +
                            "' has wrong size");
    }
    double sum = 0.0;
    for (double p : probs) {
      if (!(p >= 0.0 && p <= 1.0)) {
        throw ValidationError("probability outside [0,1] for '" + prefix +
                              "'");
      }
      sum += p;
    }
    if (std::abs(sum - 1.0) > kScorerSumTolerance) {
      throw ValidationError("distribution for '" + prefix + "' sums to " +
                            std::to_string(sum));
    }
  }
}

void TableScorer::NextLogProbs(std::string_view prefix,
                               std::span<double> out) const {
  auto it = table_.find(std::string(prefix));
  if (it == table_.end()) {
    std::fill(out.begin(), out.end(),
              -std::log(static_cast<double>(vocab_size())));
    return;
  }
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = SafeLog(it->second[i]);
}

void SaveTableScorer(const TableScorer& scorer, std::ostream& out) {
  out << kScorerFormatTag << ' ' << scorer.visible() << '\n';
  std::size_t entries = 0;
  for (const auto& [prefix, probs] : scorer.table()) {
    for (std::size_t token = 0; token < probs.size(); ++token) {
      if (probs[token] == 0.0) continue;
      out << prefix << '\t';
      if (static_cast<int>(token) == scorer.eos_index()) {
        out << kEosToken;
      } else {
        out << scorer.visible()[token];
      }
      out << '\t' << FormatDouble(probs[token]) << '\n';
      ++entries;
    }
  }
  out << "end\t" << entries << '\n';
}

TableScorer LoadTableScorer(std::istream& in) {
  LineReader reader(in);
  std::string line;
  if (!reader.Next(line)) throw ParseError("missing S2SM header", 1);
  const std::string tag = std::string(kScorerFormatTag) + ' ';
  if (line.compare(0, tag.size(), tag) != 0 || line.size() == tag.size()) {
    throw ParseError("expected header 'S2SM v1 <alphabet>'", reader.line());
  }
  const std::string visible = line.substr(tag.size());
  const auto vocab = visible.size() + 1;

  TableScorer::Table table;
  std::size_t entries = 0;
  bool ended = false;
  while (reader.Next(line)) {
    if (ended) throw ParseError("content after end marker", reader.line());
    const auto parts = SplitTabs(line);
    if (parts.size() == 2 && parts[0] == "end") {
      const auto declared =
          ParseUnsigned(parts[1], "entry count", reader.line());
      if (declared != entries) {
        throw ParseError("end marker declares " + std::to_string(declared) +
                             " entries, read " + std::to_string(entries),
                         reader.line());
      }
      ended = true;
      continue;
    }
    if (parts.size() != 3) {
      throw ParseError("expected prefix<TAB>char<TAB>probability",
                       reader.line());
    }
    const int token = TokenIndex(visible, parts[1]);
    if (token < 0) {
      throw ParseError("unknown token '" + std::string(parts[1]) + "'",
                       reader.line());
    }
    auto& row = table[std::string(parts[0])];
    if (row.empty()) row.assign(vocab, 0.0);
    if (row[static_cast<std::size_t>(token)] != 0.0) {
      throw ParseError("duplicate entry", reader.line());
    }
    row[static_cast<std::size_t>(token)] =
        ParseDouble(parts[2], "probability", reader.line());
    ++entries;
  }
  if (!ended) throw ParseError("truncated file: missing end marker", 0);
  try {
    return TableScorer(visible, std::move(table));
  } catch (const ValidationError& e) {
    throw ParseError(e.what(), 0);
  }
}

void S2SConfig::Validate() const {
  if (width < 1) throw ValidationError("beam width must be >= 1");
  if (max_length < 1) throw ValidationError("max_length must be >= 1");
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw ValidationError("alpha must be a finite value >= 0");
  }
  if (!std::isfinite(beta)) throw ValidationError("beta must be finite");
}

double LengthPenalty(std::size_t length, double beta) {
  return std::pow((5.0 + static_cast<double>(length)) / 6.0, beta);
}

double Seq2SeqScore(double log_p, double lm_log_p, std::size_t length,
                    double alpha, double beta) {
  const double fused = alpha == 0.0 ? log_p : log_p + alpha * lm_log_p;
  return fused / LengthPenalty(length, beta);
}

namespace {

struct S2SHypothesis {
  std::string text;
  double log_p = 0.0;
  double lm_log_p = 0.0;
  LmState lm_state;
  bool finished = false;
  double score = 0.0;
};

bool Better(const S2SHypothesis& a, const S2SHypothesis& b) {
  if (a.score != b.score) return a.score > b.score;
  if (a.text != b.text) return a.text < b.text;
  return !a.finished && b.finished;
}

}  // namespace

S2SResult Seq2SeqDecode(const AutoregressiveScorer& scorer, const CharLm& lm,
                        const S2SConfig& config) {
  config.Validate();
  if (scorer.visible() != lm.visible()) {
    throw ValidationError("scorer and LM alphabets differ");
  }
  const auto vocab = static_cast<std::size_t>(scorer.vocab_size());
  const auto eos = static_cast<std::size_t>(scorer.eos_index());

  std::vector<S2SHypothesis> live(1);
  live[0].lm_state = lm.InitialState();
  std::vector<S2SHypothesis> finished;
  std::vector<double> model_scores(vocab);
  std::vector<double> lm_scores(vocab);

  while (!live.empty()) {
    std::vector<S2SHypothesis> expansions;
    for (const auto& h : live) {
      scorer.NextLogProbs(h.text, model_scores);
      lm.NextLogProbs(h.lm_state, lm_scores);
      const bool full = static_cast<int>(h.text.size()) >= config.max_length;
      for (std::size_t token = 0; token < vocab; ++token) {
        if (full && token != eos) continue;
        if (model_scores[token] == kLogZero) continue;
        S2SHypothesis next;
        next.text = h.text;
        next.log_p = h.log_p + model_scores[token];
        next.lm_log_p = h.lm_log_p + lm_scores[token];
        if (token == eos) {
          next.finished = true;
        } else {
          next.text.push_back(scorer.visible()[token]);
        }
        next.score = Seq2SeqScore(next.log_p, next.lm_log_p, next.text.size(),
                                  config.alpha, config.beta);
        if (!next.finished) {
          next.lm_state = lm.Advance(h.lm_state, next.text.back());
        }
        expansions.push_back(std::move(next));
      }
    }
    const auto keep = std::min(expansions.size(),
                               static_cast<std::size_t>(config.width));
    std::partial_sort(expansions.begin(),
                      expansions.begin() + static_cast<std::ptrdiff_t>(keep),
                      expansions.end(), Better);
    live.clear();
    for (std::size_t i = 0; i < keep; ++i) {
      if (expansions[i].finished) {
        finished.push_back(std::move(expansions[i]));
      } else {
        live.push_back(std::move(expansions[i]));
      }
    }
  }

  if (finished.empty()) return {"", kLogZero, kLogZero, kLogZero};
  const auto best = std::min_element(finished.begin(), finished.end(), Better);
  return {best->text, best->score, best->log_p, best->lm_log_p};
}

}  // namespace streamctc
