// Copyright 2026 The streamctc Authors. All Rights Reserved.

#include "streamctc/ngram_lm.h"

#include <cctype>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>

#include "streamctc/error.h"
#include "streamctc/text_format.h"

namespace streamctc {

NgramLm::NgramLm(std::string visible, int order, double smoothing,
                 CountTable counts)
    : CharLm(std::move(visible)),
      order_(order),
      smoothing_(smoothing),
      counts_(std::move(counts)) {
  if (order_ < 1) throw ValidationError("n-gram order must be >= 1");
  if (!(smoothing_ > 0.0) || !std::isfinite(smoothing_)) {
    throw ValidationError("smoothing constant must be positive");
  }
  const auto vocab = static_cast<std::size_t>(vocab_size());
  uniform_.assign(vocab, -std::log(static_cast<double>(vocab)));
  for (const auto& [context, row] : counts_) {
    if (static_cast<int>(context.size()) >= order_) {
      throw ValidationError("context '" + context + "' is too long for order " +
                            std::to_string(order_));
    }
    for (char c : context) {
      if (token_of(c) < 0) {
        throw ValidationError(std::string("context character '") + c +
                              "' is not in the LM alphabet");
      }
    }
    if (row.size() != vocab) {
      throw ValidationError("count row for '" + context + "' has wrong size");
    }
    std::uint64_t total = 0;
    for (auto n : row) total += n;
    if (total == 0) {
      throw ValidationError("context '" + context + "' has no counts");
    }
    const double denom =
        static_cast<double>(total) + smoothing_ * static_cast<double>(vocab);
    std::vector<double> logp(vocab);
    for (std::size_t i = 0; i < vocab; ++i) {
      logp[i] = std::log((static_cast<double>(row[i]) + smoothing_) / denom);
    }
    log_probs_.emplace(context, std::move(logp));
  }
}

std::string NgramLm::BackoffContext(const std::string& history) const {
  for (std::size_t drop = 0; drop < history.size(); ++drop) {
    std::string suffix = history.substr(drop);
    if (log_probs_.count(suffix) != 0) return suffix;
  }
  return {};
}

void NgramLm::DoNextLogProbs(const LmState& state,
                             std::span<double> out) const {
  const std::string& history = state.context();
  for (std::size_t drop = 0; drop <= history.size(); ++drop) {
    auto it = log_probs_.find(drop == 0 ? history : history.substr(drop));
    if (it != log_probs_.end()) {
      std::copy(it->second.begin(), it->second.end(), out.begin());
      return;
    }
  }
  std::copy(uniform_.begin(), uniform_.end(), out.begin());
}

LmState NgramLm::DoAdvance(const LmState& state, int token) const {
  if (order_ == 1) return state;
  std::string history = state.context();
  history.push_back(visible()[static_cast<std::size_t>(token)]);
  const auto keep = static_cast<std::size_t>(order_ - 1);
  if (history.size() > keep) history.erase(0, history.size() - keep);
  return LmState(state.owner(), std::move(history));
}

std::string NormalizeCorpusLine(std::string_view line,
                                const Alphabet& alphabet) {
  std::string out;
  out.reserve(line.size());
  bool pending_space = false;
  for (char raw : line) {
    const auto byte = static_cast<unsigned char>(raw);
    if (std::isspace(byte)) {
      pending_space = alphabet.contains(' ');
      continue;
    }
    const char c = static_cast<char>(std::tolower(byte));
    if (!alphabet.contains(c) || c == ' ') continue;
    if (pending_space && !out.empty()) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

namespace {

void CheckTrainingParameters(int order, double smoothing) {
  if (order < 1) throw ValidationError("n-gram order must be >= 1");
  if (!(smoothing > 0.0)) {
    throw ValidationError("smoothing constant must be positive");
  }
}

void CountLine(const std::string& line, int order, int vocab,
               NgramLm::CountTable& counts, const Alphabet& alphabet) {
  const auto max_history = static_cast<std::size_t>(order - 1);
  for (std::size_t i = 0; i <= line.size(); ++i) {
    const int token = i < line.size() ? alphabet.index_of(line[i])
                                      : vocab - 1;
    const std::size_t history = std::min(i, max_history);
    for (std::size_t len = 0; len <= history; ++len) {
      auto& row = counts[line.substr(i - len, len)];
      if (row.empty()) row.assign(static_cast<std::size_t>(vocab), 0);
      ++row[static_cast<std::size_t>(token)];
    }
  }
}

}  // namespace

NgramLm TrainNgramLm(const std::vector<std::string>& lines,
                     const Alphabet& alphabet, int order, double smoothing) {
  CheckTrainingParameters(order, smoothing);
  const int vocab = alphabet.num_visible() + 1;
  NgramLm::CountTable counts;
  bool any = false;
  for (const auto& raw : lines) {
    const std::string line = NormalizeCorpusLine(raw, alphabet);
    if (line.empty()) continue;
    any = true;
    CountLine(line, order, vocab, counts, alphabet);
  }
  if (!any) throw ValidationError("training corpus is empty");
  return NgramLm(alphabet.visible(), order, smoothing, std::move(counts));
}

NgramLm TrainNgramLm(std::istream& corpus, const Alphabet& alphabet, int order,
                     double smoothing) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(corpus, line)) lines.push_back(line);
  return TrainNgramLm(lines, alphabet, order, smoothing);
}

void SaveNgramLm(const NgramLm& lm, std::ostream& out) {
  out << kNgramFormatTag << ' ' << lm.order() << ' '
      << FormatDouble(lm.smoothing()) << ' ' << lm.visible() << '\n';
  std::size_t entries = 0;
  for (const auto& [context, row] : lm.counts()) {
    for (std::size_t token = 0; token < row.size(); ++token) {
      if (row[token] == 0) continue;
      out << context << '\t';
      if (static_cast<int>(token) == lm.eos_index()) {
        out << kEosToken;
      } else {
        out << lm.visible()[token];
      }
      out << '\t' << row[token] << '\n';
      ++entries;
    }
  }
  out << "end\t" << entries << '\n';
}

NgramLm LoadNgramLm(std::istream& in) {
  LineReader reader(in);
  std::string line;
  if (!reader.Next(line)) throw ParseError("missing NGLM header", 1);
  HeaderFields header = SplitHeader(line, kNgramFormatTag, 2, reader.line());
  const int order = ParseInt(header.fields[0], "order", reader.line());
  const double smoothing =
      ParseDouble(header.fields[1], "smoothing", reader.line());
  const std::string visible = header.rest;
  if (visible.empty()) throw ParseError("missing LM alphabet", reader.line());

  std::vector<std::int16_t> token_of(256, -1);
  for (std::size_t i = 0; i < visible.size(); ++i) {
    token_of[static_cast<unsigned char>(visible[i])] =
        static_cast<std::int16_t>(i);
  }
  const auto vocab = visible.size() + 1;

  NgramLm::CountTable counts;
  std::size_t entries = 0;
  bool ended = false;
  while (reader.Next(line)) {
    if (ended) throw ParseError("content after end marker", reader.line());
    const auto parts = SplitTabs(line);
    if (parts.size() == 2 && parts[0] == "end") {
      const auto declared = ParseUnsigned(parts[1], "entry count", reader.line());
      if (declared != entries) {
        throw ParseError("end marker declares " + std::to_string(declared) +
                             " entries, read " + std::to_string(entries),
                         reader.line());
      }
      ended = true;
      continue;
    }
    if (parts.size() != 3) {
      throw ParseError("expected context<TAB>char<TAB>count", reader.line());
    }
    std::size_t token;
    if (parts[1] == kEosToken) {
      token = vocab - 1;
    } else if (parts[1].size() == 1 &&
               token_of[static_cast<unsigned char>(parts[1][0])] >= 0) {
      token = static_cast<std::size_t>(
          token_of[static_cast<unsigned char>(parts[1][0])]);
    } else {
      throw ParseError("unknown token '" + std::string(parts[1]) + "'",
                       reader.line());
    }
    const auto count = ParseUnsigned(parts[2], "count", reader.line());
    if (count == 0) throw ParseError("zero count", reader.line());
    auto& row = counts[std::string(parts[0])];
    if (row.empty()) row.assign(vocab, 0);
    if (row[token] != 0) throw ParseError("duplicate entry", reader.line());
    row[token] = count;
    ++entries;
  }
  if (!ended) throw ParseError("truncated file: missing end marker", 0);
  try {
    return NgramLm(visible, order, smoothing, std::move(counts));
  } catch (const ValidationError& e) {
    throw ParseError(e.what(), 0);
  }
}

}  // namespace streamctc
