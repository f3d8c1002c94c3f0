// Copyright 2026 The streamctc Authors. All Rights Reserved.

#include "streamctc/metrics.h"

#include "streamctc/error.h"

namespace streamctc {

EditAlignment AlignChars(std::string_view ref, std::string_view hyp) {
  return AlignEdits<char>(std::span<const char>(ref.data(), ref.size()),
                          std::span<const char>(hyp.data(), hyp.size()));
}

std::size_t CharEditDistance(std::string_view a, std::string_view b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = std::min({diag + (a[i - 1] == b[j - 1] ? 0 : 1), up + 1,
                         row[j - 1] + 1});
      diag = up;
    }
  }
  return row[b.size()];
}

std::vector<std::string> WordTokens(std::string_view text) {
  std::vector<std::string> words;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto space = text.find(' ', start);
    if (space == std::string_view::npos) space = text.size();
    if (space > start) words.emplace_back(text.substr(start, space - start));
    start = space + 1;
  }
  return words;
}

double WordErrorRate(std::string_view ref, std::string_view hyp) {
  const auto r = WordTokens(ref);
  const auto h = WordTokens(hyp);
  if (r.empty()) throw ValidationError("WER undefined for an empty reference");
  const auto alignment = AlignEdits<std::string>(r, h);
  return static_cast<double>(alignment.distance) /
         static_cast<double>(r.size());
}

double CharErrorRate(std::string_view ref, std::string_view hyp) {
  if (ref.empty()) throw ValidationError("CER undefined for an empty reference");
  return static_cast<double>(CharEditDistance(ref, hyp)) /
         static_cast<double>(ref.size());
}

double ErrorTally::rate() const {
  if (reference_length == 0) {
    throw ValidationError("error rate undefined for an empty reference");
  }
  return static_cast<double>(edits) / static_cast<double>(reference_length);
}

ConfusionMatrix::ConfusionMatrix(Alphabet alphabet)
    : alphabet_(std::move(alphabet)),
      counts_(static_cast<std::size_t>(alphabet_.num_visible() *
                                       alphabet_.num_visible()),
              0.0) {}

std::size_t ConfusionMatrix::Cell(char ref, char hyp) const {
  return static_cast<std::size_t>(alphabet_.index_of(ref) *
                                      alphabet_.num_visible() +
                                  alphabet_.index_of(hyp));
}

void ConfusionMatrix::Add(std::string_view ref, std::string_view hyp) {
  for (const auto& step : AlignChars(ref, hyp).steps) {
    if (step.op != EditOp::kSubstitute) continue;
    const char r = ref[static_cast<std::size_t>(step.ref_index)];
    const char h = hyp[static_cast<std::size_t>(step.hyp_index)];
    if (!alphabet_.contains(r) || !alphabet_.contains(h)) continue;
    counts_[Cell(r, h)] += 1.0;
  }
}

double ConfusionMatrix::count(char ref, char hyp) const {
  if (!alphabet_.contains(ref) || !alphabet_.contains(hyp)) return 0.0;
  return counts_[Cell(ref, hyp)];
}

double ConfusionMatrix::row_total(char ref) const {
  double total = 0.0;
  for (char h : alphabet_.visible()) total += count(ref, h);
  return total;
}

double ConfusionMatrix::normalized(char ref, char hyp) const {
  const double total = row_total(ref);
  return total > 0.0 ? count(ref, hyp) / total : 0.0;
}

ConfusionMatrix BuildConfusionMatrix(
    std::span<const std::pair<std::string, std::string>> pairs,
    const Alphabet& alphabet) {
  ConfusionMatrix matrix(alphabet);
  for (const auto& [ref, hyp] : pairs) matrix.Add(ref, hyp);
  return matrix;
}

}  // namespace streamctc
