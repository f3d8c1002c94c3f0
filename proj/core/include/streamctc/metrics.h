// Copyright 2026 The streamctc Authors. All Rights Reserved.

#ifndef STREAMCTC_METRICS_H_
#define STREAMCTC_METRICS_H_

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "streamctc/alphabet.h"

namespace streamctc {

enum class EditOp { kMatch, kSubstitute, kDelete, kInsert };

struct EditStep {
  EditOp op;
  int ref_index;  // -1 for kInsert
  int hyp_index;  // -1 for kDelete
};

struct EditAlignment {
  std::vector<EditStep> steps;  // in reference order
  std::size_t distance = 0;
};

// Minimal Levenshtein alignment of `hyp` against `ref`. Among minimal
// alignments the backtrace prefers match, then substitute, delete, insert.
template <typename T>
EditAlignment AlignEdits(std::span<const T> ref, std::span<const T> hyp) {
  const std::size_t n = ref.size();
  const std::size_t m = hyp.size();
  std::vector<std::size_t> d((n + 1) * (m + 1));
  auto at = [&](std::size_t i, std::size_t j) -> std::size_t& {
    return d[i * (m + 1) + j];
  };
  for (std::size_t i = 0; i <= n; ++i) at(i, 0) = i;
  for (std::size_t j = 0; j <= m; ++j) at(0, j) = j;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      const std::size_t diag = at(i - 1, j - 1) + (ref[i - 1] == hyp[j - 1] ? 0 : 1);
      at(i, j) = std::min({diag, at(i - 1, j) + 1, at(i, j - 1) + 1});
    }
  }

  EditAlignment out;
  out.distance = at(n, m);
  std::size_t i = n;
  std::size_t j = m;
  while (i > 0 || j > 0) {
    const std::size_t here = at(i, j);
    const int ri = static_cast<int>(i) - 1;
    const int hj = static_cast<int>(j) - 1;
    if (i > 0 && j > 0 && ref[i - 1] == hyp[j - 1] && here == at(i - 1, j - 1)) {
      out.steps.push_back({EditOp::kMatch, ri, hj});
      --i, --j;
    } else if (i > 0 && j > 0 && here == at(i - 1, j - 1) + 1) {
      out.steps.push_back({EditOp::kSubstitute, ri, hj});
      --i, --j;
    } else if (i > 0 && here == at(i - 1, j) + 1) {
      out.steps.push_back({EditOp::kDelete, ri, -1});
      --i;
    } else {
      out.steps.push_back({EditOp::kInsert, -1, hj});
      --j;
    }
  }
  std::reverse(out.steps.begin(), out.steps.end());
  return out;
}

EditAlignment AlignChars(std::string_view ref, std::string_view hyp);
std::size_t CharEditDistance(std::string_view a, std::string_view b);

// Splits on spaces, dropping empty tokens.
std::vector<std::string> WordTokens(std::string_view text);

// Edit distance over words / characters divided by the reference length.
// Throws ValidationError for an empty reference.
double WordErrorRate(std::string_view ref, std::string_view hyp);
double CharErrorRate(std::string_view ref, std::string_view hyp);

// Accumulates edit counts over a corpus.
struct ErrorTally {
  std::size_t edits = 0;
  std::size_t reference_length = 0;

  void Add(std::size_t e, std::size_t len) {
    edits += e;
    reference_length += len;
  }
  // Throws ValidationError when nothing was accumulated.
  double rate() const;
};

// Substitution counts from minimal character alignments, normalized per
// reference character. Characters outside the alphabet are ignored.
class ConfusionMatrix {
 public:
  explicit ConfusionMatrix(Alphabet alphabet);

  void Add(std::string_view ref, std::string_view hyp);

  const Alphabet& alphabet() const { return alphabet_; }
  double count(char ref, char hyp) const;
  // Row-normalized entry; rows without substitutions are all zero.
  double normalized(char ref, char hyp) const;
  double row_total(char ref) const;

 private:
  std::size_t Cell(char ref, char hyp) const;

  Alphabet alphabet_;
  std::vector<double> counts_;
};

ConfusionMatrix BuildConfusionMatrix(
    std::span<const std::pair<std::string, std::string>> pairs,
    const Alphabet& alphabet);

}  // namespace streamctc

#endif  // STREAMCTC_METRICS_H_
