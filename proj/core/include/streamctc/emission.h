// Copyright 2026 The streamctc Authors. All Rights Reserved.

#ifndef STREAMCTC_EMISSION_H_
#define STREAMCTC_EMISSION_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "streamctc/alphabet.h"

namespace streamctc {

// Maximum deviation of a row sum from 1 accepted anywhere in the library.
// Rows are validated, never renormalized.
inline constexpr double kRowSumTolerance = 1e-6;

// Frame-wise label sequence (visible indices or the blank index).
using Path = std::vector<int>;

// Text over the visible characters of an alphabet.
using Transcript = std::string;

// Throws ValidationError if `row` is not a probability vector over
// `num_symbols` entries (entries in [0,1], sum within kRowSumTolerance).
void ValidateRow(std::span<const double> row, int num_symbols);

// Throws ValidationError if `text` uses a character outside the alphabet.
void ValidateTranscript(std::string_view text, const Alphabet& alphabet);

// T x |A+blank| row-stochastic posterior matrix. Immutable.
class EmissionMatrix {
 public:
  // `values` is row-major, T * alphabet.size() entries.
  EmissionMatrix(Alphabet alphabet, std::vector<double> values);
  EmissionMatrix(Alphabet alphabet,
                 const std::vector<std::vector<double>>& rows);

  const Alphabet& alphabet() const { return alphabet_; }
  int num_frames() const { return num_frames_; }
  int num_symbols() const { return alphabet_.size(); }

  std::span<const double> row(int t) const {
    return {values_.data() + static_cast<std::size_t>(t) * num_symbols(),
            static_cast<std::size_t>(num_symbols())};
  }
  double at(int t, int symbol) const { return row(t)[symbol]; }
  const std::vector<double>& values() const { return values_; }

  // Rows [begin, end) as a new matrix.
  EmissionMatrix Slice(int begin, int end) const;

  bool operator==(const EmissionMatrix& other) const {
    return alphabet_ == other.alphabet_ && values_ == other.values_;
  }

 private:
  Alphabet alphabet_;
  std::vector<double> values_;
  int num_frames_;
};

}  // namespace streamctc

#endif  // STREAMCTC_EMISSION_H_
