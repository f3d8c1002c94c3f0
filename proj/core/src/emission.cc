// Copyright 2026 The streamctc Authors. All Rights Reserved.

#include "streamctc/emission.h"

#include <cmath>

#include "streamctc/error.h"

namespace streamctc {

void ValidateRow(std::span<const double> row, int num_symbols) {
  if (static_cast<int>(row.size()) != num_symbols) {
    throw ValidationError("emission row has " + std::to_string(row.size()) +
                          " entries, expected " +
                          std::to_string(num_symbols));
  }
  double sum = 0.0;
  for (double p : row) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw ValidationError("emission entry " + std::to_string(p) +
                            " outside [0,1]");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kRowSumTolerance) {
    throw ValidationError("emission row sums to " + std::to_string(sum));
  }
}

void ValidateTranscript(std::string_view text, const Alphabet& alphabet) {
  for (char c : text) {
    if (!alphabet.contains(c)) {
      throw ValidationError(std::string("character '") + c +
                            "' is not in the alphabet");
    }
  }
}

EmissionMatrix::EmissionMatrix(Alphabet alphabet, std::vector<double> values)
    : alphabet_(std::move(alphabet)), values_(std::move(values)) {
  const auto n = static_cast<std::size_t>(alphabet_.size());
  if (values_.size() % n != 0) {
    throw ValidationError("emission value count is not a multiple of " +
                          std::to_string(n));
  }
  num_frames_ = static_cast<int>(values_.size() / n);
  for (int t = 0; t < num_frames_; ++t) {
    try {
      ValidateRow(row(t), num_symbols());
    } catch (const ValidationError& e) {
      throw ValidationError("frame " + std::to_string(t) + ": " + e.what());
    }
  }
}

namespace {

std::vector<double> Flatten(const std::vector<std::vector<double>>& rows,
                            int width) {
  std::vector<double> flat;
  flat.reserve(rows.size() * static_cast<std::size_t>(width));
  for (std::size_t t = 0; t < rows.size(); ++t) {
    if (static_cast<int>(rows[t].size()) != width) {
      throw ValidationError("frame " + std::to_string(t) + " has " +
                            std::to_string(rows[t].size()) +
                            " entries, expected " + std::to_string(width));
    }
    flat.insert(flat.end(), rows[t].begin(), rows[t].end());
  }
  return flat;
}

}  // namespace

EmissionMatrix::EmissionMatrix(Alphabet alphabet,
                               const std::vector<std::vector<double>>& rows)
    : EmissionMatrix(alphabet, Flatten(rows, alphabet.size())) {}

EmissionMatrix EmissionMatrix::Slice(int begin, int end) const {
  if (begin < 0 || end > num_frames_ || begin > end) {
    throw ValidationError("invalid frame range");
  }
  const auto n = static_cast<std::size_t>(num_symbols());
  return EmissionMatrix(
      alphabet_,
      std::vector<double>(values_.begin() + begin * n,
                          values_.begin() + end * n));
}

}  // namespace streamctc
