// Copyright 2026 The streamctc Authors. All Rights Reserved.
//
// CTCEM v1 emission files:
//
//   CTCEM v1 <T> <|A|+1> <visible characters><blank marker>
//   <|A|+1 space-separated probabilities>      (T rows)
//
// Probabilities are written in shortest round-trip decimal form, so
// save -> load -> save is byte-identical and loading is exact.

#ifndef STREAMCTC_EMISSION_IO_H_
#define STREAMCTC_EMISSION_IO_H_

#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "streamctc/emission.h"

namespace streamctc {

inline constexpr char kEmissionFormatTag[] = "CTCEM v1";

struct EmissionHeader {
  // Absent when the header declares "?" (streams of unknown length).
  std::optional<int> num_frames;
  Alphabet alphabet;
};

// Throws ParseError on a malformed header or one whose declared width
// disagrees with the alphabet.
EmissionHeader ParseEmissionHeader(std::string_view line, std::size_t line_number);
std::string FormatEmissionHeader(std::optional<int> num_frames,
                                 const Alphabet& alphabet);

// One row of `width` numbers. Throws ParseError on bad numbers or count and
// ValidationError if the row is not a probability vector.
std::vector<double> ParseEmissionRow(std::string_view line, int width,
                                     std::size_t line_number);
std::string FormatEmissionRow(std::span<const double> row);

void SaveEmissions(const EmissionMatrix& em, std::ostream& out);
EmissionMatrix LoadEmissions(std::istream& in);

}  // namespace streamctc

#endif  // STREAMCTC_EMISSION_IO_H_
