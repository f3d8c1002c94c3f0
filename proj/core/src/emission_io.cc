// Copyright 2026 The streamctc Authors. All Rights Reserved.

#include "streamctc/emission_io.h"

#include <istream>
#include <ostream>

#include "streamctc/error.h"
#include "streamctc/text_format.h"

namespace streamctc {

EmissionHeader ParseEmissionHeader(std::string_view line,
                                   std::size_t line_number) {
  const HeaderFields header =
      SplitHeader(line, kEmissionFormatTag, 2, line_number);
  std::optional<int> frames;
  if (header.fields[0] != "?") {
    frames = ParseInt(header.fields[0], "frame count", line_number);
    if (*frames < 0) throw ParseError("negative frame count", line_number);
  }
  const int width = ParseInt(header.fields[1], "row width", line_number);
  if (static_cast<int>(header.rest.size()) != width) {
    throw ParseError("alphabet '" + header.rest + "' has " +
                         std::to_string(header.rest.size()) +
                         " symbols, header declares " + std::to_string(width),
                     line_number);
  }
  try {
    return {frames, Alphabet::Parse(header.rest)};
  } catch (const ValidationError& e) {
    throw ParseError(e.what(), line_number);
  }
}

std::string FormatEmissionHeader(std::optional<int> num_frames,
                                 const Alphabet& alphabet) {
  return std::string(kEmissionFormatTag) + ' ' +
         (num_frames ? std::to_string(*num_frames) : std::string("?")) + ' ' +
         std::to_string(alphabet.size()) + ' ' + alphabet.Serialize();
}

std::vector<double> ParseEmissionRow(std::string_view line, int width,
                                     std::size_t line_number) {
  std::vector<double> row;
  row.reserve(static_cast<std::size_t>(width));
  std::size_t start = 0;
  while (start < line.size()) {
    auto space = line.find(' ', start);
    if (space == std::string_view::npos) space = line.size();
    if (space > start) {
      row.push_back(ParseDouble(line.substr(start, space - start),
                                "probability", line_number));
    }
    start = space + 1;
  }
  if (static_cast<int>(row.size()) != width) {
    throw ParseError("expected " + std::to_string(width) + " values, found " +
                         std::to_string(row.size()),
                     line_number);
  }
  try {
    ValidateRow(row, width);
  } catch (const ValidationError& e) {
    throw ValidationError("line " + std::to_string(line_number) + ": " +
                          e.what());
  }
  return row;
}

std::string FormatEmissionRow(std::span<const double> row) {
  std::string out;
  for (std::size_t k = 0; k < row.size(); ++k) {
    if (k > 0) out.push_back(' ');
    out += FormatDouble(row[k]);
  }
  return out;
}

void SaveEmissions(const EmissionMatrix& em, std::ostream& out) {
  out << FormatEmissionHeader(em.num_frames(), em.alphabet()) << '\n';
  for (int t = 0; t < em.num_frames(); ++t) {
    out << FormatEmissionRow(em.row(t)) << '\n';
  }
}

EmissionMatrix LoadEmissions(std::istream& in) {
  LineReader reader(in);
  std::string line;
  if (!reader.Next(line)) throw ParseError("missing CTCEM header", 1);
  EmissionHeader header = ParseEmissionHeader(line, reader.line());
  if (!header.num_frames) {
    throw ParseError("emission files must declare their frame count", 1);
  }
  const int expected = *header.num_frames;
  const int width = header.alphabet.size();
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(expected) *
                 static_cast<std::size_t>(width));
  int rows = 0;
  while (reader.Next(line)) {
    if (line.empty()) continue;
    if (rows == expected) {
      throw ParseError("header declares " + std::to_string(expected) +
                           " frames, found more",
                       reader.line());
    }
    const auto row = ParseEmissionRow(line, width, reader.line());
    values.insert(values.end(), row.begin(), row.end());
    ++rows;
  }
  if (rows != expected) {
    throw ParseError("header declares " + std::to_string(expected) +
                         " frames, found " + std::to_string(rows),
                     reader.line());
  }
  return EmissionMatrix(std::move(header.alphabet), std::move(values));
}

}  // namespace streamctc
