// Copyright 2026 The streamctc Authors. All Rights Reserved.
//
// Helpers shared by the versioned text formats (CTCEM, NGLM, S2SM).

#ifndef STREAMCTC_TEXT_FORMAT_H_
#define STREAMCTC_TEXT_FORMAT_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace streamctc {

// Shortest decimal form that parses back to the identical double.
std::string FormatDouble(double value);

double ParseDouble(std::string_view text, std::string_view what,
                   std::size_t line);
int ParseInt(std::string_view text, std::string_view what, std::size_t line);
std::uint64_t ParseUnsigned(std::string_view text, std::string_view what,
                            std::size_t line);

// Reads lines, dropping a trailing '\r'. line() is the 1-based number of the
// last line returned.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}
  bool Next(std::string& line);
  std::size_t line() const { return line_; }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
};

struct HeaderFields {
  std::vector<std::string> fields;
  // Everything after the last field and its single separating space,
  // verbatim (alphabets may contain spaces).
  std::string rest;
};

// Parses "<tag> f1 ... fN <rest>". Throws ParseError if the tag is wrong or
// a field is missing.
HeaderFields SplitHeader(std::string_view line, std::string_view tag,
                         int num_fields, std::size_t line_number);

std::vector<std::string_view> SplitTabs(std::string_view line);

}  // namespace streamctc

#endif  // STREAMCTC_TEXT_FORMAT_H_
