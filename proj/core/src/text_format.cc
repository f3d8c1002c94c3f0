// Copyright 2026 The streamctc Authors. All Rights Reserved.

#include "streamctc/text_format.h"

#include <charconv>
#include <istream>
#include <system_error>

#include "streamctc/error.h"

namespace streamctc {

std::string FormatDouble(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

namespace {

template <typename T>
T ParseNumber(std::string_view text, std::string_view what, std::size_t line) {
  T value{};
  const char* end = text.data() + text.size();
  const auto result = std::from_chars(text.data(), end, value);
  if (text.empty() || result.ec != std::errc() || result.ptr != end) {
    throw ParseError("invalid " + std::string(what) + " '" +
                         std::string(text) + "'",
                     line);
  }
  return value;
}

}  // namespace

double ParseDouble(std::string_view text, std::string_view what,
                   std::size_t line) {
  return ParseNumber<double>(text, what, line);
}

int ParseInt(std::string_view text, std::string_view what, std::size_t line) {
  return ParseNumber<int>(text, what, line);
}

std::uint64_t ParseUnsigned(std::string_view text, std::string_view what,
                            std::size_t line) {
  return ParseNumber<std::uint64_t>(text, what, line);
}

bool LineReader::Next(std::string& line) {
  if (!std::getline(in_, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  ++line_;
  return true;
}

HeaderFields SplitHeader(std::string_view line, std::string_view tag,
                         int num_fields, std::size_t line_number) {
  if (line.substr(0, tag.size()) != tag ||
      line.size() <= tag.size() || line[tag.size()] != ' ') {
    throw ParseError("expected header starting with '" + std::string(tag) +
                         "'",
                     line_number);
  }
  HeaderFields header;
  std::string_view remaining = line.substr(tag.size() + 1);
  for (int i = 0; i < num_fields; ++i) {
    const auto space = remaining.find(' ');
    if (space == std::string_view::npos) {
      if (i + 1 == num_fields && !remaining.empty()) {
        header.fields.emplace_back(remaining);
        remaining = {};
        break;
      }
      throw ParseError("header is missing fields", line_number);
    }
    header.fields.emplace_back(remaining.substr(0, space));
    remaining = remaining.substr(space + 1);
  }
  header.rest = std::string(remaining);
  return header;
}

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      parts.push_back(line.substr(start));
      return parts;
    }
    parts.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

}  // namespace streamctc
