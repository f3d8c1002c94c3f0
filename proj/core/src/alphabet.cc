// Copyright 2026 The streamctc Authors. All Rights Reserved.

#include "streamctc/alphabet.h"

#include "streamctc/error.h"

namespace streamctc {

Alphabet::Alphabet(std::string_view visible, char blank_marker)
    : visible_(visible), blank_marker_(blank_marker) {
  index_.fill(-1);
  if (visible_.empty()) {
    throw ValidationError("alphabet needs at least one visible character");
  }
  for (std::size_t i = 0; i < visible_.size(); ++i) {
    const char c = visible_[i];
    if (c == '\n' || c == '\r' || c == '\t' || c == '\0') {
      throw ValidationError("alphabet may not contain control characters");
    }
    if (index_[Byte(c)] >= 0) {
      throw ValidationError(std::string("duplicate alphabet character '") +
                            c + "'");
    }
    index_[Byte(c)] = static_cast<std::int16_t>(i);
  }
  if (index_[Byte(blank_marker_)] >= 0) {
    throw ValidationError(std::string("blank marker '") + blank_marker_ +
                          "' is also a visible character");
  }
}

Alphabet Alphabet::Default() {
  return Alphabet("abcdefghijklmnopqrstuvwxyz '");
}

char Alphabet::symbol(int index) const {
  if (index < 0 || index >= num_visible()) {
    throw ValidationError("symbol index " + std::to_string(index) +
                          " is not a visible character");
  }
  return visible_[static_cast<std::size_t>(index)];
}

Alphabet Alphabet::Parse(std::string_view text) {
  if (text.size() < 2) {
    throw ValidationError("alphabet string must hold a visible character "
                          "and a blank marker");
  }
  return Alphabet(text.substr(0, text.size() - 1), text.back());
}

}  // namespace streamctc
