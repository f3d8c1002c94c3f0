// Copyright 2026 The streamctc Authors. All Rights Reserved.

#ifndef STREAMCTC_ALPHABET_H_
#define STREAMCTC_ALPHABET_H_

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace streamctc {

// Ordered set of visible single-byte characters plus the CTC blank.
//
// Visible characters occupy indices [0, num_visible()); the blank is always
// the last index. `blank_marker` is only used when the alphabet is written
// to text (it must not collide with a visible character).
class Alphabet {
 public:
  static constexpr char kDefaultBlankMarker = '_';

  // Throws ValidationError on duplicates, an empty visible set, or a blank
  // marker that is also a visible character.
  explicit Alphabet(std::string_view visible,
                    char blank_marker = kDefaultBlankMarker);

  // Lowercase letters, space and apostrophe; the usual lip-reading set.
  static Alphabet Default();

  int num_visible() const { return static_cast<int>(visible_.size()); }
  // Visible characters plus blank.
  int size() const { return num_visible() + 1; }
  int blank_index() const { return num_visible(); }
  char blank_marker() const { return blank_marker_; }

  const std::string& visible() const { return visible_; }

  bool contains(char c) const { return index_[Byte(c)] >= 0; }
  // Index of a visible character, or -1.
  int index_of(char c) const { return index_[Byte(c)]; }
  // Throws ValidationError unless 0 <= index < num_visible().
  char symbol(int index) const;

  // Visible characters followed by the blank marker, as stored in file
  // headers.
  std::string Serialize() const { return visible_ + blank_marker_; }
  // Inverse of Serialize(): the last character is the blank marker.
  static Alphabet Parse(std::string_view text);

  bool operator==(const Alphabet& other) const {
    return visible_ == other.visible_ && blank_marker_ == other.blank_marker_;
  }

 private:
  static std::size_t Byte(char c) {
    return static_cast<std::size_t>(static_cast<unsigned char>(c));
  }

  std::string visible_;
  char blank_marker_;
  std::array<std::int16_t, 256> index_;
};

}  // namespace streamctc

#endif  // STREAMCTC_ALPHABET_H_
