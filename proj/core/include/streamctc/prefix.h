// Copyright 2026 The streamctc Authors. All Rights Reserved.

#ifndef STREAMCTC_PREFIX_H_
#define STREAMCTC_PREFIX_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace streamctc {

// Immutable character string stored as a shared parent chain, so extending
// by one character and copying are O(1) regardless of length. Hypotheses in
// a beam share their common history.
class Prefix {
 public:
  Prefix() = default;
  explicit Prefix(std::string_view text);

  Prefix Extend(char c) const;

  std::size_t size() const { return node_ ? node_->length : 0; }
  bool empty() const { return node_ == nullptr; }
  // Last character; undefined for the empty prefix.
  char back() const { return node_->ch; }
  std::uint64_t hash() const { return node_ ? node_->hash : kEmptyHash; }

  // Hash of Extend(c) without building it.
  std::uint64_t ExtendedHash(char c) const { return Combine(hash(), c); }

  // True if this prefix equals `base` followed by `c`.
  bool IsExtensionOf(const Prefix& base, char c) const;

  std::string str() const;

  // Three-way lexicographic comparison of `a` + `a_next` with `b` + `b_next`
  // (byte order, as std::string). Walks only down to the deepest shared
  // node, so prefixes with a common recent history compare in O(1).
  static int Compare(const Prefix& a, std::optional<char> a_next,
                     const Prefix& b, std::optional<char> b_next);

  friend bool operator==(const Prefix& a, const Prefix& b) {
    return SameString(a.node_.get(), b.node_.get());
  }

 private:
  struct Node {
    std::shared_ptr<const Node> parent;
    char ch = 0;
    std::uint32_t length = 0;
    std::uint64_t hash = 0;
    ~Node();
  };

  static constexpr std::uint64_t kEmptyHash = 0x9e3779b97f4a7c15ULL;
  static std::uint64_t Combine(std::uint64_t h, char c) {
    return (h ^ static_cast<unsigned char>(c)) * 0x100000001b3ULL +
           0x632be59bd9b4e019ULL;
  }
  static bool SameString(const Node* a, const Node* b);

  std::shared_ptr<const Node> node_;
};

struct PrefixHash {
  std::size_t operator()(const Prefix& p) const {
    return static_cast<std::size_t>(p.hash());
  }
};

}  // namespace streamctc

#endif  // STREAMCTC_PREFIX_H_
