// Copyright 2026 The streamctc Authors. All Rights Reserved.

#include "streamctc/prefix.h"

#include <algorithm>

namespace streamctc {

Prefix::Node::~Node() {
  // Unlink uniquely owned ancestors iteratively; long chains would
  // otherwise recurse once per character.
  std::shared_ptr<const Node> next = std::move(parent);
  while (next && next.use_count() == 1) {
    std::shared_ptr<const Node> grand =
        std::move(const_cast<Node&>(*next).parent);
    next = std::move(grand);
  }
}

Prefix::Prefix(std::string_view text) {
  for (char c : text) *this = Extend(c);
}

Prefix Prefix::Extend(char c) const {
  auto node = std::make_shared<Node>();
  node->parent = node_;
  node->ch = c;
  node->length = static_cast<std::uint32_t>(size() + 1);
  node->hash = Combine(hash(), c);
  Prefix out;
  out.node_ = std::move(node);
  return out;
}

bool Prefix::SameString(const Node* a, const Node* b) {
  if (a == b) return true;
  if (a == nullptr || b == nullptr) return false;
  if (a->length != b->length || a->hash != b->hash) return false;
  while (a != b) {
    if (a->ch != b->ch) return false;
    a = a->parent.get();
    b = b->parent.get();
  }
  return true;
}

bool Prefix::IsExtensionOf(const Prefix& base, char c) const {
  if (!node_ || node_->length != base.size() + 1 || node_->ch != c ||
      node_->hash != base.ExtendedHash(c)) {
    return false;
  }
  return SameString(node_->parent.get(), base.node_.get());
}

int Prefix::Compare(const Prefix& a, std::optional<char> a_next,
                    const Prefix& b, std::optional<char> b_next) {
  // Reads a string from its last character towards the first.
  struct Cursor {
    const Node* node;
    bool pending;  // `tail` sits above `node`
    char tail;
    std::size_t length;

    unsigned char ch() const {
      return static_cast<unsigned char>(pending ? tail : node->ch);
    }
    void Down() {
      if (pending) {
        pending = false;
      } else {
        node = node->parent.get();
      }
      --length;
    }
  };
  Cursor x{a.node_.get(), a_next.has_value(), a_next.value_or(0),
           a.size() + (a_next ? 1 : 0)};
  Cursor y{b.node_.get(), b_next.has_value(), b_next.value_or(0),
           b.size() + (b_next ? 1 : 0)};
  const std::size_t x_length = x.length;
  const std::size_t y_length = y.length;
  while (x.length > y.length) x.Down();
  while (y.length > x.length) y.Down();

  // The last difference seen while walking down is the first one in
  // reading order.
  int order = 0;
  while (x.length > 0) {
    if (!x.pending && !y.pending && x.node == y.node) break;
    if (x.ch() != y.ch()) order = x.ch() < y.ch() ? -1 : 1;
    x.Down();
    y.Down();
  }
  if (order != 0) return order;
  if (x_length == y_length) return 0;
  return x_length < y_length ? -1 : 1;
}

std::string Prefix::str() const {
  std::string out(size(), '\0');
  std::size_t i = out.size();
  for (const Node* n = node_.get(); n != nullptr; n = n->parent.get()) {
    out[--i] = n->ch;
  }
  return out;
}

}  // namespace streamctc
