// Copyright 2026 The streamctc Authors. All Rights Reserved.

#ifndef STREAMCTC_LANG_MODEL_H_
#define STREAMCTC_LANG_MODEL_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace streamctc {

// Incremental context of a CharLm. Only meaningful to the model instance
// that produced it; copying a state yields an independent state.
class LmState {
 public:
  LmState() = default;
  LmState(std::uint64_t owner, std::string context)
      : owner_(owner), context_(std::move(context)) {}

  std::uint64_t owner() const { return owner_; }
  // Model-defined payload; for n-gram models the retained history.
  const std::string& context() const { return context_; }

  bool operator==(const LmState&) const = default;

 private:
  std::uint64_t owner_ = 0;
  std::string context_;
};

// Character language model over a fixed set of visible characters plus an
// end-of-sentence token. Token indices: visible characters in order, then
// eos at vocab_size() - 1. Implementations are immutable after
// construction and safe to share across threads.
class CharLm {
 public:
  virtual ~CharLm() = default;
  CharLm(const CharLm&) = delete;
  CharLm& operator=(const CharLm&) = delete;
  CharLm(CharLm&&) = default;
  CharLm& operator=(CharLm&&) = default;

  const std::string& visible() const { return visible_; }
  int vocab_size() const { return static_cast<int>(visible_.size()) + 1; }
  int eos_index() const { return static_cast<int>(visible_.size()); }
  // Token index of a visible character, or -1.
  int token_of(char c) const;
  std::uint64_t id() const { return id_; }

  // State for the empty prefix.
  virtual LmState InitialState() const = 0;

  // Writes log p(token | state) for every token into `out`
  // (size vocab_size()).
  void NextLogProbs(const LmState& state, std::span<double> out) const;

  // log p(c | state) and the state for prefix + c. Throws ValidationError
  // if c is not a visible character of this model.
  std::pair<double, LmState> ScoreAndAdvance(const LmState& state,
                                             char c) const;
  LmState Advance(const LmState& state, char c) const;

  // log p(eos | state).
  double ScoreEos(const LmState& state) const;

  // State after feeding every character of `text` from the initial state.
  LmState StateFor(std::string_view text) const;

 protected:
  explicit CharLm(std::string visible);

  virtual void DoNextLogProbs(const LmState& state,
                              std::span<double> out) const = 0;
  virtual LmState DoAdvance(const LmState& state, int token) const = 0;

 private:
  void CheckOwner(const LmState& state) const;
  int CheckedToken(char c) const;

  std::string visible_;
  std::vector<std::int16_t> token_index_;
  std::uint64_t id_;
};

// Every token equally likely, regardless of history.
class UniformLm : public CharLm {
 public:
  explicit UniformLm(std::string visible) : CharLm(std::move(visible)) {}

  LmState InitialState() const override { return LmState(id(), {}); }

 protected:
  void DoNextLogProbs(const LmState& state,
                      std::span<double> out) const override;
  LmState DoAdvance(const LmState& state, int token) const override;
};

}  // namespace streamctc

#endif  // STREAMCTC_LANG_MODEL_H_
