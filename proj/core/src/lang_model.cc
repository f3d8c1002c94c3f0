// Copyright 2026 The streamctc Authors. All Rights Reserved.

#include "streamctc/lang_model.h"

#include <atomic>
#include <cmath>

#include "streamctc/error.h"

namespace streamctc {

namespace {

std::uint64_t NextLmId() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1, std::memory_order_relaxed);
}

}  // namespace

CharLm::CharLm(std::string visible)
    : visible_(std::move(visible)), token_index_(256, -1), id_(NextLmId()) {
  if (visible_.empty()) {
    throw ValidationError("language model needs at least one character");
  }
  for (std::size_t i = 0; i < visible_.size(); ++i) {
    auto& slot = token_index_[static_cast<unsigned char>(visible_[i])];
    if (slot >= 0) {
      throw ValidationError(std::string("duplicate LM character '") +
                            visible_[i] + "'");
    }
    slot = static_cast<std::int16_t>(i);
  }
}

int CharLm::token_of(char c) const {
  return token_index_[static_cast<unsigned char>(c)];
}

void CharLm::CheckOwner(const LmState& state) const {
  if (state.owner() != id_) {
    throw ValidationError("LM state belongs to a different model instance");
  }
}

int CharLm::CheckedToken(char c) const {
  const int token = token_of(c);
  if (token < 0) {
    throw ValidationError(std::string("character '") + c +
                          "' is not in the LM alphabet");
  }
  return token;
}

void CharLm::NextLogProbs(const LmState& state, std::span<double> out) const {
  CheckOwner(state);
  if (static_cast<int>(out.size()) != vocab_size()) {
    throw ValidationError("LM output buffer has wrong size");
  }
  DoNextLogProbs(state, out);
}

std::pair<double, LmState> CharLm::ScoreAndAdvance(const LmState& state,
                                                   char c) const {
  CheckOwner(state);
  const int token = CheckedToken(c);
  std::vector<double> scores(static_cast<std::size_t>(vocab_size()));
  DoNextLogProbs(state, scores);
  return {scores[static_cast<std::size_t>(token)], DoAdvance(state, token)};
}

LmState CharLm::Advance(const LmState& state, char c) const {
  CheckOwner(state);
  return DoAdvance(state, CheckedToken(c));
}

double CharLm::ScoreEos(const LmState& state) const {
  CheckOwner(state);
  std::vector<double> scores(static_cast<std::size_t>(vocab_size()));
  DoNextLogProbs(state, scores);
  return scores.back();
}

LmState CharLm::StateFor(std::string_view text) const {
  LmState state = InitialState();
  for (char c : text) state = Advance(state, c);
  return state;
}

void UniformLm::DoNextLogProbs(const LmState&, std::span<double> out) const {
  const double value = -std::log(static_cast<double>(vocab_size()));
  for (double& v : out) v = value;
}

LmState UniformLm::DoAdvance(const LmState& state, int) const {
  return state;
}

}  // namespace streamctc
