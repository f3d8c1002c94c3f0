// Copyright 2026 The streamctc Authors. All Rights Reserved.

#include "streamctc/ctc_beam.h"

#include <algorithm>
#include <cmath>
#include <optional>
#include <unordered_map>

#include "streamctc/error.h"
#include "streamctc/log_math.h"

namespace streamctc {

void BeamConfig::Validate() const {
  if (width < 1) throw ValidationError("beam width must be >= 1");
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw ValidationError("alpha must be a finite value >= 0");
  }
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    throw ValidationError("beta must be a finite value >= 0");
  }
}

double Hypothesis::log_prob() const { return LogAdd(log_pb, log_pnb); }

double NormalizedScore(double log_prob, std::size_t length, double beta) {
  if (beta == 0.0 || length <= 1) return log_prob;
  return log_prob / std::pow(static_cast<double>(length), beta);
}

CtcPrefixBeamSearch::CtcPrefixBeamSearch(Alphabet alphabet, BeamConfig config,
                                         const CharLm& lm)
    : alphabet_(std::move(alphabet)), config_(config), lm_(lm) {
  config_.Validate();
  for (char c : alphabet_.visible()) {
    const int token = lm_.token_of(c);
    if (token < 0) {
      throw ValidationError(std::string("LM does not cover character '") + c +
                            "'");
    }
    lm_token_.push_back(token);
  }
}

Beam CtcPrefixBeamSearch::Init() const {
  Hypothesis h;
  h.log_pb = 0.0;
  h.log_pnb = kLogZero;
  h.lm_state = lm_.InitialState();
  return Beam({std::move(h)}, 0, config_.beta);
}

namespace {

// A candidate prefix for the next frame: either a prefix carried over from
// the previous beam (extended == false) or base + ch.
struct CandidateKey {
  const Prefix* base;
  char ch;
  bool extended;
  std::uint64_t hash;
  std::size_t length;
};

struct CandidateKeyHash {
  std::size_t operator()(const CandidateKey& k) const {
    return static_cast<std::size_t>(k.hash);
  }
};

struct CandidateKeyEq {
  bool operator()(const CandidateKey& a, const CandidateKey& b) const {
    if (a.hash != b.hash || a.length != b.length) return false;
    if (a.extended && b.extended) return a.ch == b.ch && *a.base == *b.base;
    if (!a.extended && !b.extended) return *a.base == *b.base;
    const CandidateKey& whole = a.extended ? b : a;
    const CandidateKey& ext = a.extended ? a : b;
    return whole.base->IsExtensionOf(*ext.base, ext.ch);
  }
};

struct Candidate {
  CandidateKey key;
  double log_pb = kLogZero;
  double log_pnb = kLogZero;
  // Previous-beam hypothesis providing the LM state (its own for carried
  // prefixes, the parent's for extensions).
  std::size_t source = 0;
  double lm_logprob = 0.0;
  double score = 0.0;
};

std::optional<char> Tail(const CandidateKey& key) {
  return key.extended ? std::optional<char>(key.ch) : std::nullopt;
}

}  // namespace

Beam CtcPrefixBeamSearch::Step(const Beam& beam,
                               std::span<const double> frame) const {
  ValidateRow(frame, alphabet_.size());
  const int num_visible = alphabet_.num_visible();
  std::vector<double> log_frame(frame.size());
  for (std::size_t k = 0; k < frame.size(); ++k) log_frame[k] = SafeLog(frame[k]);
  const double log_blank =
      log_frame[static_cast<std::size_t>(alphabet_.blank_index())];

  const auto& previous = beam.hypotheses();
  std::vector<Candidate> candidates;
  candidates.reserve(previous.size() * static_cast<std::size_t>(num_visible + 1));
  std::unordered_map<CandidateKey, std::size_t, CandidateKeyHash,
                     CandidateKeyEq>
      index;
  index.reserve(candidates.capacity());

  auto slot = [&](const CandidateKey& key, std::size_t source,
                  double lm_logprob) -> Candidate& {
    auto [it, inserted] = index.try_emplace(key, candidates.size());
    if (inserted) {
      Candidate c;
      c.key = key;
      c.source = source;
      c.lm_logprob = lm_logprob;
      candidates.push_back(std::move(c));
    }
    return candidates[it->second];
  };

  std::vector<double> lm_scores(static_cast<std::size_t>(lm_.vocab_size()));
  for (std::size_t i = 0; i < previous.size(); ++i) {
    const Hypothesis& h = previous[i];
    const double log_p = h.log_prob();
    const bool has_last = !h.prefix.empty();
    const int last = has_last ? alphabet_.index_of(h.prefix.back()) : -1;

    // Blank keeps the prefix; repeating the last character without a
    // blank in between also keeps it.
    double carried_pb = log_p == kLogZero ? kLogZero : log_p + log_blank;
    double carried_pnb = kLogZero;
    if (has_last && h.log_pnb != kLogZero) {
      carried_pnb = h.log_pnb + log_frame[static_cast<std::size_t>(last)];
    }
    if (carried_pb != kLogZero || carried_pnb != kLogZero) {
      Candidate& c = slot(
          {&h.prefix, 0, false, h.prefix.hash(), h.prefix.size()}, i,
          h.lm_logprob);
      c.log_pb = LogAdd(c.log_pb, carried_pb);
      c.log_pnb = LogAdd(c.log_pnb, carried_pnb);
    }

    lm_.NextLogProbs(h.lm_state, lm_scores);
    for (int k = 0; k < num_visible; ++k) {
      const double emit = log_frame[static_cast<std::size_t>(k)];
      // A repeated character must be separated by a blank.
      const double base = k == last ? h.log_pb : log_p;
      if (emit == kLogZero || base == kLogZero) continue;
      const double lm_score =
          lm_scores[static_cast<std::size_t>(lm_token_[static_cast<std::size_t>(k)])];
      const double fused =
          config_.alpha == 0.0 ? 0.0 : config_.alpha * lm_score;
      const char ch = alphabet_.symbol(k);
      Candidate& c = slot(
          {&h.prefix, ch, true, h.prefix.ExtendedHash(ch), h.prefix.size() + 1},
          i, h.lm_logprob + lm_score);
      c.log_pnb = LogAdd(c.log_pnb, emit + base + fused);
    }
  }

  for (auto& c : candidates) {
    c.score = NormalizedScore(LogAdd(c.log_pb, c.log_pnb), c.key.length,
                              config_.beta);
  }
  std::erase_if(candidates, [](const Candidate& c) {
    return LogAdd(c.log_pb, c.log_pnb) == kLogZero;
  });
  auto better = [](const Candidate& a, const Candidate& b) {
    if (a.score != b.score) return a.score > b.score;
    return Prefix::Compare(*a.key.base, Tail(a.key), *b.key.base,
                           Tail(b.key)) < 0;
  };
  const auto keep = std::min(candidates.size(),
                             static_cast<std::size_t>(config_.width));
  std::partial_sort(candidates.begin(),
                    candidates.begin() + static_cast<std::ptrdiff_t>(keep),
                    candidates.end(), better);

  std::vector<Hypothesis> next;
  next.reserve(keep);
  for (std::size_t i = 0; i < keep; ++i) {
    const Candidate& c = candidates[i];
    const Hypothesis& source = previous[c.source];
    Hypothesis h;
    if (c.key.extended) {
      h.prefix = c.key.base->Extend(c.key.ch);
      h.lm_state = lm_.Advance(source.lm_state, c.key.ch);
    } else {
      h.prefix = *c.key.base;
      h.lm_state = source.lm_state;
    }
    h.log_pb = c.log_pb;
    h.log_pnb = c.log_pnb;
    h.lm_logprob = c.lm_logprob;
    next.push_back(std::move(h));
  }
  return Beam(std::move(next), beam.frame_index() + 1, config_.beta);
}

DecodeResult CtcPrefixBeamSearch::Decode(const EmissionMatrix& em) const {
  if (!(em.alphabet() == alphabet_)) {
    throw ValidationError("emission alphabet differs from decoder alphabet");
  }
  Beam beam = Init();
  for (int t = 0; t < em.num_frames(); ++t) beam = Step(beam, em.row(t));
  if (em.num_frames() == 0) return {"", 0.0};
  return {beam.best().prefix.str(), beam.best_score()};
}

}  // namespace streamctc
