// Copyright 2026 The streamctc Authors. All Rights Reserved.

#ifndef STREAMCTC_EMISSION_SIM_H_
#define STREAMCTC_EMISSION_SIM_H_

#include <cstdint>
#include <string_view>

#include "streamctc/emission.h"

namespace streamctc {

struct SimConfig {
  // Mass on the intended symbol of each frame; the rest is spread evenly
  // over the other symbols. Must lie in (1/(|A|+1), 1].
  double peak_prob = 0.9;
  // Mean number of frames per character (>= 1).
  int frames_per_char = 3;
  std::uint64_t seed = 0;
  // Insert blank-dominated frames around and between characters. Repeated
  // characters are always separated by a blank frame.
  bool blank_fill = true;

  void Validate(const Alphabet& alphabet) const;
};

// Peaky CTC-like posteriors whose greedy decoding spells `text`.
//
// Layout, with all lengths drawn from Rng(seed):
//   leading blanks [0, fpc]  (blank_fill only)
//   per character: gap of blanks [0, fpc] (blank_fill) or 0, at least 1
//                  before a repeat; then [1, 2*fpc - 1] peak frames
//   trailing blanks [0, fpc] (blank_fill only)
EmissionMatrix Simulate(std::string_view text, const Alphabet& alphabet,
                        const SimConfig& config);

}  // namespace streamctc

#endif  // STREAMCTC_EMISSION_SIM_H_
