// Copyright 2026 The streamctc Authors. All Rights Reserved.

#include "streamctc/emission_sim.h"

#include <cmath>

#include "streamctc/error.h"
#include "streamctc/random.h"

namespace streamctc {

void SimConfig::Validate(const Alphabet& alphabet) const {
  const double floor = 1.0 / static_cast<double>(alphabet.size());
  if (!(peak_prob > floor && peak_prob <= 1.0)) {
    throw ValidationError("peak_prob must lie in (" + std::to_string(floor) +
                          ", 1]");
  }
  if (frames_per_char < 1) {
    throw ValidationError("frames_per_char must be >= 1");
  }
}

EmissionMatrix Simulate(std::string_view text, const Alphabet& alphabet,
                        const SimConfig& config) {
  config.Validate(alphabet);
  ValidateTranscript(text, alphabet);
  Rng rng(config.seed);
  const int width = alphabet.size();
  const double rest =
      (1.0 - config.peak_prob) / static_cast<double>(width - 1);
  const int fpc = config.frames_per_char;

  std::vector<double> values;
  auto emit = [&](int symbol, std::int64_t frames) {
    for (std::int64_t f = 0; f < frames; ++f) {
      for (int k = 0; k < width; ++k) {
        values.push_back(k == symbol ? config.peak_prob : rest);
      }
    }
  };
  const int blank = alphabet.blank_index();

  if (config.blank_fill) emit(blank, rng.UniformInt(0, fpc));
  for (std::size_t i = 0; i < text.size(); ++i) {
    const bool repeat = i > 0 && text[i] == text[i - 1];
    std::int64_t gap = 0;
    if (config.blank_fill && i > 0) gap = rng.UniformInt(0, fpc);
    if (repeat) gap = std::max<std::int64_t>(gap, 1);
    emit(blank, gap);
    emit(alphabet.index_of(text[i]), rng.UniformInt(1, 2 * fpc - 1));
  }
  if (config.blank_fill) emit(blank, rng.UniformInt(0, fpc));
  return EmissionMatrix(alphabet, std::move(values));
}

}  // namespace streamctc
