// Copyright 2026 The streamctc Authors. All Rights Reserved.

#ifndef STREAMCTC_CTC_H_
#define STREAMCTC_CTC_H_

#include <cstdint>
#include <map>
#include <span>

#include "streamctc/alphabet.h"
#include "streamctc/emission.h"

namespace streamctc {

// Largest path space the enumeration oracle will walk: (|A|+1)^T.
inline constexpr std::uint64_t kMaxEnumeratedPaths = 10'000'000;

// The CTC many-to-one map: merge adjacent repeats, then drop blanks.
Transcript Collapse(std::span<const int> path, const Alphabet& alphabet);

// Sum over frames of log em[t][path[t]]; kLogZero if any factor is 0.
double PathLogProbability(std::span<const int> path, const EmissionMatrix& em);

// Total probability of all paths collapsing to `text`, by walking every path.
// Throws CapacityError when (|A|+1)^T exceeds kMaxEnumeratedPaths.
double TranscriptProbabilityByEnumeration(const EmissionMatrix& em,
                                          std::string_view text);

// Same quantity via the forward recursion over the blank-interleaved label
// sequence. Unbounded T.
double TranscriptProbabilityByForward(const EmissionMatrix& em,
                                      std::string_view text);

// Probability of every transcript with non-zero mass, by enumeration.
// Same capacity guard as TranscriptProbabilityByEnumeration.
std::map<Transcript, double> TranscriptDistribution(const EmissionMatrix& em);

// Per-frame argmax (lowest index wins ties), then Collapse.
Transcript GreedyDecode(const EmissionMatrix& em);

}  // namespace streamctc

#endif  // STREAMCTC_CTC_H_
