// Copyright 2026 The streamctc Authors. All Rights Reserved.

#include "streamctc/ctc.h"

#include <cmath>
#include <vector>

#include "streamctc/error.h"
#include "streamctc/log_math.h"

namespace streamctc {

Transcript Collapse(std::span<const int> path, const Alphabet& alphabet) {
  Transcript out;
  int previous = -1;
  for (int label : path) {
    if (label < 0 || label >= alphabet.size()) {
      throw ValidationError("path label " + std::to_string(label) +
                            " outside alphabet of size " +
                            std::to_string(alphabet.size()));
    }
    if (label != previous && label != alphabet.blank_index()) {
      out.push_back(alphabet.symbol(label));
    }
    previous = label;
  }
  return out;
}

double PathLogProbability(std::span<const int> path,
                          const EmissionMatrix& em) {
  if (static_cast<int>(path.size()) != em.num_frames()) {
    throw ValidationError("path length " + std::to_string(path.size()) +
                          " != frame count " +
                          std::to_string(em.num_frames()));
  }
  double total = 0.0;
  for (int t = 0; t < em.num_frames(); ++t) {
    const int label = path[static_cast<std::size_t>(t)];
    if (label < 0 || label >= em.num_symbols()) {
      throw ValidationError("path label " + std::to_string(label) +
                            " outside alphabet");
    }
    total += SafeLog(em.at(t, label));
  }
  return total;
}

namespace {

void CheckEnumerable(const EmissionMatrix& em) {
  std::uint64_t count = 1;
  for (int t = 0; t < em.num_frames(); ++t) {
    count *= static_cast<std::uint64_t>(em.num_symbols());
    if (count > kMaxEnumeratedPaths) {
      throw CapacityError("path enumeration over " +
                          std::to_string(em.num_symbols()) + "^" +
                          std::to_string(em.num_frames()) +
                          " paths exceeds the limit of " +
                          std::to_string(kMaxEnumeratedPaths));
    }
  }
}

// Calls visit(path, probability) for every path, probabilities computed as
// plain products.
template <typename Visitor>
void ForEachPath(const EmissionMatrix& em, Visitor&& visit) {
  CheckEnumerable(em);
  const int num_frames = em.num_frames();
  Path path(static_cast<std::size_t>(num_frames), 0);
  while (true) {
    double p = 1.0;
    for (int t = 0; t < num_frames; ++t) {
      p *= em.at(t, path[static_cast<std::size_t>(t)]);
    }
    visit(path, p);
    int t = num_frames - 1;
    while (t >= 0 && ++path[static_cast<std::size_t>(t)] == em.num_symbols()) {
      path[static_cast<std::size_t>(t)] = 0;
      --t;
    }
    if (t < 0) break;
  }
}

}  // namespace

double TranscriptProbabilityByEnumeration(const EmissionMatrix& em,
                                          std::string_view text) {
  ValidateTranscript(text, em.alphabet());
  double total = 0.0;
  ForEachPath(em, [&](const Path& path, double p) {
    if (p > 0.0 && Collapse(path, em.alphabet()) == text) total += p;
  });
  return total;
}

std::map<Transcript, double> TranscriptDistribution(const EmissionMatrix& em) {
  std::map<Transcript, double> dist;
  ForEachPath(em, [&](const Path& path, double p) {
    if (p > 0.0) dist[Collapse(path, em.alphabet())] += p;
  });
  return dist;
}

double TranscriptProbabilityByForward(const EmissionMatrix& em,
                                      std::string_view text) {
  ValidateTranscript(text, em.alphabet());
  const int num_frames = em.num_frames();
  const int blank = em.alphabet().blank_index();
  if (num_frames == 0) return text.empty() ? 1.0 : 0.0;

  // Extended labels: blank, l1, blank, l2, ..., lN, blank.
  std::vector<int> labels;
  labels.reserve(2 * text.size() + 1);
  labels.push_back(blank);
  for (char c : text) {
    labels.push_back(em.alphabet().index_of(c));
    labels.push_back(blank);
  }
  const int num_states = static_cast<int>(labels.size());
  auto label_at = [&](int s) { return labels[static_cast<std::size_t>(s)]; };

  std::vector<double> alpha(labels.size(), kLogZero);
  std::vector<double> next(labels.size(), kLogZero);
  alpha[0] = SafeLog(em.at(0, blank));
  if (num_states > 1) alpha[1] = SafeLog(em.at(0, label_at(1)));

  for (int t = 1; t < num_frames; ++t) {
    for (int s = 0; s < num_states; ++s) {
      double acc = alpha[static_cast<std::size_t>(s)];
      if (s >= 1) acc = LogAdd(acc, alpha[static_cast<std::size_t>(s - 1)]);
      if (s >= 2 && label_at(s) != blank && label_at(s) != label_at(s - 2)) {
        acc = LogAdd(acc, alpha[static_cast<std::size_t>(s - 2)]);
      }
      next[static_cast<std::size_t>(s)] =
          acc == kLogZero ? kLogZero : acc + SafeLog(em.at(t, label_at(s)));
    }
    alpha.swap(next);
  }
  double total = alpha[static_cast<std::size_t>(num_states - 1)];
  if (num_states > 1) {
    total = LogAdd(total, alpha[static_cast<std::size_t>(num_states - 2)]);
  }
  return std::exp(total);
}

Transcript GreedyDecode(const EmissionMatrix& em) {
  Path path;
  path.reserve(static_cast<std::size_t>(em.num_frames()));
  for (int t = 0; t < em.num_frames(); ++t) {
    const auto row = em.row(t);
    int best = 0;
    for (int k = 1; k < em.num_symbols(); ++k) {
      if (row[k] > row[best]) best = k;
    }
    path.push_back(best);
  }
  return Collapse(path, em.alphabet());
}

}  // namespace streamctc
