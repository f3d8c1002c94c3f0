// Copyright 2026 The streamctc Authors. All Rights Reserved.

#ifndef STREAMCTC_LOG_MATH_H_
#define STREAMCTC_LOG_MATH_H_

#include <algorithm>
#include <cmath>
#include <limits>

namespace streamctc {

inline constexpr double kLogZero = -std::numeric_limits<double>::infinity();

// log(exp(a) + exp(b)) without overflow; kLogZero is the additive identity.
inline double LogAdd(double a, double b) {
  if (a == kLogZero) return b;
  if (b == kLogZero) return a;
  const double hi = std::max(a, b);
  const double lo = std::min(a, b);
  return hi + std::log1p(std::exp(lo - hi));
}

inline double SafeLog(double p) { return p > 0.0 ? std::log(p) : kLogZero; }

}  // namespace streamctc

#endif  // STREAMCTC_LOG_MATH_H_
