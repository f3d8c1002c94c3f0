// Copyright 2026 The streamctc Authors. All Rights Reserved.

#ifndef STREAMCTC_VERSION_H_
#define STREAMCTC_VERSION_H_

namespace streamctc {

inline constexpr char kVersion[] = "0.1.0";

}  // namespace streamctc

#endif  // STREAMCTC_VERSION_H_
