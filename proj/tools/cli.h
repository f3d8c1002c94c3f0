// Copyright 2026 The streamctc Authors. All Rights Reserved.

#ifndef STREAMCTC_TOOLS_CLI_H_
#define STREAMCTC_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace streamctc::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitParse = 3;
inline constexpr int kExitValidation = 4;

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  bool log = false;  // diagnostics on `err`
};

// Runs the `streamctc` command line. `args` excludes the program name.
int Run(const std::vector<std::string>& args, const Io& io);

}  // namespace streamctc::cli

#endif  // STREAMCTC_TOOLS_CLI_H_
