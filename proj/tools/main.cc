// Copyright 2026 The streamctc Authors. All Rights Reserved.

#include <cstdlib>
#include <iostream>
#include <string_view>

#include "cli.h"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  const char* log = std::getenv("STREAMCTC_LOG");
  const streamctc::cli::Io io{std::cin, std::cout, std::cerr,
                              log != nullptr && *log != '\0' &&
                                  std::string_view(log) != "0"};
  return streamctc::cli::Run({argv + 1, argv + argc}, io);
}
