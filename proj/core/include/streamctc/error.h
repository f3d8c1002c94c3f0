// Copyright 2026 The streamctc Authors. All Rights Reserved.

#ifndef STREAMCTC_ERROR_H_
#define STREAMCTC_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace streamctc {

// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input violates a documented precondition (bad index, non-stochastic row,
// dimension mismatch, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Malformed serialized input. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line == 0 ? what
                        : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A bounded computation (e.g. path enumeration) would exceed its budget.
class CapacityError : public Error {
 public:
  using Error::Error;
};

}  // namespace streamctc

#endif  // STREAMCTC_ERROR_H_
