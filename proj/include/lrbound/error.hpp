// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The lrbound Authors

#pragma once

#include <stdexcept>
#include <string>

namespace lrb {

/// Malformed or inconsistent model specification. `line()` is 1-based, 0 when
/// the problem is not tied to a particular line.
class SpecError : public std::runtime_error {
 public:
  SpecError(int line, const std::string& message)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// A numerical procedure failed to reach its tolerance or hit an iteration cap.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lrb
