// Copyright 2026 The conedepth Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace conedepth {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Cone generators are linearly dependent (or not finite).
class DegenerateCone : public Error {
 public:
  using Error::Error;
};

/// The cone is a point, a ray, a line or a halfspace; only pointed cones
/// with nonempty interior are handled.
class UnsupportedCone : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

class EmptyInput : public Error {
 public:
  using Error::Error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Internal consistency failure of a sweep (e.g. a permutation that was not
/// tie-reordered before a rotation step).
class InvalidState : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class EmptyFile : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  /// 1-based line number of the offending row.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace conedepth
