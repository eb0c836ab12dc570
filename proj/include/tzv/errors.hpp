// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tzv {

/// Byte range in a source file, with 1-based line/column of its start.
struct Span {
  std::size_t offset = 0;
  std::size_t length = 0;
  int line = 1;
  int col = 1;
};

/// Base class for all user-facing failures. `render(file)` produces the
/// machine-readable `file:line:col: message` diagnostic form.
class Error : public std::runtime_error {
public:
  Error(std::string message, Span span = {})
      : std::runtime_error(std::move(message)), span_(span) {}

  const Span &span() const { return span_; }

  std::string render(const std::string &file) const {
    return file + ":" + std::to_string(span_.line) + ":" +
           std::to_string(span_.col) + ": " + what();
  }

private:
  Span span_;
};

class LexError : public Error {
  using Error::Error;
};

class ParseError : public Error {
  using Error::Error;
};

class TypeError : public Error {
public:
  TypeError(std::string message, std::string path, Span span = {})
      : Error(std::move(message), span), path_(std::move(path)) {}

  const std::string &path() const { return path_; }

private:
  std::string path_;
};

/// Formula evaluation failure: unbound name or sort mismatch. These indicate
/// caller bugs, not contract failures.
class EvalError : public Error {
  using Error::Error;
};

/// Bad literal passed on the command line or in a PUSH operand.
class ValueError : public Error {
  using Error::Error;
};

/// Malformed sidecar specification file.
class SpecError : public Error {
  using Error::Error;
};

} // namespace tzv
