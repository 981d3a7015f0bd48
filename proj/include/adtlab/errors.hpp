// Copyright 2026 The adtlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ADTLAB_ERRORS_HPP_
#define ADTLAB_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace adtlab {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A bad argument: arity mismatch, zero length bound, free variable, ...
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Inputs built over different proposition sets, or a letter outside Σ.
class AlphabetMismatch : public Error {
 public:
  using Error::Error;
};

/// The operation requires a countermeasure-depth the input exceeds.
class DepthError : public Error {
 public:
  using Error::Error;
};

/// An enumeration or product would exceed its configured budget. Raised
/// instead of returning a truncated result.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// 1-based position in a source text.
struct SourceSpan {
  std::size_t line = 1;
  std::size_t column = 1;
};

class ParseError : public Error {
 public:
  ParseError(SourceSpan span, const std::string& message)
      : Error(std::to_string(span.line) + ":" + std::to_string(span.column) +
              ": " + message),
        span_(span),
        message_(message) {}

  SourceSpan span() const noexcept { return span_; }
  /// The message without the position prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  SourceSpan span_;
  std::string message_;
};

}  // namespace adtlab

#endif  // ADTLAB_ERRORS_HPP_
