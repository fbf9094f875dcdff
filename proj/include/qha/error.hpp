#pragma once

#include <stdexcept>
#include <string>

namespace qha {

/// Base for every failure raised by the toolkit. `reason()` is a stable,
/// machine-readable token (used verbatim in CLI reports); `what()` carries
/// the human message.
class Error : public std::runtime_error {
 public:
  Error(std::string reason, const std::string& message)
      : std::runtime_error(message), reason_(std::move(reason)) {}

  [[nodiscard]] const std::string& reason() const noexcept { return reason_; }

 private:
  std::string reason_;
};

/// Malformed input text or a value violating a type invariant.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message) : Error("ParseError", message) {}
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& message) : Error("ValidationError", message) {}
  ValidationError(std::string reason, const std::string& message) : Error(std::move(reason), message) {}
};

/// A computation hit one of its configured limits. Never a wrong answer,
/// only an absent one.
class CapExceeded : public Error {
 public:
  explicit CapExceeded(std::string reason, const std::string& message) : Error(std::move(reason), message) {}
};

/// The inputs do not satisfy the preconditions of a construction.
class HypothesisError : public Error {
 public:
  HypothesisError(std::string reason, const std::string& message) : Error(std::move(reason), message) {}
};

}  // namespace qha
