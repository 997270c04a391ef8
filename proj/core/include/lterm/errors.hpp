#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lterm {

/// Invalid size model, preset name, or out-of-contract argument.
class ValidationError : public std::runtime_error {
public:
  enum class Kind {
    NegativeWeight,
    ZeroSum,                    // zero weight + application weight = 0
    ZeroSuccessorOrAbstraction, // successor or abstraction weight = 0
    GcdViolation,
    UnknownPreset,
    BadArgument,
  };

  ValidationError(Kind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

private:
  Kind kind_;
};

/// Term syntax error; `position` is a byte offset into the input.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t position, const std::string& message)
      : std::runtime_error(message + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// Malformed bit-string input.
class DecodeError : public std::runtime_error {
public:
  enum class Kind { Truncated, TrailingBits, BadPrefix };

  DecodeError(Kind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

private:
  Kind kind_;
};

/// Request exceeds a configured cap (table size, enumeration size, attempts, time).
class ResourceLimitError : public std::runtime_error {
public:
  explicit ResourceLimitError(std::string message)
      : std::runtime_error(std::move(message)) {}
};

/// Numeric routine could not deliver its postcondition.
class ConvergenceError : public std::runtime_error {
public:
  enum class Kind { NoConvergence, DoubleRoot, NegativeRadicand, NormalizationFailure };

  ConvergenceError(Kind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

private:
  Kind kind_;
};

} // namespace lterm
