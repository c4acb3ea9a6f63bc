#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dnaprover {

/// Malformed textual input (formula, clause file, process code, JSON graph).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  explicit ParseError(const std::string& what)
      : std::runtime_error(what), position_(npos) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  /// Zero-based character offset of the offending token, or npos when the
  /// error is not tied to a single location.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A process or strand graph violates its structural invariants.
class WellFormednessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A reduction rule was asked to fire where its premises do not hold.
class RuleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A search ran out of its configured budget before reaching a verdict.
/// Callers surface this as "indeterminate", never as sat or unsat.
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Codebook problems: missing codes, invalid bases, failed generation.
class CodebookError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dnaprover
