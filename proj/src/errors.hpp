#pragma once

#include <stdexcept>
#include <string>

namespace fpg {

/// Bad input or violated precondition (maps to exit code 2 at the CLI).
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed textual input; carries a position hint when one is known.
class ParseError : public UsageError {
 public:
  explicit ParseError(const std::string& what) : UsageError(what) {}
  ParseError(const std::string& what, std::size_t position)
      : UsageError(what + " (at offset " + std::to_string(position) + ")") {}
};

/// A condition the library guarantees can never happen did happen
/// (maps to exit code 3 at the CLI).
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

/// An iterative numerical procedure failed to reach its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : std::runtime_error(what + " (residual " + std::to_string(residual) + ")"),
        residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

}  // namespace fpg
