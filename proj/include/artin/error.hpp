#pragma once

#include <stdexcept>
#include <string>

namespace artin {

/// Malformed input text (matrix files, presentation files, words).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input that parses but violates an invariant of the structure it describes.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Failure categories for mathematically meaningful refusals.
enum class DomainErrorKind {
  InfiniteType,
  NotAPalindrome,
  NotPure,
  NotTauInvariant,
  PreconditionFailed,
  BudgetExceeded,
  SearchBudgetExceeded,
  NoTarget,
  Internal,
};

const char* to_string(DomainErrorKind kind);

/// An operation whose inputs are well-formed but outside its domain.
class DomainError : public std::runtime_error {
 public:
  DomainError(DomainErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) +
                           (detail.empty() ? "" : ": " + detail)),
        kind_(kind) {}

  DomainErrorKind kind() const noexcept { return kind_; }

 private:
  DomainErrorKind kind_;
};

}  // namespace artin
