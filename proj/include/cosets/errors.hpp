#pragma once

#include <stdexcept>
#include <string>

namespace cosets {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live on different point sets or belong to different groups.
class MismatchError : public Error {
 public:
  using Error::Error;
};

/// Text input (cycle notation, catalog line) could not be parsed.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// A computation would exceed a configured enumeration budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// A structural precondition failed (not a subgroup, not normal, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace cosets
