#pragma once

#include <stdexcept>
#include <string>

namespace twtl {

enum class ErrorKind {
  Syntax,
  UnknownProposition,
  WithinBound,
  Normalization,
  InfeasibleRelaxation,
  Infeasible,
  AssumptionViolation,
  Collision,
  MissingMapping,
  AlphabetMismatch,
  BlockedRun,
  NoPolicy,
  EmptyPositiveSet,
  InvalidInput,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, int line = 0, int column = 0)
      : std::runtime_error(what), kind_(kind), line_(line), column_(column) {}

  ErrorKind kind() const { return kind_; }
  // 1-based; 0 when the error has no source position
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  ErrorKind kind_;
  int line_;
  int column_;
};

}  // namespace twtl
