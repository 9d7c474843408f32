#pragma once

#include <stdexcept>
#include <string>

namespace bimod {

/// Base of every error thrown by the library. The CLI maps `UsageError`
/// and `ParseError` to exit status 2 and everything else to 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

class AxiomViolation : public Error {
 public:
  AxiomViolation(std::string identity, double max_residual)
      : Error("axiom violation: " + identity + " (max residual " +
              std::to_string(max_residual) + ")"),
        identity(std::move(identity)),
        max_residual(max_residual) {}
  std::string identity;
  double max_residual;
};

class MissingSymbol : public Error {
 public:
  using Error::Error;
};

class UnknownCatalogName : public Error {
 public:
  using Error::Error;
};

class TypeMismatch : public Error {
 public:
  using Error::Error;
};

class UnboundSymbol : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, int line, int col)
      : Error(what + " at " + std::to_string(line) + ":" + std::to_string(col)),
        line(line),
        col(col) {}
  int line;
  int col;
};

class NonSovereignGauge : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class NotSpecial : public Error {
 public:
  using Error::Error;
};

class NonIntegerDim : public Error {
 public:
  using Error::Error;
};

class IdempotentSplitFailure : public Error {
 public:
  using Error::Error;
};

class DecompositionIncomplete : public Error {
 public:
  using Error::Error;
};

class NotIntertwiner : public Error {
 public:
  using Error::Error;
};

class SingularD : public Error {
 public:
  using Error::Error;
};

class NonIntegerStructureConstant : public Error {
 public:
  using Error::Error;
};

}  // namespace bimod
