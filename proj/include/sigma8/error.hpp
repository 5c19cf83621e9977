#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sigma8 {

enum class ErrorKind {
  CompositionNotZero,
  NotSymmetric,
  Degenerate,
  DimensionMismatch,
  DimensionTooLarge,
  NotProper,
  NotSymplectic,
  NotDivisibleBy4,
  PairingMismatch,
  InvalidComplex,
  WrongDimension,
  NotPoincare,
  NotACocycle,
  WrongSymmetry,
  UnknownGenerator,
  IncompatibleRep,
  StructureViolation,
  RankMismatch,
  NotZ4Trivial,
  SyntaxError,
  SchemaError,
  InvariantError,
};

std::string_view to_string(ErrorKind kind);

/// Every library failure is reported through this type; `kind()` is the
/// machine-readable part, `what()` carries a human-readable diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failure with a 1-based source position.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& message)
      : Error(ErrorKind::SyntaxError,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Well-formed text that does not match the expected document shape.
class SchemaError : public Error {
 public:
  SchemaError(std::string path, const std::string& message)
      : Error(ErrorKind::SchemaError, path + ": " + message), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace sigma8
