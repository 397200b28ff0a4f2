#pragma once

#include <stdexcept>
#include <string>

namespace nchopf {

enum class ErrorKind {
  MissingImage,
  MissingRole,
  MissingInverse,
  ZeroRelation,
  DegreeIncreasing,
  DegreeBudgetExceeded,
  NoCertificate,
  NotConfluent,
  InsufficientData,
  InconsistentXi,
  InvalidTriple,
  WrongXiMode,
  ZeroPlanck,
  BasisExpressFailure,
  ParseError,
  UnknownLetter,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failures carry a 1-based source position. The kind is ParseError
/// or UnknownLetter.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message, ErrorKind kind = ErrorKind::ParseError)
      : Error(kind,
              std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

}  // namespace nchopf
