#pragma once

#include <stdexcept>
#include <string>

namespace qhopf {

enum class ErrorKind {
  DivisionByZero,
  PoleAtPoint,
  IrrationalSquareRoot,
  UnresolvedConstant,
  NoSolution,
  RankMismatch,
  NonTerminating,
  UnknownGenerator,
  MixedConfiguration,
  StarUndefined,
  OperandContainsPartial,
  InconsistentDerivation,
  SectorViolation,
  WrongDegree,
  NotInvertible,
  UnsupportedN,
  SyntaxError,
  UnknownSymbol,
  UnknownSuite,
  NotSpecializable,
  ConfigError,
  StarInconsistency,
};

const char* kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(std::string(kind_name(kind)) + ": " + msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(int line, int col, const std::string& msg)
      : Error(ErrorKind::SyntaxError,
              "line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + msg),
        line_(line), col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

}  // namespace qhopf
