// Exception types shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace semiforge {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Cayley table entry outside [0, n).
class BadEntryError : public Error {
 public:
  BadEntryError(int row, int col, int value)
      : Error("bad table entry " + std::to_string(value) + " at ("
              + std::to_string(row) + ", " + std::to_string(col) + ")"),
        row(row),
        col(col),
        value(value) {}
  int row, col, value;
};

// Associativity failure with a witness triple: (ab)c != a(bc).
class NotAssociativeError : public Error {
 public:
  NotAssociativeError(int a, int b, int c)
      : Error("not associative: witness (" + std::to_string(a) + ", "
              + std::to_string(b) + ", " + std::to_string(c) + ")"),
        a(a),
        b(b),
        c(c) {}
  int a, b, c;
};

class NotInSubgroupError : public Error {
 public:
  explicit NotInSubgroupError(int element)
      : Error("element " + std::to_string(element)
              + " does not lie in any subgroup"),
        element(element) {}
  int element;
};

class NotASubsemigroupError : public Error {
 public:
  using Error::Error;
};

class NotAGroupError : public Error {
 public:
  using Error::Error;
};

class NotCompletelySimpleError : public Error {
 public:
  using Error::Error;
};

class OrderTooLargeError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error("parse error at position " + std::to_string(position) + ": "
              + what),
        position(position) {}
  std::size_t position;
};

class UnboundVariableError : public Error {
 public:
  explicit UnboundVariableError(char variable)
      : Error(std::string("unbound variable '") + variable + "'"),
        variable(variable) {}
  char variable;
};

class BuilderError : public Error {
 public:
  using Error::Error;
};

class EmptySpecError : public BuilderError {
 public:
  using BuilderError::BuilderError;
};

class NontrivialG2BelowTopError : public BuilderError {
 public:
  using BuilderError::BuilderError;
};

class NotAHomomorphismError : public BuilderError {
 public:
  using BuilderError::BuilderError;
};

class IncompatibleHomsError : public BuilderError {
 public:
  using BuilderError::BuilderError;
};

// Which of the theta-family conditions failed, with a witness description.
class ThetaConditionViolatedError : public BuilderError {
 public:
  ThetaConditionViolatedError(char condition, const std::string& witness)
      : BuilderError(std::string("theta condition (") + condition
                     + ") violated: " + witness),
        condition(condition) {}
  char condition;  // 'a', 'b' or 'c'
};

}  // namespace semiforge
