#pragma once

#include <stdexcept>
#include <string>

namespace freediv {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a Groebner computation exceeds its step budget or deadline.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class RingMismatch : public Error {
 public:
  using Error::Error;
};

class NotGraded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : Error(msg), line(line), column(column) {}
  int line;
  int column;
};

}  // namespace freediv
