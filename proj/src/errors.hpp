#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bcp {

/// Base for every error the core raises. The C layer maps each subclass to a status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An operation's documented precondition does not hold for the given input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Exhaustive or exact work would exceed its configured cap.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  enum class Kind {
    missing_header,
    malformed_header,
    malformed_record,
    vertex_out_of_range,
    duplicate_edge,
    self_loop,
    edge_count_mismatch,
    malformed_json,
  };

  ParseError(Kind kind, std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), kind_(kind), line_(line) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

}  // namespace bcp
