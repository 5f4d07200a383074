#ifndef PREDEQ_ERROR_HPP
#define PREDEQ_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace predeq {

enum class ErrorCode {
  invalid_argument,
  unknown_symbol,
  arity_mismatch,
  unknown_element,
  unassigned_variable,
  limit_exceeded,
  parse_error,
  invariant_violation,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

struct SourceLocation {
  std::size_t line = 0;
  std::size_t column = 0;
};

// Syntax or validation failure in a text document. what() is formatted as
// "line:column: message".
class ParseError : public Error {
 public:
  ParseError(SourceLocation where, const std::string& message)
      : Error(ErrorCode::parse_error, std::to_string(where.line) + ":" +
                                          std::to_string(where.column) + ": " +
                                          message),
        where_(where),
        message_(message) {}

  SourceLocation where() const noexcept { return where_; }
  const std::string& message() const noexcept { return message_; }

 private:
  SourceLocation where_;
  std::string message_;
};

}  // namespace predeq

#endif  // PREDEQ_ERROR_HPP
