#pragma once

#include <stdexcept>
#include <string>

namespace vi {

enum class ErrorCode {
  usage,       // invalid arguments or incompatible configuration
  parse,       // malformed problem document
  linesearch,  // backtracking search exhausted its trial budget
  io,          // filesystem failure
  internal,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  static Error usage(const std::string& what) { return {ErrorCode::usage, what}; }
  static Error parse(const std::string& what) { return {ErrorCode::parse, what}; }
  static Error linesearch(const std::string& what) { return {ErrorCode::linesearch, what}; }
  static Error io(const std::string& what) { return {ErrorCode::io, what}; }

private:
  ErrorCode code_;
};

}  // namespace vi
