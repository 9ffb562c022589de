#pragma once

#include <stdexcept>
#include <string>

namespace sio {

// One exception type for the whole library; the code separates caller errors
// (bad arguments, malformed config) from unmet mathematical preconditions so
// the C API and CLI can map them to distinct status / exit codes.
class Error : public std::runtime_error {
 public:
  enum class Code {
    invalid_argument,
    precondition,
    unsupported,
    numeric,
    config,
    parse,
  };

  Error(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

class ParseError : public Error {
 public:
  ParseError(size_t position, const std::string& what)
      : Error(Code::parse, what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  size_t position() const { return position_; }

 private:
  size_t position_;
};

}  // namespace sio
