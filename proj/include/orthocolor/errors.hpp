#pragma once

#include <stdexcept>
#include <string>

namespace orthocolor {

// Machine-readable codes for malformed inputs. Formula inapplicability is
// not an error (see BoundReport); these are reserved for inputs that break
// a precondition or a file format.
enum class ErrorCode {
  InvalidEdge,
  InvalidVertex,
  DuplicateEdge,
  EmptySelection,
  SizeLimitExceeded,
  ImproperColoring,
  SizeMismatch,
  InvalidColor,
  InvalidPartition,
  DuplicateCell,
  NotPrimePower,
  WrongOrder,
  NotBijective,
  UnverifiedFamily,
  ParseError,
  InvalidArgument,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, std::string(to_string(code)) + ": " + what);
}

}  // namespace orthocolor
