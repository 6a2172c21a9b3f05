#pragma once

#include <stdexcept>
#include <string>

namespace nassoc {

// Every failure raised by the library derives from Error. The C API maps the
// kind onto its status codes.
enum class ErrorKind {
  Usage,        // caller violated a precondition (mismatched fields, not an ideal, ...)
  Domain,       // mathematically undefined (division by zero)
  Parse,        // malformed input text or file
  Unsupported,  // operation needs a finite field or exceeds an enumeration budget
  Refused,      // an operation's algebraic hypothesis does not hold for the input
  Violation,    // a construction guaranteed by a structure theorem could not be found
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace nassoc
