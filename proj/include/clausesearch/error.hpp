#pragma once

#include <stdexcept>
#include <string>

namespace clausesearch {

// Categories map one-to-one onto the CLI exit codes.
enum class ErrorKind {
  Usage,            // bad arguments or preconditions (exit 2)
  InvalidInstance,  // malformed input, no unique solution (exit 3)
  Guard,            // size guard exceeded (exit 4)
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

}  // namespace clausesearch
