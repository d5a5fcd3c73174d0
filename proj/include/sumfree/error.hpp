#pragma once

#include <stdexcept>
#include <string>

namespace sumfree {

enum class ErrorKind {
  Parse,
  OrderOverflow,
  Axiom,
  Io,
  Precondition,
  Range,
};

// Single exception type for the core library; the C API maps `kind` to a
// status code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sumfree
