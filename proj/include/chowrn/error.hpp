#pragma once

#include <stdexcept>
#include <string>

namespace chowrn {

enum class ErrorKind {
  kInvalidInput,   // malformed or axiom-violating input
  kOutOfRange,     // degree / index outside the admissible range
  kSizeCap,        // ground set or workload above the configured cap
  kContextMismatch,
  kUnsupported,    // e.g. loops where a loopless matroid is required
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace chowrn
