#pragma once

#include <stdexcept>
#include <string>

namespace srings {

enum class ErrorKind {
  kInvalidFactor,
  kParse,
  kSize,
  kContainment,
  kArgument,
  kShape,
  kNotAPartition,
  kIdentityNotSingleton,
  kNotInverseClosed,
  kNotModuleClosed,
  kNotASection,
  kNotAnIsomorphism,
  kAutLifting,
  kAdmissibility,
  kClassificationFailure,
  kInternal,
};

const char* to_string(ErrorKind kind);

// Every failure raised by the library carries one of the kinds above so that
// callers (and the CLI exit-code mapping) can dispatch without parsing text.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace srings
