#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace otid {

enum class ErrorKind {
  kInvalidDistribution,
  kInvalidArgument,
  kInfeasible,
  kTooLarge,
  kDegenerateClass,
  kDegenerateDenominator,
  kSingularMoment,
  kEmptySet,
  kParse,
  kIo,
  kVerificationFailure,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so the CLI can map it
// onto an exit code without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, std::string(to_string(kind)) + ": " + what);
}

}  // namespace otid
