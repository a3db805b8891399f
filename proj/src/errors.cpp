#include "otid/errors.hpp"

namespace otid {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidDistribution: return "InvalidDistribution";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kInfeasible: return "Infeasible";
    case ErrorKind::kTooLarge: return "TooLarge";
    case ErrorKind::kDegenerateClass: return "DegenerateClass";
    case ErrorKind::kDegenerateDenominator: return "DegenerateDenominator";
    case ErrorKind::kSingularMoment: return "SingularMoment";
    case ErrorKind::kEmptySet: return "EmptySet";
    case ErrorKind::kParse: return "ParseError";
    case ErrorKind::kIo: return "IoError";
    case ErrorKind::kVerificationFailure: return "VerificationFailure";
  }
  return "Error";
}

}  // namespace otid
