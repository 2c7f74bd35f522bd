#include "asymlab/error.hpp"

namespace asymlab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::Unbounded: return "Unbounded";
    case ErrorKind::Empty: return "Empty";
    case ErrorKind::ZeroDirection: return "ZeroDirection";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::InfeasibleMeasure: return "InfeasibleMeasure";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::DegenerateZonotope: return "DegenerateZonotope";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
    case ErrorKind::UnsupportedDim: return "UnsupportedDim";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace asymlab
