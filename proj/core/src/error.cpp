#include "upse/error.hpp"

namespace upse {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::InvalidMapping: return "InvalidMapping";
    case ErrorKind::NotConvex: return "NotConvex";
    case ErrorKind::NotGeneralPosition: return "NotGeneralPosition";
    case ErrorKind::NotATree: return "NotATree";
    case ErrorKind::Cyclic: return "Cyclic";
    case ErrorKind::NotSwitchTree: return "NotSwitchTree";
    case ErrorKind::NotSink: return "NotSink";
    case ErrorKind::NotSource: return "NotSource";
    case ErrorKind::NotOneSided: return "NotOneSided";
    case ErrorKind::InternalNonConsecutiveResidual: return "InternalNonConsecutiveResidual";
    case ErrorKind::BadN: return "BadN";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::InvalidInstance: return "InvalidInstance";
    case ErrorKind::PropertyCheckFailed: return "PropertyCheckFailed";
    case ErrorKind::InvalidSolution: return "InvalidSolution";
    case ErrorKind::NotAValidUPSE: return "NotAValidUPSE";
    case ErrorKind::ExtractionFailed: return "ExtractionFailed";
  }
  return "Unknown";
}

}  // namespace upse
