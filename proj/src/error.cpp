#include "halin/error.hpp"

namespace halin {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotATree: return "NotATree";
    case Errc::DegreeTwoInternal: return "DegreeTwoInternal";
    case Errc::CycleLeafMismatch: return "CycleLeafMismatch";
    case Errc::ArcContiguityViolation: return "ArcContiguityViolation";
    case Errc::TooFewLeaves: return "TooFewLeaves";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::InfeasibleConfig: return "InfeasibleConfig";
    case Errc::UnknownFamily: return "UnknownFamily";
    case Errc::NotAOneColor: return "NotAOneColor";
    case Errc::MaxDegreeExceeded: return "MaxDegreeExceeded";
    case Errc::InvariantViolated: return "InvariantViolated";
    case Errc::PartialColoring: return "PartialColoring";
    case Errc::UnmappedColor: return "UnmappedColor";
    case Errc::TooLarge: return "TooLarge";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace halin
