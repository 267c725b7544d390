#include "gridkit/error.hpp"

namespace gridkit {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::Collision: return "Collision";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::IllegalCommutation: return "IllegalCommutation";
    case ErrorCode::NotInterleaved: return "NotInterleaved";
    case ErrorCode::NotABandSite: return "NotABandSite";
    case ErrorCode::WrongBandClass: return "WrongBandClass";
    case ErrorCode::NotDestabilizable: return "NotDestabilizable";
    case ErrorCode::TrivialConfiguration: return "TrivialConfiguration";
    case ErrorCode::BudgetExhausted: return "BudgetExhausted";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::UnknownEntry: return "UnknownEntry";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace gridkit
