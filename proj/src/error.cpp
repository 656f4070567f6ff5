#include "ars/error.hpp"

namespace ars {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::WeightMismatch: return "WeightMismatch";
    case ErrorCode::EmptyClass: return "EmptyClass";
    case ErrorCode::BadRange: return "BadRange";
    case ErrorCode::InvalidInterchange: return "InvalidInterchange";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::InfeasibleShift: return "InfeasibleShift";
    case ErrorCode::ResidualInfeasible: return "ResidualInfeasible";
    case ErrorCode::BadCoverOrder: return "BadCoverOrder";
    case ErrorCode::NotSameClass: return "NotSameClass";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace ars
