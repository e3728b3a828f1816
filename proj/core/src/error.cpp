#include "toughwalks/error.hpp"

namespace toughwalks {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::Not2K2Free: return "Not2K2Free";
    case ErrorCode::NotATriangle: return "NotATriangle";
    case ErrorCode::InvalidWitness: return "InvalidWitness";
    case ErrorCode::KTooSmall: return "KTooSmall";
    case ErrorCode::NoNeighborInWitness: return "NoNeighborInWitness";
    case ErrorCode::OddCycle: return "OddCycle";
    case ErrorCode::EvenCycle: return "EvenCycle";
    case ErrorCode::TriangleMissing: return "TriangleMissing";
    case ErrorCode::NotDominating: return "NotDominating";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
  }
  return "Unknown";
}

}  // namespace toughwalks
