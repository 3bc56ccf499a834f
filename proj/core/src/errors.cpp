#include "entropic/errors.hpp"

namespace entropic {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::DivisionNotExact: return "DivisionNotExact";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::ZeroColumn: return "ZeroColumn";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::BasicMatrix: return "BasicMatrix";
    case ErrorKind::IsthmusElement: return "IsthmusElement";
    case ErrorKind::NotAFlat: return "NotAFlat";
    case ErrorKind::NotOnStratum: return "NotOnStratum";
    case ErrorKind::OnArrangement: return "OnArrangement";
    case ErrorKind::ParallelColumns: return "ParallelColumns";
    case ErrorKind::DegreeDrop: return "DegreeDrop";
    case ErrorKind::UnsupportedN: return "UnsupportedN";
    case ErrorKind::KernelZeroCoordinate: return "KernelZeroCoordinate";
    case ErrorKind::NotCorankOne: return "NotCorankOne";
    case ErrorKind::OnDiscriminant: return "OnDiscriminant";
    case ErrorKind::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorKind::DegenerateRHS: return "DegenerateRHS";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NewtonDivergence: return "NewtonDivergence";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

void raise(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace entropic
