#include "thinpl/errors.hpp"

namespace thinpl {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DuplicateVertexId: return "DuplicateVertexId";
    case ErrorKind::UnknownVertexInSimplex: return "UnknownVertexInSimplex";
    case ErrorKind::AffinelyDependentSimplex: return "AffinelyDependentSimplex";
    case ErrorKind::DisconnectedComplex: return "DisconnectedComplex";
    case ErrorKind::MissingBasepoint: return "MissingBasepoint";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::EmptyWord: return "EmptyWord";
    case ErrorKind::NotBased: return "NotBased";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::NoCommonSimplex: return "NoCommonSimplex";
    case ErrorKind::PointNotInComplex: return "PointNotInComplex";
    case ErrorKind::ComplexMismatch: return "ComplexMismatch";
    case ErrorKind::TooLong: return "TooLong";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::PointNotInStar: return "PointNotInStar";
    case ErrorKind::RefEndpointMismatch: return "RefEndpointMismatch";
    case ErrorKind::PointNotInSimplex: return "PointNotInSimplex";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "UnknownError";
}

}  // namespace thinpl
