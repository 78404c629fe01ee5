#include "spectral/error.hpp"

namespace spectral {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidData: return "InvalidData";
    case ErrorKind::InvalidRecipe: return "InvalidRecipe";
    case ErrorKind::InvalidEdgeList: return "InvalidEdgeList";
    case ErrorKind::IsolatedNode: return "IsolatedNode";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::ShapeError: return "ShapeError";
    case ErrorKind::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorKind::SingularConstraint: return "SingularConstraint";
    case ErrorKind::InvalidExpansion: return "InvalidExpansion";
    case ErrorKind::UnstableStep: return "UnstableStep";
    case ErrorKind::PlotDimension: return "PlotDimension";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message,
             std::optional<long> detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      detail_(detail) {}

}  // namespace spectral
