#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace spectral {

enum class ErrorKind {
  InvalidData,
  InvalidRecipe,
  InvalidEdgeList,
  IsolatedNode,
  NotSymmetric,
  NoConvergence,
  ShapeError,
  DisconnectedGraph,
  SingularConstraint,
  InvalidExpansion,
  UnstableStep,
  PlotDimension,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Exception type for every failure raised by the library.
///
/// `detail()` carries the integer payload some kinds are defined with:
/// the node index for IsolatedNode, the component count for
/// DisconnectedGraph and the numerical rank for SingularConstraint.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<long> detail = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<long> detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::optional<long> detail_;
};

}  // namespace spectral
