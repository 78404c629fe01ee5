#pragma once

#include "spectral/graph.hpp"

#include <optional>
#include <vector>

namespace spectral {

struct LaplacianBundle {
  Vector degrees;
  Matrix laplacian;
  std::optional<Matrix> sym_normalized;
  std::optional<Matrix> random_walk;
};

/// Connected components; labels are 1-based and assigned in order of the
/// first node of each component.
struct ComponentLabels {
  std::vector<int> labels;
  int count = 0;
};

struct LaplacianTolerances {
  /// Row/column sums must vanish up to this fraction of max |L_ij|.
  double row_sum_rel = 1e-12;
};

/// d_i = sum_j W_ij.
Vector degree_vector(const SimilarityGraph& g);

/// L = D - W.
Matrix laplacian(const SimilarityGraph& g);

/// D^{-1/2} L D^{-1/2}. Throws IsolatedNode carrying the first zero-degree node.
Matrix sym_normalized(const SimilarityGraph& g);

/// D^{-1} L. Throws IsolatedNode carrying the first zero-degree node.
Matrix random_walk_normalized(const SimilarityGraph& g);

/// Builds every matrix; the normalized ones are left empty when the graph
/// has an isolated node instead of throwing.
LaplacianBundle make_bundle(const SimilarityGraph& g);

ComponentLabels connected_components(const SimilarityGraph& g);

/// Checks symmetry, zero row and column sums, L_ii >= 0 and L_ij <= 0.
bool satisfies_laplacian_constraints(const Matrix& l, const LaplacianTolerances& tol = {});

/// Throws IsolatedNode if any degree is not strictly positive.
void require_positive_degrees(const Vector& degrees);

}  // namespace spectral
