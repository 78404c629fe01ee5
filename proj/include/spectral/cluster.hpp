#pragma once

#include "spectral/eigensolver.hpp"
#include "spectral/graph.hpp"

#include <cstdint>
#include <vector>

namespace spectral {

/// K x N matrix T whose columns are the embedded points, each scaled to unit
/// length. Columns whose norm is at most 1e-12 before scaling are left zero
/// and listed in `zero_columns`.
struct SpectralCoordinates {
  Matrix points;
  std::vector<Index> zero_columns;
};

struct ClusterAssignment {
  /// 1-based labels, one per point.
  std::vector<int> labels;
  /// Column k is the centroid of cluster k+1.
  Matrix centroids;
  double inertia = 0.0;
  int iterations = 0;
  /// Inertia after each assignment step.
  std::vector<double> inertia_history;
  /// Number of empty-cluster repairs performed.
  int reseeds = 0;
};

struct KMeansOptions {
  int max_iterations = 300;
};

/// Rows w_1..w_K of the generalized problem (first eigenvector included),
/// then unit-normalized columns.
SpectralCoordinates spectral_coordinates(const SimilarityGraph& g, int k,
                                         const JacobiOptions& jacobi = {});

/// Lloyd iterations from a k-means++ start. `points` holds one point per
/// column. Deterministic for a given seed.
ClusterAssignment kmeans(const Matrix& points, int k, std::uint64_t seed,
                         const KMeansOptions& options = {});

ClusterAssignment spectral_cluster(const SimilarityGraph& g, int k, std::uint64_t seed,
                                   const KMeansOptions& options = {});

double adjusted_rand_index(const std::vector<int>& a, const std::vector<int>& b);

}  // namespace spectral
