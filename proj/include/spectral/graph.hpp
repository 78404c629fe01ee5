#pragma once

#include <Eigen/Dense>

#include <functional>
#include <string>
#include <tuple>
#include <vector>

namespace spectral {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// N samples by d features, one sample per row. All entries finite,
/// N >= 1 and d >= 1; violations throw InvalidData.
class DataSet {
 public:
  explicit DataSet(Matrix points);

  const Matrix& points() const noexcept { return points_; }
  Index n_samples() const noexcept { return points_.rows(); }
  Index n_features() const noexcept { return points_.cols(); }
  auto sample(Index i) const { return points_.row(i); }

 private:
  Matrix points_;
};

/// Undirected simple graph stored as a dense weight matrix W.
///
/// Construction enforces W = W^T bit for bit, W_ij >= 0, W_ii = 0 and
/// finite entries; violations throw InvalidData. Isolated nodes are
/// allowed here and rejected later by the normalized Laplacians.
class SimilarityGraph {
 public:
  explicit SimilarityGraph(Matrix weights);

  const Matrix& weights() const noexcept { return weights_; }
  Index n_nodes() const noexcept { return weights_.rows(); }
  double weight(Index i, Index j) const { return weights_(i, j); }

  /// Unordered edges (i < j) with positive weight, row-major order.
  std::vector<std::tuple<Index, Index, double>> edges() const;

 private:
  Matrix weights_;
};

enum class GraphMethod { Epsilon, Knn, Full };
enum class KnnMode { Mutual, Symmetric };
enum class Weighting { Binary, Gaussian };

struct GraphRecipe {
  GraphMethod method = GraphMethod::Full;
  double epsilon = 1.0;
  int k = 5;
  KnnMode knn_mode = KnnMode::Symmetric;
  Weighting weighting = Weighting::Gaussian;
  double sigma = 1.0;

  /// Throws InvalidRecipe when a field required by `method` is out of range.
  void validate() const;
};

/// Pluggable metric; takes two samples as rows.
using DistanceFn = std::function<double(const Eigen::Ref<const Eigen::RowVectorXd>&,
                                        const Eigen::Ref<const Eigen::RowVectorXd>&)>;

double euclidean_distance(const Eigen::Ref<const Eigen::RowVectorXd>& a,
                          const Eigen::Ref<const Eigen::RowVectorXd>& b);

/// exp(-dist^2 / (2 sigma^2))
double gaussian_similarity(double dist, double sigma);

Matrix pairwise_distances(const DataSet& data,
                          const DistanceFn& metric = euclidean_distance);

/// Edge {i,j} iff dist(i,j) < epsilon (strict).
SimilarityGraph build_epsilon_graph(const DataSet& data, double epsilon,
                                    Weighting weighting, double sigma = 1.0,
                                    const DistanceFn& metric = euclidean_distance);

/// Distance ties are broken by the lower node index.
SimilarityGraph build_knn_graph(const DataSet& data, int k, KnnMode mode,
                                Weighting weighting, double sigma = 1.0,
                                const DistanceFn& metric = euclidean_distance);

SimilarityGraph build_full_graph(const DataSet& data, double sigma,
                                 const DistanceFn& metric = euclidean_distance);

SimilarityGraph build_graph(const DataSet& data, const GraphRecipe& recipe,
                            const DistanceFn& metric = euclidean_distance);

struct WeightedEdge {
  Index i;
  Index j;
  double weight;
};

/// Builds W from 0-based undirected edges. Self-loops, duplicate pairs (in
/// either orientation), nonpositive or non-finite weights and out-of-range
/// indices throw InvalidEdgeList.
SimilarityGraph from_edge_list(Index n, const std::vector<WeightedEdge>& edges);

/// Human-readable cautions for recipes that are valid but discouraged,
/// e.g. binary weighting on a k-NN graph.
std::vector<std::string> recipe_warnings(const GraphRecipe& recipe);

}  // namespace spectral
