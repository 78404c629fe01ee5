#include "spectral/graph.hpp"

#include "spectral/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <utility>

namespace spectral {

DataSet::DataSet(Matrix points) : points_(std::move(points)) {
  if (points_.rows() < 1 || points_.cols() < 1) {
    throw Error(ErrorKind::InvalidData, "data set needs at least one sample and one feature");
  }
  if (!points_.allFinite()) {
    throw Error(ErrorKind::InvalidData, "data set contains non-finite entries");
  }
}

SimilarityGraph::SimilarityGraph(Matrix weights) : weights_(std::move(weights)) {
  const Index n = weights_.rows();
  if (n != weights_.cols()) {
    throw Error(ErrorKind::InvalidData, "weight matrix is not square");
  }
  for (Index i = 0; i < n; ++i) {
    if (weights_(i, i) != 0.0) {
      throw Error(ErrorKind::InvalidData, "weight matrix has a nonzero diagonal entry", i);
    }
    for (Index j = i + 1; j < n; ++j) {
      const double w = weights_(i, j);
      if (!std::isfinite(w) || w < 0.0) {
        throw Error(ErrorKind::InvalidData, "weights must be finite and nonnegative");
      }
      if (w != weights_(j, i)) {
        throw Error(ErrorKind::InvalidData, "weight matrix is not symmetric");
      }
    }
  }
}

std::vector<std::tuple<Index, Index, double>> SimilarityGraph::edges() const {
  std::vector<std::tuple<Index, Index, double>> out;
  for (Index i = 0; i < n_nodes(); ++i) {
    for (Index j = i + 1; j < n_nodes(); ++j) {
      if (weights_(i, j) > 0.0) out.emplace_back(i, j, weights_(i, j));
    }
  }
  return out;
}

void GraphRecipe::validate() const {
  switch (method) {
    case GraphMethod::Epsilon:
      if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
        throw Error(ErrorKind::InvalidRecipe, "epsilon must be positive and finite");
      }
      break;
    case GraphMethod::Knn:
      if (k < 1) throw Error(ErrorKind::InvalidRecipe, "k must be at least 1");
      break;
    case GraphMethod::Full:
      break;
  }
  const bool needs_sigma = method == GraphMethod::Full || weighting == Weighting::Gaussian;
  if (needs_sigma && (!(sigma > 0.0) || !std::isfinite(sigma))) {
    throw Error(ErrorKind::InvalidRecipe, "sigma must be positive and finite");
  }
}

double euclidean_distance(const Eigen::Ref<const Eigen::RowVectorXd>& a,
                          const Eigen::Ref<const Eigen::RowVectorXd>& b) {
  return (a - b).norm();
}

double gaussian_similarity(double dist, double sigma) {
  return std::exp(-(dist * dist) / (2.0 * sigma * sigma));
}

Matrix pairwise_distances(const DataSet& data, const DistanceFn& metric) {
  const Index n = data.n_samples();
  Matrix dist = Matrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      const double d = metric(data.sample(i), data.sample(j));
      if (!std::isfinite(d) || d < 0.0) {
        throw Error(ErrorKind::InvalidData, "metric returned a negative or non-finite distance");
      }
      dist(i, j) = d;
      dist(j, i) = d;
    }
  }
  return dist;
}

namespace {

double edge_weight(double dist, Weighting weighting, double sigma) {
  return weighting == Weighting::Binary ? 1.0 : gaussian_similarity(dist, sigma);
}

void require_sigma(Weighting weighting, double sigma) {
  if (weighting == Weighting::Gaussian && (!(sigma > 0.0) || !std::isfinite(sigma))) {
    throw Error(ErrorKind::InvalidRecipe, "sigma must be positive and finite");
  }
}

}  // namespace

SimilarityGraph build_epsilon_graph(const DataSet& data, double epsilon, Weighting weighting,
                                    double sigma, const DistanceFn& metric) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw Error(ErrorKind::InvalidRecipe, "epsilon must be positive and finite");
  }
  require_sigma(weighting, sigma);
  const Matrix dist = pairwise_distances(data, metric);
  const Index n = dist.rows();
  Matrix w = Matrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      if (dist(i, j) < epsilon) {
        const double value = edge_weight(dist(i, j), weighting, sigma);
        w(i, j) = value;
        w(j, i) = value;
      }
    }
  }
  return SimilarityGraph(std::move(w));
}

SimilarityGraph build_knn_graph(const DataSet& data, int k, KnnMode mode, Weighting weighting,
                                double sigma, const DistanceFn& metric) {
  const Index n = data.n_samples();
  if (k < 1 || k > n - 1) {
    throw Error(ErrorKind::InvalidRecipe,
                "k must lie in [1, N-1] (N = " + std::to_string(n) + ")");
  }
  require_sigma(weighting, sigma);
  const Matrix dist = pairwise_distances(data, metric);

  // neighbor(i, j) is true when j is among the k nearest of i.
  Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> neighbor =
      Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>::Constant(n, n, false);
  std::vector<Index> order(static_cast<std::size_t>(n - 1));
  for (Index i = 0; i < n; ++i) {
    order.clear();
    for (Index j = 0; j < n; ++j) {
      if (j != i) order.push_back(j);
    }
    std::partial_sort(order.begin(), order.begin() + k, order.end(), [&](Index a, Index b) {
      if (dist(i, a) != dist(i, b)) return dist(i, a) < dist(i, b);
      return a < b;
    });
    for (int r = 0; r < k; ++r) neighbor(i, order[static_cast<std::size_t>(r)]) = true;
  }

  Matrix w = Matrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      const bool keep = mode == KnnMode::Mutual ? (neighbor(i, j) && neighbor(j, i))
                                                : (neighbor(i, j) || neighbor(j, i));
      if (keep) {
        const double value = edge_weight(dist(i, j), weighting, sigma);
        w(i, j) = value;
        w(j, i) = value;
      }
    }
  }
  return SimilarityGraph(std::move(w));
}

SimilarityGraph build_full_graph(const DataSet& data, double sigma, const DistanceFn& metric) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw Error(ErrorKind::InvalidRecipe, "sigma must be positive and finite");
  }
  const Matrix dist = pairwise_distances(data, metric);
  const Index n = dist.rows();
  Matrix w = Matrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      const double value = gaussian_similarity(dist(i, j), sigma);
      w(i, j) = value;
      w(j, i) = value;
    }
  }
  return SimilarityGraph(std::move(w));
}

SimilarityGraph build_graph(const DataSet& data, const GraphRecipe& recipe,
                            const DistanceFn& metric) {
  recipe.validate();
  switch (recipe.method) {
    case GraphMethod::Epsilon:
      return build_epsilon_graph(data, recipe.epsilon, recipe.weighting, recipe.sigma, metric);
    case GraphMethod::Knn:
      return build_knn_graph(data, recipe.k, recipe.knn_mode, recipe.weighting, recipe.sigma,
                             metric);
    case GraphMethod::Full:
      return build_full_graph(data, recipe.sigma, metric);
  }
  throw Error(ErrorKind::InvalidRecipe, "unknown graph method");
}

SimilarityGraph from_edge_list(Index n, const std::vector<WeightedEdge>& edges) {
  if (n < 1) throw Error(ErrorKind::InvalidEdgeList, "graph needs at least one node");
  Matrix w = Matrix::Zero(n, n);
  std::set<std::pair<Index, Index>> seen;
  for (const auto& e : edges) {
    if (e.i < 0 || e.j < 0 || e.i >= n || e.j >= n) {
      throw Error(ErrorKind::InvalidEdgeList,
                  "edge (" + std::to_string(e.i) + ", " + std::to_string(e.j) +
                      ") has an index out of range");
    }
    if (e.i == e.j) {
      throw Error(ErrorKind::InvalidEdgeList, "self-loop at node " + std::to_string(e.i), e.i);
    }
    if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
      throw Error(ErrorKind::InvalidEdgeList, "edge weights must be positive and finite");
    }
    const auto key = std::minmax(e.i, e.j);
    if (!seen.insert(key).second) {
      throw Error(ErrorKind::InvalidEdgeList,
                  "duplicate edge {" + std::to_string(key.first) + ", " +
                      std::to_string(key.second) + "}");
    }
    w(e.i, e.j) = e.weight;
    w(e.j, e.i) = e.weight;
  }
  return SimilarityGraph(std::move(w));
}

std::vector<std::string> recipe_warnings(const GraphRecipe& recipe) {
  std::vector<std::string> out;
  if (recipe.method == GraphMethod::Knn && recipe.weighting == Weighting::Binary) {
    out.emplace_back(
        "binary weighting on a k-NN graph is discouraged: connected nodes are not "
        "guaranteed to be close");
  }
  return out;
}

}  // namespace spectral
