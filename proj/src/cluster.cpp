#include "spectral/cluster.hpp"

#include "spectral/error.hpp"
#include "spectral/laplacian.hpp"

#include <limits>
#include <map>
#include <random>

namespace spectral {

SpectralCoordinates spectral_coordinates(const SimilarityGraph& g, int k,
                                         const JacobiOptions& jacobi) {
  const Index n = g.n_nodes();
  if (k < 1 || k > n) {
    throw Error(ErrorKind::ShapeError,
                "cluster count must lie in [1, N] (N = " + std::to_string(n) + ")");
  }
  const Vector d = degree_vector(g);
  require_positive_degrees(d);
  const Spectrum s = generalized_eig(laplacian(g), d, jacobi);

  SpectralCoordinates out;
  out.points = s.eigenvectors.leftCols(k).transpose();
  for (Index j = 0; j < n; ++j) {
    const double norm = out.points.col(j).norm();
    if (norm > 1e-12) {
      out.points.col(j) /= norm;
    } else {
      out.points.col(j).setZero();
      out.zero_columns.push_back(j);
    }
  }
  return out;
}

namespace {

// Uniform in [0, 1) from the top 53 bits; independent of the standard
// library's distribution implementations.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Matrix plus_plus_init(const Matrix& x, int k, std::mt19937_64& rng) {
  const Index n = x.cols();
  Matrix centers(x.rows(), k);
  std::vector<bool> chosen(static_cast<std::size_t>(n), false);
  auto first = static_cast<Index>(uniform01(rng) * static_cast<double>(n));
  if (first >= n) first = n - 1;
  centers.col(0) = x.col(first);
  chosen[static_cast<std::size_t>(first)] = true;

  Vector nearest = (x.colwise() - centers.col(0)).colwise().squaredNorm().transpose();
  for (int c = 1; c < k; ++c) {
    const double total = nearest.sum();
    Index pick = -1;
    if (total > 0.0) {
      const double target = uniform01(rng) * total;
      double cumulative = 0.0;
      for (Index i = 0; i < n; ++i) {
        if (nearest(i) <= 0.0) continue;
        cumulative += nearest(i);
        pick = i;
        if (cumulative > target) break;
      }
    } else {
      // every point coincides with a center; take the lowest unused index
      for (Index i = 0; i < n && pick < 0; ++i) {
        if (!chosen[static_cast<std::size_t>(i)]) pick = i;
      }
    }
    centers.col(c) = x.col(pick);
    chosen[static_cast<std::size_t>(pick)] = true;
    nearest = nearest.cwiseMin((x.colwise() - centers.col(c)).colwise().squaredNorm().transpose());
  }
  return centers;
}

double assign(const Matrix& x, const Matrix& centers, std::vector<int>& labels) {
  double inertia = 0.0;
  for (Index i = 0; i < x.cols(); ++i) {
    int best = 0;
    double best_dist = std::numeric_limits<double>::infinity();
    for (Index c = 0; c < centers.cols(); ++c) {
      const double dist = (x.col(i) - centers.col(c)).squaredNorm();
      if (dist < best_dist) {
        best_dist = dist;
        best = static_cast<int>(c);
      }
    }
    labels[static_cast<std::size_t>(i)] = best;
    inertia += best_dist;
  }
  return inertia;
}

// Moves the point farthest from its centroid into each empty cluster.
int repair_empty(const Matrix& x, Matrix& centers, std::vector<int>& labels) {
  const auto k = static_cast<int>(centers.cols());
  int repairs = 0;
  for (int c = 0; c < k; ++c) {
    std::vector<int> sizes(static_cast<std::size_t>(k), 0);
    for (int label : labels) ++sizes[static_cast<std::size_t>(label)];
    if (sizes[static_cast<std::size_t>(c)] > 0) continue;
    Index far = -1;
    double far_dist = -1.0;
    for (Index i = 0; i < x.cols(); ++i) {
      const int owner = labels[static_cast<std::size_t>(i)];
      if (sizes[static_cast<std::size_t>(owner)] < 2) continue;
      const double dist = (x.col(i) - centers.col(owner)).squaredNorm();
      if (dist > far_dist) {
        far_dist = dist;
        far = i;
      }
    }
    labels[static_cast<std::size_t>(far)] = c;
    centers.col(c) = x.col(far);
    ++repairs;
  }
  return repairs;
}

void update_centers(const Matrix& x, const std::vector<int>& labels, Matrix& centers) {
  Matrix sums = Matrix::Zero(centers.rows(), centers.cols());
  std::vector<int> counts(static_cast<std::size_t>(centers.cols()), 0);
  for (Index i = 0; i < x.cols(); ++i) {
    const int c = labels[static_cast<std::size_t>(i)];
    sums.col(c) += x.col(i);
    ++counts[static_cast<std::size_t>(c)];
  }
  for (Index c = 0; c < centers.cols(); ++c) {
    const int count = counts[static_cast<std::size_t>(c)];
    if (count > 0) centers.col(c) = sums.col(c) / count;
  }
}

}  // namespace

ClusterAssignment kmeans(const Matrix& points, int k, std::uint64_t seed,
                         const KMeansOptions& options) {
  const Index n = points.cols();
  if (n < 1) throw Error(ErrorKind::ShapeError, "k-means needs at least one point");
  if (k < 1 || k > n) {
    throw Error(ErrorKind::ShapeError,
                "cluster count must lie in [1, N] (N = " + std::to_string(n) + ")");
  }
  if (!points.allFinite()) throw Error(ErrorKind::InvalidData, "points have non-finite entries");

  std::mt19937_64 rng(seed);
  ClusterAssignment out;
  Matrix centers = plus_plus_init(points, k, rng);
  std::vector<int> labels(static_cast<std::size_t>(n));
  std::vector<int> next(static_cast<std::size_t>(n));
  out.inertia_history.push_back(assign(points, centers, labels));

  for (int iter = 0; iter < options.max_iterations; ++iter) {
    out.reseeds += repair_empty(points, centers, labels);
    update_centers(points, labels, centers);
    const double inertia = assign(points, centers, next);
    out.inertia_history.push_back(inertia);
    ++out.iterations;
    if (next == labels) break;
    labels.swap(next);
  }

  out.reseeds += repair_empty(points, centers, labels);
  update_centers(points, labels, centers);
  out.inertia = 0.0;
  for (Index i = 0; i < n; ++i) {
    out.inertia += (points.col(i) - centers.col(labels[static_cast<std::size_t>(i)])).squaredNorm();
  }
  out.centroids = std::move(centers);
  out.labels.resize(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) out.labels[i] = labels[i] + 1;
  return out;
}

ClusterAssignment spectral_cluster(const SimilarityGraph& g, int k, std::uint64_t seed,
                                   const KMeansOptions& options) {
  return kmeans(spectral_coordinates(g, k).points, k, seed, options);
}

double adjusted_rand_index(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::ShapeError, "label vectors have different lengths");
  }
  const auto n = static_cast<double>(a.size());
  if (a.size() < 2) return 1.0;
  std::map<std::pair<int, int>, double> cells;
  std::map<int, double> rows;
  std::map<int, double> cols;
  for (std::size_t i = 0; i < a.size(); ++i) {
    cells[{a[i], b[i]}] += 1.0;
    rows[a[i]] += 1.0;
    cols[b[i]] += 1.0;
  }
  auto pairs = [](double m) { return 0.5 * m * (m - 1.0); };
  double index = 0.0;
  for (const auto& [key, count] : cells) index += pairs(count);
  double sum_rows = 0.0;
  for (const auto& [key, count] : rows) sum_rows += pairs(count);
  double sum_cols = 0.0;
  for (const auto& [key, count] : cols) sum_cols += pairs(count);
  const double expected = sum_rows * sum_cols / pairs(n);
  const double max_index = 0.5 * (sum_rows + sum_cols);
  if (max_index == expected) return 1.0;
  return (index - expected) / (max_index - expected);
}

}  // namespace spectral
