// Shared fixtures and independent oracles for the test suites. Nothing here
// calls into the code paths it is used to check.
#pragma once

#include "spectral/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace spectral::testing {

/// Three nodes, edges v1-v2 (0.2) and v2-v3 (0.8).
inline SimilarityGraph worked_example_graph() {
  return from_edge_list(3, {{0, 1, 0.2}, {1, 2, 0.8}});
}

/// Seven nodes A..G; A,C,E,G form one chain and B,D,F another.
inline SimilarityGraph two_subgraph_example() {
  return from_edge_list(7, {{0, 2, 1.0}, {2, 4, 1.0}, {4, 6, 1.0}, {1, 3, 1.0}, {3, 5, 1.0}});
}

inline SimilarityGraph path_graph(Index n, double weight = 1.0) {
  std::vector<WeightedEdge> edges;
  for (Index i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, weight});
  return from_edge_list(n, edges);
}

/// Random connected graph: a random spanning tree plus extra random edges,
/// weights uniform in [lo, hi].
inline Matrix random_connected_weights(Index n, std::mt19937_64& rng, double density = 0.3,
                                       double lo = 0.1, double hi = 1.0) {
  std::uniform_real_distribution<double> weight(lo, hi);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  Matrix w = Matrix::Zero(n, n);
  std::vector<Index> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), Index{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  for (Index t = 1; t < n; ++t) {
    std::uniform_int_distribution<Index> parent(0, t - 1);
    const Index a = perm[static_cast<std::size_t>(t)];
    const Index b = perm[static_cast<std::size_t>(parent(rng))];
    const double x = weight(rng);
    w(a, b) = x;
    w(b, a) = x;
  }
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      if (w(i, j) == 0.0 && coin(rng) < density) {
        const double x = weight(rng);
        w(i, j) = x;
        w(j, i) = x;
      }
    }
  }
  return w;
}

/// Block-diagonal graph of random connected blocks; `labels` receives the
/// 1-based block id of every node (nodes are shuffled across blocks).
inline SimilarityGraph random_disjoint_blocks(const std::vector<Index>& sizes,
                                             std::mt19937_64& rng, std::vector<int>& labels,
                                             double density = 0.3) {
  const Index n = std::accumulate(sizes.begin(), sizes.end(), Index{0});
  std::vector<Index> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), Index{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  Matrix w = Matrix::Zero(n, n);
  labels.assign(static_cast<std::size_t>(n), 0);
  Index offset = 0;
  for (std::size_t b = 0; b < sizes.size(); ++b) {
    const Matrix block = random_connected_weights(sizes[b], rng, density);
    for (Index i = 0; i < sizes[b]; ++i) {
      const Index gi = perm[static_cast<std::size_t>(offset + i)];
      labels[static_cast<std::size_t>(gi)] = static_cast<int>(b) + 1;
      for (Index j = 0; j < sizes[b]; ++j) {
        w(gi, perm[static_cast<std::size_t>(offset + j)]) = block(i, j);
      }
    }
    offset += sizes[b];
  }
  return SimilarityGraph(std::move(w));
}

inline Matrix random_points(Index n, Index d, std::mt19937_64& rng, double scale = 1.0) {
  std::uniform_real_distribution<double> u(0.0, scale);
  Matrix x(n, d);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < d; ++j) x(i, j) = u(rng);
  }
  return x;
}

inline Matrix random_symmetric(Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix a(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) a(i, j) = g(rng);
  }
  return 0.5 * (a + a.transpose());
}

// ---------------------------------------------------------------- oracles

/// L = D - W by explicit loops.
inline Matrix naive_laplacian(const Matrix& w) {
  const Index n = w.rows();
  Matrix l = Matrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    double degree = 0.0;
    for (Index j = 0; j < n; ++j) {
      degree += w(i, j);
      if (i != j) l(i, j) = -w(i, j);
    }
    l(i, i) = degree - w(i, i);
  }
  return l;
}

/// ||L w - lambda D w||_2 for a candidate eigenpair.
inline double substitution_residual(const Matrix& l, const Vector& degrees, const Vector& w,
                                    double lambda) {
  Vector r(w.size());
  for (Index i = 0; i < w.size(); ++i) {
    double lw = 0.0;
    for (Index j = 0; j < w.size(); ++j) lw += l(i, j) * w(j);
    r(i) = lw - lambda * degrees(i) * w(i);
  }
  return r.norm();
}

/// Component count by union-find.
inline int union_find_components(const Matrix& w) {
  const Index n = w.rows();
  std::vector<Index> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), Index{0});
  auto find = [&](Index x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  int count = static_cast<int>(n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      if (w(i, j) > 0.0) {
        const Index a = find(i);
        const Index b = find(j);
        if (a != b) {
          parent[static_cast<std::size_t>(a)] = b;
          --count;
        }
      }
    }
  }
  return count;
}

/// Directed k-NN relation by fully sorting every row of a distance table
/// built with explicit loops; ties go to the lower index.
inline std::set<std::pair<Index, Index>> brute_knn_relation(const Matrix& x, int k) {
  const Index n = x.rows();
  std::set<std::pair<Index, Index>> rel;
  for (Index i = 0; i < n; ++i) {
    std::vector<std::pair<double, Index>> cand;
    for (Index j = 0; j < n; ++j) {
      if (j == i) continue;
      double s = 0.0;
      for (Index c = 0; c < x.cols(); ++c) s += (x(i, c) - x(j, c)) * (x(i, c) - x(j, c));
      cand.emplace_back(std::sqrt(s), j);
    }
    std::sort(cand.begin(), cand.end());
    for (int r = 0; r < k; ++r) rel.insert({i, cand[static_cast<std::size_t>(r)].second});
  }
  return rel;
}

/// Smallest k-means objective over every 2-partition of 1-D points.
inline double exhaustive_two_partition_inertia(const std::vector<double>& xs) {
  const std::size_t n = xs.size();
  double best = INFINITY;
  for (unsigned long mask = 1; mask + 1 < (1ul << n); ++mask) {
    double cost = 0.0;
    for (int side = 0; side < 2; ++side) {
      double sum = 0.0;
      int count = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (((mask >> i) & 1ul) == static_cast<unsigned long>(side)) {
          sum += xs[i];
          ++count;
        }
      }
      const double mean = sum / count;
      for (std::size_t i = 0; i < n; ++i) {
        if (((mask >> i) & 1ul) == static_cast<unsigned long>(side)) {
          cost += (xs[i] - mean) * (xs[i] - mean);
        }
      }
    }
    best = std::min(best, cost);
  }
  return best;
}

/// Distance from v to the column span of `basis` (orthonormalized here).
inline double distance_to_span(const Matrix& basis, const Vector& v) {
  const Eigen::HouseholderQR<Matrix> qr(basis);
  const Matrix q = qr.householderQ() * Matrix::Identity(basis.rows(), basis.cols());
  return (v - q * (q.transpose() * v)).norm();
}

/// Same partition up to relabeling.
inline bool same_partition(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if ((a[i] == a[j]) != (b[i] == b[j])) return false;
    }
  }
  return true;
}

}  // namespace spectral::testing
