#include "spectral/laplacian.hpp"

#include "spectral/error.hpp"

#include <cmath>
#include <deque>

namespace spectral {

Vector degree_vector(const SimilarityGraph& g) { return g.weights().rowwise().sum(); }

Matrix laplacian(const SimilarityGraph& g) {
  Matrix l = -g.weights();
  l.diagonal() = degree_vector(g);
  return l;
}

void require_positive_degrees(const Vector& degrees) {
  for (Index i = 0; i < degrees.size(); ++i) {
    if (!(degrees(i) > 0.0)) {
      throw Error(ErrorKind::IsolatedNode,
                  "node " + std::to_string(i + 1) + " has zero degree; prune or reconnect it",
                  static_cast<long>(i));
    }
  }
}

Matrix sym_normalized(const SimilarityGraph& g) {
  const Vector d = degree_vector(g);
  require_positive_degrees(d);
  const Vector inv_sqrt = d.cwiseSqrt().cwiseInverse();
  const Index n = d.size();
  Matrix out(n, n);
  Matrix l = laplacian(g);
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < n; ++i) {
      // scale factor formed first so that out stays bit-symmetric
      out(i, j) = l(i, j) * (inv_sqrt(i) * inv_sqrt(j));
    }
  }
  out.diagonal().setOnes();
  return out;
}

Matrix random_walk_normalized(const SimilarityGraph& g) {
  const Vector d = degree_vector(g);
  require_positive_degrees(d);
  Matrix out = d.cwiseInverse().asDiagonal() * laplacian(g);
  out.diagonal().setOnes();
  return out;
}

LaplacianBundle make_bundle(const SimilarityGraph& g) {
  LaplacianBundle b;
  b.degrees = degree_vector(g);
  b.laplacian = laplacian(g);
  if ((b.degrees.array() > 0.0).all()) {
    b.sym_normalized = sym_normalized(g);
    b.random_walk = random_walk_normalized(g);
  }
  return b;
}

ComponentLabels connected_components(const SimilarityGraph& g) {
  const Index n = g.n_nodes();
  ComponentLabels out;
  out.labels.assign(static_cast<std::size_t>(n), 0);
  std::deque<Index> queue;
  for (Index start = 0; start < n; ++start) {
    if (out.labels[static_cast<std::size_t>(start)] != 0) continue;
    const int label = ++out.count;
    out.labels[static_cast<std::size_t>(start)] = label;
    queue.push_back(start);
    while (!queue.empty()) {
      const Index u = queue.front();
      queue.pop_front();
      for (Index v = 0; v < n; ++v) {
        if (g.weight(u, v) > 0.0 && out.labels[static_cast<std::size_t>(v)] == 0) {
          out.labels[static_cast<std::size_t>(v)] = label;
          queue.push_back(v);
        }
      }
    }
  }
  return out;
}

bool satisfies_laplacian_constraints(const Matrix& l, const LaplacianTolerances& tol) {
  if (l.rows() != l.cols()) return false;
  const double scale = l.cwiseAbs().maxCoeff();
  const double limit = tol.row_sum_rel * scale;
  if ((l - l.transpose()).cwiseAbs().maxCoeff() > limit) return false;
  if (l.rowwise().sum().cwiseAbs().maxCoeff() > limit) return false;
  if (l.colwise().sum().cwiseAbs().maxCoeff() > limit) return false;
  for (Index i = 0; i < l.rows(); ++i) {
    if (l(i, i) < 0.0) return false;
    for (Index j = 0; j < l.cols(); ++j) {
      if (i != j && l(i, j) > 0.0) return false;
    }
  }
  return true;
}

}  // namespace spectral
