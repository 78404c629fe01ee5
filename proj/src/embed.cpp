#include "spectral/embed.hpp"

#include "spectral/error.hpp"
#include "spectral/laplacian.hpp"

#include <cmath>

namespace spectral {

Embedding lem_embed(const SimilarityGraph& g, int m, const LemOptions& options) {
  const Index n = g.n_nodes();
  if (m < 1 || m > n - 1) {
    throw Error(ErrorKind::ShapeError,
                "target dimension must lie in [1, N-1] (N = " + std::to_string(n) + ")");
  }
  const Vector d = degree_vector(g);
  require_positive_degrees(d);
  const ComponentLabels components = connected_components(g);
  if (components.count > 1) {
    throw Error(ErrorKind::DisconnectedGraph,
                "graph has " + std::to_string(components.count) +
                    " connected components; use spectral clustering or embed each component",
                components.count);
  }

  const Matrix l = laplacian(g);
  const Spectrum s = options.constraint == LemConstraint::DegreeWeighted
                         ? generalized_eig(l, d, options.jacobi)
                         : sym_eig(l, options.jacobi);
  Embedding out;
  out.source = EmbeddingSource::Lem;
  out.coords = s.eigenvectors.middleCols(1, m).transpose();
  out.eigenvalues = s.eigenvalues.segment(1, m);
  return out;
}

Expansion Expansion::monomials(int degree) {
  if (degree != 1 && degree != 2) {
    throw Error(ErrorKind::InvalidExpansion,
                "monomial degree must be 1 or 2, got " + std::to_string(degree));
  }
  return Expansion{"monomial:" + std::to_string(degree), [degree](const Matrix& points) {
                     return expand_monomials(DataSet(points), degree).points();
                   }};
}

Expansion Expansion::from_spec(const std::string& spec) {
  if (spec == "monomial:1") return monomials(1);
  if (spec == "monomial:2") return monomials(2);
  throw Error(ErrorKind::InvalidExpansion, "unknown expansion '" + spec + "'");
}

DataSet expand_monomials(const DataSet& data, int degree) {
  if (degree == 1) return data;
  if (degree != 2) {
    throw Error(ErrorKind::InvalidExpansion,
                "monomial degree must be 1 or 2, got " + std::to_string(degree));
  }
  const Matrix& x = data.points();
  const Index d = x.cols();
  Matrix out(x.rows(), d + d * (d + 1) / 2);
  out.leftCols(d) = x;
  Index col = d;
  for (Index a = 0; a < d; ++a) {
    for (Index b = a; b < d; ++b) out.col(col++) = x.col(a).cwiseProduct(x.col(b));
  }
  return DataSet(std::move(out));
}

namespace {

Matrix features_of(const std::optional<Expansion>& expansion, const DataSet& data) {
  if (!expansion) return data.points();
  Matrix f = expansion->map(data.points());
  if (f.rows() != data.n_samples()) {
    throw Error(ErrorKind::InvalidExpansion, "expansion changed the number of samples");
  }
  return f;
}

}  // namespace

LppModel lpp_fit(const DataSet& data, const SimilarityGraph& g, int m,
                 std::optional<Expansion> expansion, const LppOptions& options) {
  if (g.n_nodes() != data.n_samples()) {
    throw Error(ErrorKind::ShapeError, "graph and data set have different sample counts");
  }
  const Vector d = degree_vector(g);
  require_positive_degrees(d);

  // Samples as columns: F is P x N.
  const Matrix f = features_of(expansion, data).transpose();
  const Index p = f.rows();
  if (m < 1 || m > p) {
    throw Error(ErrorKind::ShapeError,
                "target dimension must lie in [1, P] (P = " + std::to_string(p) + ")");
  }

  const Matrix l = laplacian(g);
  Matrix l_proj = f * l * f.transpose();
  Matrix d_proj = f * d.asDiagonal() * f.transpose();
  l_proj = 0.5 * (l_proj + l_proj.transpose()).eval();
  d_proj = 0.5 * (d_proj + d_proj.transpose()).eval();

  // Whiten D' = Q Lambda Q^T, keeping directions above the rank threshold.
  const Spectrum constraint = sym_eig(d_proj, options.jacobi);
  const double top = constraint.eigenvalues.size() ? constraint.eigenvalues.maxCoeff() : 0.0;
  std::vector<Index> kept;
  for (Index i = 0; i < constraint.size(); ++i) {
    if (top > 0.0 && constraint.eigenvalues(i) > options.rank_rel * top) kept.push_back(i);
  }
  const auto rank = static_cast<Index>(kept.size());
  if (rank < m) {
    throw Error(ErrorKind::SingularConstraint,
                "constraint matrix has numerical rank " + std::to_string(rank) +
                    ", fewer than the " + std::to_string(m) + " requested projections",
                static_cast<long>(rank));
  }
  Matrix whiten(p, rank);
  for (Index k = 0; k < rank; ++k) {
    const Index src = kept[static_cast<std::size_t>(k)];
    whiten.col(k) = constraint.eigenvectors.col(src) / std::sqrt(constraint.eigenvalues(src));
  }

  Matrix reduced = whiten.transpose() * l_proj * whiten;
  reduced = 0.5 * (reduced + reduced.transpose()).eval();
  const Spectrum s = sym_eig(reduced, options.jacobi);

  LppModel model;
  model.expansion = std::move(expansion);
  model.input_dim = data.n_features();
  model.numerical_rank = rank;
  model.eigenvalues = s.eigenvalues.head(m);
  model.projections = whiten * s.eigenvectors.leftCols(m);

  // Orient each projection so the training embedding follows the sign convention.
  Matrix values = f.transpose() * model.projections;  // N x m
  for (Index u = 0; u < m; ++u) {
    for (Index i = 0; i < values.rows(); ++i) {
      if (std::abs(values(i, u)) > 1e-9) {
        if (values(i, u) < 0.0) model.projections.col(u) *= -1.0;
        break;
      }
    }
  }
  model.training_embedding = model.projections.transpose() * f;
  model.near_constant.resize(static_cast<std::size_t>(m));
  for (Index u = 0; u < m; ++u) {
    const auto row = model.training_embedding.row(u).array();
    const double variance = (row - row.mean()).square().mean();
    model.near_constant[static_cast<std::size_t>(u)] = variance < 1e-10;
  }
  return model;
}

Embedding lpp_transform(const LppModel& model, const DataSet& new_data) {
  if (new_data.n_features() != model.input_dim) {
    throw Error(ErrorKind::ShapeError,
                "model expects " + std::to_string(model.input_dim) + " features, got " +
                    std::to_string(new_data.n_features()));
  }
  const Matrix f = features_of(model.expansion, new_data).transpose();
  if (f.rows() != model.projections.rows()) {
    throw Error(ErrorKind::ShapeError, "expanded feature count does not match the model");
  }
  Embedding out;
  out.source = EmbeddingSource::Lpp;
  out.coords = model.projections.transpose() * f;
  out.eigenvalues = model.eigenvalues;
  return out;
}

}  // namespace spectral
