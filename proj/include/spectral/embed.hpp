#pragma once

#include "spectral/eigensolver.hpp"
#include "spectral/graph.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace spectral {

enum class EmbeddingSource { Lem, Lpp };

/// m x N coordinates; column i is the mapped point y_i. `eigenvalues` holds
/// the eigenvalue belonging to each row.
struct Embedding {
  Matrix coords;
  EmbeddingSource source = EmbeddingSource::Lem;
  Vector eigenvalues;

  Index dimension() const noexcept { return coords.rows(); }
  Index n_samples() const noexcept { return coords.cols(); }
};

/// Which normalization constraint LEM imposes: w^T D w = 1 (generalized
/// problem, the default) or w^T w = 1 (ordinary problem on L).
enum class LemConstraint { DegreeWeighted, Identity };

struct LemOptions {
  LemConstraint constraint = LemConstraint::DegreeWeighted;
  JacobiOptions jacobi{};
};

/// Laplacian eigenmaps: rows are eigenvectors 2..m+1 of L w = lambda D w.
/// Throws DisconnectedGraph (detail = component count), IsolatedNode or
/// ShapeError when m is outside [1, N-1].
Embedding lem_embed(const SimilarityGraph& g, int m, const LemOptions& options = {});

/// Feature map applied to every sample before LPP. `map` takes N x d samples
/// as rows and returns N x P.
struct Expansion {
  std::string spec;
  std::function<Matrix(const Matrix&)> map;

  /// "monomial:1" (identity) or "monomial:2". Throws InvalidExpansion.
  static Expansion monomials(int degree);
  /// Parses a spec produced by `monomials`.
  static Expansion from_spec(const std::string& spec);
};

/// Degree 1 returns the input unchanged; degree 2 appends every product
/// x_a x_b with a <= b in lexicographic order after the original features.
DataSet expand_monomials(const DataSet& data, int degree);

struct LppModel {
  /// P x m, column u is the projection vector z_u.
  Matrix projections;
  std::optional<Expansion> expansion;
  Vector eigenvalues;
  Index input_dim = 0;
  /// Rank of D' kept after whitening.
  Index numerical_rank = 0;
  /// Embedding of the training samples (m x N).
  Matrix training_embedding;
  /// True for solutions whose training values have variance below 1e-10.
  std::vector<bool> near_constant;

  Index dimension() const noexcept { return projections.cols(); }
};

struct LppOptions {
  /// Whitening discards eigenvalues of D' below this times the largest one.
  double rank_rel = 1e-10;
  JacobiOptions jacobi{};
};

/// Locality preserving projections: minimizes z^T F L F^T z subject to
/// z^T F D F^T z = 1 and returns the m smallest solutions.
LppModel lpp_fit(const DataSet& data, const SimilarityGraph& g, int m,
                 std::optional<Expansion> expansion = std::nullopt,
                 const LppOptions& options = {});

/// y_i = (f(x_i)^T z_1, ..., f(x_i)^T z_m).
Embedding lpp_transform(const LppModel& model, const DataSet& new_data);

}  // namespace spectral
