#pragma once

#include "spectral/graph.hpp"

#include <optional>

namespace spectral {

/// Normalization carried by the eigenvectors of a Spectrum.
///  - IdentityNorm:  u^T u = 1 (ordinary problem L u = gamma u)
///  - DWeightedNorm: w^T D w = 1 (generalized problem L w = lambda D w)
///  - HatNorm:       u^T u = 1 for the symmetric normalized matrix
enum class Convention { IdentityNorm, DWeightedNorm, HatNorm };

/// Ascending eigenpairs; column u of `eigenvectors` belongs to eigenvalue u.
/// The first component with magnitude above 1e-9 of every eigenvector is
/// positive.
struct Spectrum {
  Vector eigenvalues;
  Matrix eigenvectors;
  Convention convention = Convention::IdentityNorm;

  Index size() const noexcept { return eigenvalues.size(); }
};

struct JacobiOptions {
  int max_sweeps = 64;
  /// Stop once the off-diagonal Frobenius norm is at most this times ||S||_F.
  double off_diagonal_rel = 1e-14;
  /// Inputs with max|S - S^T| above this times max|S| are rejected.
  double symmetry_rel = 1e-10;
};

/// Full eigendecomposition of a dense symmetric matrix by cyclic Jacobi
/// rotations. Throws NotSymmetric or NoConvergence.
Spectrum sym_eig(const Matrix& s, const JacobiOptions& options = {});

/// Solves L w = lambda D w (D = diag(degrees)) through the symmetric
/// normalized matrix D^{-1/2} L D^{-1/2}; eigenvectors are mapped back with
/// w = D^{-1/2} w_hat and scaled to w^T D w = 1.
Spectrum generalized_eig(const Matrix& l, const Vector& degrees,
                         const JacobiOptions& options = {});

/// Eigenpairs of D^{-1/2} L D^{-1/2} (HatNorm convention).
Spectrum sym_normalized_eig(const Matrix& l, const Vector& degrees,
                            const JacobiOptions& options = {});

/// w = D^{-1/2} w_hat, column by column.
Matrix hat_to_generalized(const Matrix& hat_vectors, const Vector& degrees);
/// w_hat = D^{1/2} w, column by column.
Matrix generalized_to_hat(const Matrix& vectors, const Vector& degrees);

/// x^T L x. Throws ShapeError on dimension mismatch.
double rayleigh_objective(const Matrix& l, const Vector& x);

/// 1/2 sum_ij (x_i - x_j)^2 W_ij, which equals x^T L x for L = D - W.
double pairwise_objective(const Matrix& w, const Vector& x);

/// max(1e-9 * |lambda_N|, 1e-12)
double default_kernel_tolerance(const Spectrum& spectrum);

/// Number of eigenvalues not exceeding `tol` (default above).
int kernel_multiplicity(const Spectrum& spectrum, std::optional<double> tol = std::nullopt);

/// Flips each column so that its first component above 1e-9 in magnitude is
/// positive.
void apply_sign_convention(Matrix& vectors);

}  // namespace spectral
