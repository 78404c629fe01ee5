#include "spectral/eigensolver.hpp"

#include "spectral/error.hpp"
#include "spectral/laplacian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace spectral {

namespace {

double off_diagonal_norm(const Matrix& a) {
  double sum = 0.0;
  for (Index j = 0; j < a.cols(); ++j) {
    for (Index i = 0; i < a.rows(); ++i) {
      if (i != j) sum += a(i, j) * a(i, j);
    }
  }
  return std::sqrt(sum);
}

void check_symmetric(const Matrix& s, double rel) {
  if (s.rows() != s.cols()) {
    throw Error(ErrorKind::ShapeError, "matrix is not square");
  }
  if (!s.allFinite()) {
    throw Error(ErrorKind::InvalidData, "matrix has non-finite entries");
  }
  if (s.size() == 0) return;
  const double scale = s.cwiseAbs().maxCoeff();
  const double asym = (s - s.transpose()).cwiseAbs().maxCoeff();
  if (asym > rel * scale) {
    throw Error(ErrorKind::NotSymmetric, "max |S - S^T| = " + std::to_string(asym) +
                                             " exceeds tolerance");
  }
}

// One rotation annihilating a(p,q). Columns p and q are updated as contiguous
// memory; the rows are then mirrored from the columns so `a` stays exactly
// symmetric.
void rotate(Matrix& a, Matrix& v, Index p, Index q, double c, double s, double t) {
  const Index n = a.rows();
  const double apq = a(p, q);
  double* col_p = a.col(p).data();
  double* col_q = a.col(q).data();
  for (Index r = 0; r < n; ++r) {
    if (r == p || r == q) continue;
    const double arp = col_p[r];
    const double arq = col_q[r];
    col_p[r] = c * arp - s * arq;
    col_q[r] = s * arp + c * arq;
  }
  for (Index r = 0; r < n; ++r) {
    if (r == p || r == q) continue;
    a(p, r) = col_p[r];
    a(q, r) = col_q[r];
  }
  a(p, p) -= t * apq;
  a(q, q) += t * apq;
  a(p, q) = 0.0;
  a(q, p) = 0.0;

  double* vp = v.col(p).data();
  double* vq = v.col(q).data();
  for (Index r = 0; r < n; ++r) {
    const double x = vp[r];
    const double y = vq[r];
    vp[r] = c * x - s * y;
    vq[r] = s * x + c * y;
  }
}

void jacobi(Matrix& a, Matrix& v, const JacobiOptions& options) {
  const Index n = a.rows();
  const double norm = a.norm();
  if (norm == 0.0) return;
  const double target = options.off_diagonal_rel * norm;
  for (int sweep = 0; sweep < options.max_sweeps; ++sweep) {
    if (off_diagonal_norm(a) <= target) return;
    for (Index p = 0; p < n - 1; ++p) {
      for (Index q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double app = a(p, p);
        const double aqq = a(q, q);
        const double g = 100.0 * std::abs(apq);
        // Entries too small to move either diagonal element are dropped.
        if (sweep > 3 && std::abs(app) + g == std::abs(app) &&
            std::abs(aqq) + g == std::abs(aqq)) {
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          continue;
        }
        const double h = aqq - app;
        double t;
        if (std::abs(h) + g == std::abs(h)) {
          t = apq / h;
        } else {
          const double theta = 0.5 * h / apq;
          t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        rotate(a, v, p, q, c, s, t);
      }
    }
  }
  if (off_diagonal_norm(a) <= target) return;
  throw Error(ErrorKind::NoConvergence,
              "Jacobi did not converge within " + std::to_string(options.max_sweeps) +
                  " sweeps");
}

Vector inverse_sqrt_degrees(const Vector& degrees) {
  require_positive_degrees(degrees);
  return degrees.cwiseSqrt().cwiseInverse();
}

Matrix symmetric_scale(const Matrix& l, const Vector& scale) {
  const Index n = l.rows();
  Matrix out(n, n);
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < n; ++i) out(i, j) = l(i, j) * (scale(i) * scale(j));
  }
  return out;
}

}  // namespace

void apply_sign_convention(Matrix& vectors) {
  for (Index j = 0; j < vectors.cols(); ++j) {
    for (Index i = 0; i < vectors.rows(); ++i) {
      const double x = vectors(i, j);
      if (std::abs(x) > 1e-9) {
        if (x < 0.0) vectors.col(j) *= -1.0;
        break;
      }
    }
  }
}

Spectrum sym_eig(const Matrix& s, const JacobiOptions& options) {
  check_symmetric(s, options.symmetry_rel);
  const Index n = s.rows();
  Matrix a = 0.5 * (s + s.transpose());
  Matrix v = Matrix::Identity(n, n);
  jacobi(a, v, options);

  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Index x, Index y) { return a(x, x) < a(y, y); });

  Spectrum out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (Index k = 0; k < n; ++k) {
    const Index src = order[static_cast<std::size_t>(k)];
    out.eigenvalues(k) = a(src, src);
    out.eigenvectors.col(k) = v.col(src).normalized();
  }
  apply_sign_convention(out.eigenvectors);
  out.convention = Convention::IdentityNorm;
  return out;
}

Spectrum sym_normalized_eig(const Matrix& l, const Vector& degrees,
                            const JacobiOptions& options) {
  if (l.rows() != l.cols() || l.rows() != degrees.size()) {
    throw Error(ErrorKind::ShapeError, "Laplacian and degree vector sizes disagree");
  }
  const Vector inv_sqrt = inverse_sqrt_degrees(degrees);
  check_symmetric(l, options.symmetry_rel);
  Spectrum out = sym_eig(symmetric_scale(l, inv_sqrt), options);
  out.convention = Convention::HatNorm;
  return out;
}

Spectrum generalized_eig(const Matrix& l, const Vector& degrees, const JacobiOptions& options) {
  Spectrum out = sym_normalized_eig(l, degrees, options);
  out.eigenvectors = hat_to_generalized(out.eigenvectors, degrees);
  for (Index u = 0; u < out.eigenvectors.cols(); ++u) {
    const double dnorm = std::sqrt(out.eigenvectors.col(u).cwiseAbs2().dot(degrees));
    out.eigenvectors.col(u) /= dnorm;
  }
  out.convention = Convention::DWeightedNorm;
  return out;
}

Matrix hat_to_generalized(const Matrix& hat_vectors, const Vector& degrees) {
  return inverse_sqrt_degrees(degrees).asDiagonal() * hat_vectors;
}

Matrix generalized_to_hat(const Matrix& vectors, const Vector& degrees) {
  require_positive_degrees(degrees);
  return degrees.cwiseSqrt().asDiagonal() * vectors;
}

double rayleigh_objective(const Matrix& l, const Vector& x) {
  if (l.rows() != l.cols() || l.cols() != x.size()) {
    throw Error(ErrorKind::ShapeError, "vector length does not match matrix size");
  }
  return x.dot(l * x);
}

double pairwise_objective(const Matrix& w, const Vector& x) {
  if (w.rows() != w.cols() || w.cols() != x.size()) {
    throw Error(ErrorKind::ShapeError, "vector length does not match matrix size");
  }
  double sum = 0.0;
  for (Index j = 0; j < w.cols(); ++j) {
    for (Index i = 0; i < w.rows(); ++i) {
      const double diff = x(i) - x(j);
      sum += diff * diff * w(i, j);
    }
  }
  return 0.5 * sum;
}

double default_kernel_tolerance(const Spectrum& spectrum) {
  if (spectrum.size() == 0) return 1e-12;
  return std::max(1e-9 * std::abs(spectrum.eigenvalues(spectrum.size() - 1)), 1e-12);
}

int kernel_multiplicity(const Spectrum& spectrum, std::optional<double> tol) {
  const double limit = tol.value_or(default_kernel_tolerance(spectrum));
  int count = 0;
  for (Index i = 0; i < spectrum.size(); ++i) {
    if (spectrum.eigenvalues(i) <= limit) ++count;
  }
  return count;
}

}  // namespace spectral
