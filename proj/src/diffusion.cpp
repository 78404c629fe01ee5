#include "spectral/diffusion.hpp"

#include "spectral/error.hpp"

#include <cmath>

namespace spectral {

namespace {

void check_state(const Matrix& l, const HeatState& h) {
  if (l.rows() != l.cols() || l.rows() != h.temperatures.size()) {
    throw Error(ErrorKind::ShapeError, "heat vector length does not match the Laplacian");
  }
  if (!h.temperatures.allFinite()) {
    throw Error(ErrorKind::InvalidData, "heat vector has non-finite entries");
  }
}

double largest_eigenvalue(const Matrix& l) {
  if (l.size() == 0) return 0.0;
  const Spectrum s = sym_eig(l);
  return s.eigenvalues(s.size() - 1);
}

bool is_unstable(const Matrix& l, double dt) {
  const double gershgorin = l.cwiseAbs().rowwise().sum().maxCoeff();
  if (dt * gershgorin < 2.0) return false;
  return dt * largest_eigenvalue(l) >= 2.0;
}

}  // namespace

StepResult step_discrete(const Matrix& l, const HeatState& h0, double dt, long n_steps,
                         const StepOptions& options) {
  check_state(l, h0);
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw Error(ErrorKind::InvalidRecipe, "time step must be positive and finite");
  }
  if (n_steps < 0) throw Error(ErrorKind::InvalidRecipe, "step count must be nonnegative");

  StepResult out;
  if (is_unstable(l, dt)) {
    if (options.on_unstable == StabilityPolicy::Throw) {
      throw Error(ErrorKind::UnstableStep,
                  "dt = " + std::to_string(dt) + " violates dt < 2 / gamma_max");
    }
    out.unstable = true;
  }

  const Matrix p = Matrix::Identity(l.rows(), l.cols()) - dt * l;
  Vector h = h0.temperatures;
  Vector next(h.size());
  for (long step = 0; step < n_steps; ++step) {
    next.noalias() = p * h;
    h.swap(next);
  }
  out.state.temperatures = std::move(h);
  out.state.time = h0.time + dt * static_cast<double>(n_steps);
  return out;
}

HeatState solve_analytic(const Spectrum& spectrum, const HeatState& h0, double t) {
  if (spectrum.eigenvectors.rows() != h0.temperatures.size()) {
    throw Error(ErrorKind::ShapeError, "heat vector length does not match the spectrum");
  }
  const Vector coeffs = spectrum.eigenvectors.transpose() * h0.temperatures;
  const Vector decay = (-spectrum.eigenvalues.array() * t).exp();
  HeatState out;
  out.temperatures = spectrum.eigenvectors * coeffs.cwiseProduct(decay);
  out.time = h0.time + t;
  return out;
}

HeatState solve_analytic(const Matrix& l, const HeatState& h0, double t) {
  check_state(l, h0);
  return solve_analytic(sym_eig(l), h0, t);
}

Vector mode_decay_factors(const Matrix& l, double dt) {
  if (!(dt >= 0.0) || !std::isfinite(dt)) {
    throw Error(ErrorKind::InvalidRecipe, "time step must be nonnegative and finite");
  }
  const Spectrum s = sym_eig(l);
  return (1.0 - dt * s.eigenvalues.array()).matrix();
}

double max_stable_dt(const Matrix& l) {
  const double gamma_max = largest_eigenvalue(l);
  if (gamma_max <= 0.0) return std::numeric_limits<double>::infinity();
  return 1.0 / gamma_max;
}

std::vector<HeatState> trajectory(const Matrix& l, const HeatState& h0,
                                  const std::vector<double>& times, DiffusionMethod method,
                                  double dt, const StepOptions& options) {
  check_state(l, h0);
  std::vector<HeatState> out;
  out.reserve(times.size());
  if (method == DiffusionMethod::Analytic) {
    const Spectrum s = sym_eig(l);
    for (double t : times) {
      if (t < h0.time) throw Error(ErrorKind::InvalidRecipe, "sample times must be >= start");
      out.push_back(solve_analytic(s, h0, t - h0.time));
    }
    return out;
  }
  HeatState current = h0;
  for (double t : times) {
    if (t < current.time) {
      throw Error(ErrorKind::InvalidRecipe, "sample times must be ascending");
    }
    const long n = std::lround((t - current.time) / dt);
    current = step_discrete(l, current, dt, n, options).state;
    current.time = t;
    out.push_back(current);
  }
  return out;
}

}  // namespace spectral
