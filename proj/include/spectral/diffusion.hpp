#pragma once

#include "spectral/eigensolver.hpp"
#include "spectral/graph.hpp"

#include <limits>
#include <vector>

namespace spectral {

/// Node temperatures h at elapsed time t of the heat equation dh/dt = -L h.
struct HeatState {
  Vector temperatures;
  double time = 0.0;

  double total_heat() const { return temperatures.sum(); }
};

enum class StabilityPolicy { Throw, Tag };

struct StepOptions {
  StabilityPolicy on_unstable = StabilityPolicy::Throw;
};

struct StepResult {
  HeatState state;
  /// Set when dt >= 2 / gamma_max and the policy is Tag.
  bool unstable = false;
};

/// Explicit Euler map h <- (I - dt L) h applied n_steps times.
StepResult step_discrete(const Matrix& l, const HeatState& h0, double dt, long n_steps,
                         const StepOptions& options = {});

/// h(t) = sum_u a_u exp(-gamma_u t) u_u with a_u = u_u^T h(0).
HeatState solve_analytic(const Matrix& l, const HeatState& h0, double t);

/// Same, reusing a precomputed ordinary spectrum of L.
HeatState solve_analytic(const Spectrum& spectrum, const HeatState& h0, double t);

/// xi_u = 1 - dt * gamma_u over the ascending spectrum of L.
Vector mode_decay_factors(const Matrix& l, double dt);

/// 1 / gamma_max, or +infinity when L = 0.
double max_stable_dt(const Matrix& l);

enum class DiffusionMethod { Analytic, Discrete };

/// Heat states at each of `times` (ascending, >= h0.time). The discrete
/// method advances with step `dt`, rounding each interval to a whole number
/// of steps.
std::vector<HeatState> trajectory(const Matrix& l, const HeatState& h0,
                                  const std::vector<double>& times, DiffusionMethod method,
                                  double dt = 1e-3, const StepOptions& options = {});

}  // namespace spectral
