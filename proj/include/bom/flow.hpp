#pragma once

#include <stdexcept>
#include <vector>

#include "bom/energies.hpp"
#include "bom/spectral.hpp"

namespace bom {

/// Time-integration parameters for the truncated equation
///   u_t + H u_xx + pi_N((pi_N u) (pi_N u)_x) = 0.
/// Modes above the truncation level evolve by the exact free flow.
struct FlowConfig {
  int truncation = 1;
  double dt = 0.0;  // <= 0 selects min(1e-2, 0.1/truncation)
  double t_end = 1.0;
  int record_every = 1;
};

struct Trajectory {
  int truncation = 0;
  double dt = 0.0;
  std::vector<double> times;
  std::vector<SpectralField> snapshots;
};

/// Thrown when the integration produces a non-finite coefficient; carries the
/// last finite state for inspection.
struct FlowBlowup : std::runtime_error {
  FlowBlowup(double t, SpectralField last)
      : std::runtime_error("flow: non-finite coefficient at t = " + std::to_string(t)),
        time(t),
        last_state(std::move(last)) {}
  double time;
  SpectralField last_state;
};

/// Integrating-factor RK4 on the Fourier coefficients: the dispersive symbol
/// (phase speed n|n|) is propagated exactly, the nonlinear products are
/// computed alias-free, and only the step count limits accuracy.  Negative
/// dt integrates backwards.
Trajectory evolve(const SpectralField& u0, const FlowConfig& cfg);

/// Energy along a trajectory after projection to the truncation range, with
/// centered finite-difference time derivatives at the interior snapshots.
/// derivative uses the 3-point stencil (aligned with times[1..k-2]);
/// derivative4 the 4th-order 5-point one (times[2..k-3]), whose defect
/// against the snapshots shrinks with the integrator's own order.
struct DriftSeries {
  std::vector<double> times;
  std::vector<double> energy;
  std::vector<double> derivative;
  std::vector<double> derivative4;
};
DriftSeries energy_drift(const Trajectory& traj, const EnergySpec& spec);

}  // namespace bom
