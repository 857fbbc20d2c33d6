#include "bom/flow.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace bom {

namespace {

using State = std::vector<cplx>;  // positive modes 1..n_max

SpectralField to_field(const State& s) { return SpectralField::from_modes(s); }

bool finite(const State& s) {
  for (const cplx& c : s)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
  return true;
}

// -pi_N((pi_N u) d_x(pi_N u)) on the positive modes; zero above the truncation.
State nonlinear(const State& s, int N) {
  SpectralField u = project_low(to_field(s), N);
  ComplexField uc = u.to_complex();
  ComplexField prod = multiply(uc, derivative(uc, 1));
  State out(s.size(), cplx{});
  const int top = std::min<int>(N, static_cast<int>(s.size()));
  for (int n = 1; n <= top; ++n) out[static_cast<std::size_t>(n - 1)] = -prod.coeff(n);
  return out;
}

}  // namespace

Trajectory evolve(const SpectralField& u0, const FlowConfig& cfg) {
  if (cfg.truncation < 1) throw std::invalid_argument("flow: truncation must be >= 1");
  if (cfg.record_every < 1) throw std::invalid_argument("flow: record_every must be >= 1");
  double dt = cfg.dt;
  if (dt == 0.0) dt = std::min(1e-2, 0.1 / cfg.truncation);
  if (cfg.t_end < 0.0) throw std::invalid_argument("flow: t_end must be >= 0");

  const int n_max = u0.n_max();
  const int N = cfg.truncation;
  const std::uint64_t steps =
      cfg.t_end == 0.0 ? 0 : static_cast<std::uint64_t>(std::ceil(cfg.t_end / std::abs(dt) - 1e-12));
  const double h = steps == 0 ? 0.0 : (dt < 0 ? -1.0 : 1.0) * cfg.t_end / static_cast<double>(steps);

  // exact propagators of the linear part over h and h/2
  State e_full(static_cast<std::size_t>(n_max)), e_half(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) {
    const double omega = static_cast<double>(n) * n;  // phase of mode n is -n|n| t
    e_full[static_cast<std::size_t>(n - 1)] = std::polar(1.0, -omega * h);
    e_half[static_cast<std::size_t>(n - 1)] = std::polar(1.0, -omega * h / 2.0);
  }

  auto scaled = [&](const State& a, const State& ph) {
    State r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * ph[i];
    return r;
  };

  State u(u0.modes());
  Trajectory traj;
  traj.truncation = N;
  traj.dt = h;
  traj.times.push_back(0.0);
  traj.snapshots.push_back(u0);

  double t = 0.0;
  for (std::uint64_t step = 1; step <= steps; ++step) {
    State k1 = nonlinear(u, N);

    State tmp(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) tmp[i] = (u[i] + 0.5 * h * k1[i]) * e_half[i];
    State k2 = nonlinear(tmp, N);

    for (std::size_t i = 0; i < u.size(); ++i) tmp[i] = u[i] * e_half[i] + 0.5 * h * k2[i];
    State k3 = nonlinear(tmp, N);

    State k3h = scaled(k3, e_half);
    for (std::size_t i = 0; i < u.size(); ++i) tmp[i] = u[i] * e_full[i] + h * k3h[i];
    State k4 = nonlinear(tmp, N);

    State k1f = scaled(k1, e_full);
    State k2h = scaled(k2, e_half);
    for (std::size_t i = 0; i < u.size(); ++i)
      u[i] = u[i] * e_full[i] + (h / 6.0) * (k1f[i] + 2.0 * (k2h[i] + k3h[i]) + k4[i]);

    t = static_cast<double>(step) * h;
    if (!finite(u)) throw FlowBlowup(t, traj.snapshots.back());
    if (step % static_cast<std::uint64_t>(cfg.record_every) == 0 || step == steps) {
      traj.times.push_back(t);
      traj.snapshots.push_back(to_field(u));
    }
  }
  return traj;
}

DriftSeries energy_drift(const Trajectory& traj, const EnergySpec& spec) {
  if (traj.snapshots.size() < 3)
    throw std::invalid_argument("energy_drift needs at least 3 snapshots");
  DriftSeries out;
  out.times = traj.times;
  out.energy.reserve(traj.snapshots.size());
  for (const auto& snap : traj.snapshots)
    out.energy.push_back(energy_value(spec, project_low(snap, traj.truncation)));
  out.derivative.reserve(traj.snapshots.size() - 2);
  for (std::size_t i = 1; i + 1 < traj.snapshots.size(); ++i) {
    const double span = out.times[i + 1] - out.times[i - 1];
    out.derivative.push_back((out.energy[i + 1] - out.energy[i - 1]) / span);
  }
  for (std::size_t i = 2; i + 2 < traj.snapshots.size(); ++i) {
    const double h = out.times[i + 1] - out.times[i];
    out.derivative4.push_back((-out.energy[i + 2] + 8.0 * out.energy[i + 1] -
                               8.0 * out.energy[i - 1] + out.energy[i - 2]) /
                              (12.0 * h));
  }
  return out;
}

}  // namespace bom
