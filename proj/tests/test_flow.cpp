#include "bom/flow.hpp"

#include <cmath>

#include "bom/gaussian.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bom;

namespace {

SpectralField cos_x() {
  SpectralField f(1);
  f.mode(1) = 0.5;
  return f;
}

double l2_sq(const SpectralField& f, int N) { return sobolev_norm_sq(project_low(f, N), 0.0); }

}  // namespace

TEST_CASE("single-mode data rides the free flow exactly") {
  FlowConfig cfg;
  cfg.truncation = 1;
  cfg.dt = 1e-2;
  cfg.t_end = 1.0;
  cfg.record_every = 100;
  Trajectory traj = evolve(cos_x(), cfg);
  const SpectralField& last = traj.snapshots.back();
  // u(t, x) = cos(x - t)
  double max_err = 0.0;
  for (int j = 0; j < 256; ++j) {
    const double x = two_pi * j / 256;
    max_err = std::max(max_err, std::abs(last.value_at(x) - std::cos(x - 1.0)));
  }
  CHECK(max_err <= 1e-12);
}

TEST_CASE("l2 and mean are conserved") {
  GaussianEnsemble e{1.5, 16, default_sigma_sq, 21};
  SpectralField u0 = sample_field(e, 3);
  FlowConfig cfg;
  cfg.truncation = 16;
  cfg.dt = 2e-3;
  cfg.t_end = 1.0;
  cfg.record_every = 50;
  Trajectory traj = evolve(u0, cfg);
  const double l0 = l2_sq(u0, 16);
  for (const auto& snap : traj.snapshots) {
    CHECK(std::abs(l2_sq(snap, 16) - l0) <= 1e-9);
    // the mean never exists in this representation; the full L2 norm is
    // conserved too because the high modes only rotate
    CHECK(std::abs(sobolev_norm_sq(snap, 0.0) - sobolev_norm_sq(u0, 0.0)) <= 1e-9);
  }
}

TEST_CASE("time reversal returns the data") {
  GaussianEnsemble e{2.0, 12, default_sigma_sq, 22};
  SpectralField u0 = sample_field(e, 1);
  FlowConfig fwd;
  fwd.truncation = 12;
  fwd.t_end = 0.5;
  fwd.record_every = 1 << 20;
  Trajectory t1 = evolve(u0, fwd);
  FlowConfig bwd = fwd;
  bwd.dt = -std::abs(t1.dt);
  Trajectory t2 = evolve(t1.snapshots.back(), bwd);
  CHECK(oracle::max_coeff_diff(t2.snapshots.back(), u0) <= 1e-8);
}

TEST_CASE("truncation-inactive short runs conserve every built-in energy") {
  // smooth low-degree data, truncation far above the populated modes
  SpectralField u0(2);
  u0.mode(1) = cplx(0.18, -0.07);
  u0.mode(2) = cplx(0.05, 0.11);
  FlowConfig cfg;
  cfg.truncation = 48;
  cfg.dt = 2e-3;
  cfg.t_end = 0.1;
  cfg.record_every = 10;
  SpectralField padded(48);
  for (int n = 1; n <= 2; ++n) padded.mode(n) = u0.coeff(n);
  Trajectory traj = evolve(padded, cfg);
  for (int k = 0; k <= 4; ++k) {
    EnergySpec spec = builtin_energy(k);
    const double e0 = energy_value(spec, project_low(padded, 48));
    for (const auto& snap : traj.snapshots)
      CHECK(std::abs(energy_value(spec, project_low(snap, 48)) - e0) <= 1e-6);
  }
}

TEST_CASE("energy drift series and finite differences") {
  GaussianEnsemble e{2.0, 8, default_sigma_sq, 23};
  SpectralField u0 = sample_field(e, 2);
  FlowConfig cfg;
  cfg.truncation = 8;
  cfg.dt = 1e-3;
  cfg.t_end = 0.02;
  cfg.record_every = 1;
  Trajectory traj = evolve(u0, cfg);

  EnergySpec e0 = builtin_energy(0);
  DriftSeries d = energy_drift(traj, e0);
  REQUIRE(d.derivative.size() + 2 == d.times.size());
  for (double dd : d.derivative) CHECK(std::abs(dd) <= 1e-9);  // L2 exactly conserved
}

TEST_CASE("step halving sharpens the solution like a fourth-order method") {
  GaussianEnsemble e{1.5, 8, default_sigma_sq, 24};
  SpectralField u0 = sample_field(e, 5);
  auto run = [&](double dt) {
    FlowConfig cfg;
    cfg.truncation = 8;
    cfg.dt = dt;
    cfg.t_end = 0.25;
    cfg.record_every = 1 << 20;
    return evolve(u0, cfg).snapshots.back();
  };
  SpectralField ref = run(1.0 / 4096.0);
  const double err_h = oracle::max_coeff_diff(run(1.0 / 128.0), ref);
  const double err_h2 = oracle::max_coeff_diff(run(1.0 / 256.0), ref);
  CHECK(err_h / err_h2 > 10.0);  // ~16 for RK4
  CHECK(err_h / err_h2 < 24.0);
}

TEST_CASE("flow configuration validation") {
  CHECK_THROWS(evolve(cos_x(), FlowConfig{0, 0.0, 1.0, 1}));
  CHECK_THROWS(evolve(cos_x(), FlowConfig{1, 0.0, -1.0, 1}));
  CHECK_THROWS(evolve(cos_x(), FlowConfig{1, 0.0, 1.0, 0}));
}
