// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Every tolerance is pinned here; an optional argv filter (e.g. "4") runs a
// single criterion.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "bom/energies.hpp"
#include "bom/flow.hpp"
#include "bom/gaussian.hpp"
#include "bom/gstar.hpp"
#include "bom/identities.hpp"
#include "bom/parallel.hpp"
#include "bom/rng.hpp"
#include "bom/series.hpp"
#include "bom/spectral.hpp"
#include "bom/terms.hpp"

using namespace bom;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& name, bool pass, const std::string& detail,
            double seconds) {
  std::printf("[%s] criterion %d: %s (%s) [%.1fs]\n", pass ? "PASS" : "FAIL", criterion,
              name.c_str(), detail.c_str(), seconds);
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

template <class F>
void run_criterion(int number, const std::string& name, F&& body) {
  const auto start = std::chrono::steady_clock::now();
  bool pass = false;
  std::string detail;
  try {
    pass = body(detail);
  } catch (const std::exception& ex) {
    detail = std::string("exception: ") + ex.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report(number, name, pass, detail, secs);
}

SpectralField random_field(int n_max, std::uint64_t seed, double scale = 1.0) {
  SpectralField f(n_max);
  for (int n = 1; n <= n_max; ++n) {
    const double re = 2.0 * detail::to_unit_interval(
                                detail::counter_word(seed, 3, static_cast<std::uint64_t>(n), 2)) -
                      1.0;
    const double im = 2.0 * detail::to_unit_interval(
                                detail::counter_word(seed, 3, static_cast<std::uint64_t>(n), 3)) -
                      1.0;
    f.mode(n) = scale * cplx(re, im);
  }
  return f;
}

double max_coeff_diff(const SpectralField& a, const SpectralField& b) {
  double d = 0.0;
  const int top = std::max(a.n_max(), b.n_max());
  for (int n = 1; n <= top; ++n) d = std::max(d, std::abs(a.coeff(n) - b.coeff(n)));
  return d;
}

double max_coeff_diff(const ComplexField& a, const ComplexField& b) {
  double d = 0.0;
  const int top = std::max(a.n_max(), b.n_max());
  for (int n = -top; n <= top; ++n) d = std::max(d, std::abs(a.coeff(n) - b.coeff(n)));
  return d;
}

double max_abs_coeff(const ComplexField& a) {
  double d = 0.0;
  for (int n = -a.n_max(); n <= a.n_max(); ++n) d = std::max(d, std::abs(a.coeff(n)));
  return d;
}

// ------------------------------------------------------------------------
bool criterion1(std::string& detail) {
  double worst_h = 0.0, worst_proj = 0.0, worst_fft = 0.0, worst_parseval = 0.0;
  SpectralField prev;
  for (int i = 0; i < 1000; ++i) {
    SpectralField f = random_field(48 + (i % 17), 1000 + static_cast<std::uint64_t>(i));

    worst_h = std::max(max_coeff_diff(hilbert(hilbert(f)), -1.0 * f), worst_h);

    const int N = 5 + (i % 40);
    worst_proj = std::max(max_coeff_diff(project_low(f, N) + project_high(f, N), f), worst_proj);
    worst_proj = std::max(
        max_coeff_diff(project_low(project_low(f, N), N), project_low(f, N)), worst_proj);
    worst_proj =
        std::max(max_coeff_diff(project_plus(f) + project_minus(f), f.to_complex()), worst_proj);

    const double parseval = sobolev_norm_sq(f, 0.0);
    worst_parseval =
        std::max(std::abs(integrate(multiply(f, f)) - parseval) / parseval, worst_parseval);

    if (i % 2 == 1) {
      ComplexField direct = detail::multiply_direct(prev.to_complex(), f.to_complex());
      ComplexField fast = detail::multiply_fft(prev.to_complex(), f.to_complex());
      worst_fft = std::max(max_coeff_diff(direct, fast) / max_abs_coeff(direct), worst_fft);
    }
    prev = f;
  }
  char buf[200];
  std::snprintf(buf, sizeof(buf), "H2=%.1e proj=%.1e fft=%.2e parseval=%.2e", worst_h, worst_proj,
                worst_fft, worst_parseval);
  detail = buf;
  return worst_h == 0.0 && worst_proj == 0.0 && worst_fft <= 1e-13 && worst_parseval <= 1e-12;
}

// ------------------------------------------------------------------------
bool criterion2(std::string& detail) {
  double worst = 0.0;
  for (int N : {4, 8, 16, 32}) {
    for (int i = 0; i < 25; ++i) {
      SpectralField u =
          random_field(N, 2000 + static_cast<std::uint64_t>(N * 100 + i), 0.8);
      for (int m : {1, 2, 3})
        for (PairedIdentity id : {PairedIdentity::uhh, PairedIdentity::huh, PairedIdentity::hhu,
                                  PairedIdentity::uuu})
          worst = std::max(worst, identity_residual(id, u, N, m));
    }
  }
  char buf[100];
  std::snprintf(buf, sizeof(buf), "max residual %.2e over 100 fields x 4 ids x m in 1..3", worst);
  detail = buf;
  return worst <= 1e-10;
}

// ------------------------------------------------------------------------
bool criterion3(std::string& detail) {
  double worst_res = 0.0, worst_cross = 0.0;
  for (int N : {8, 16}) {
    for (int m : {1, 2, 3}) {
      for (SlotFamily fam :
           {SlotFamily::uhu_mid, SlotFamily::uhu_top, SlotFamily::uuh_mid, SlotFamily::uuh_top,
            SlotFamily::hhh_mid, SlotFamily::hhh_top, SlotFamily::huu_mid, SlotFamily::huu_top}) {
        FitResult fit = fit_identity(fam, m, N, 2 * m + 8, 40);
        worst_res = std::max(worst_res, fit.residual);
        worst_cross = std::max(worst_cross, fit.cross_delta);
      }
    }
  }
  char buf[120];
  std::snprintf(buf, sizeof(buf), "max span residual %.2e, max cross-sample delta %.2e", worst_res,
                worst_cross);
  detail = buf;
  return worst_res <= 1e-8 && worst_cross <= 1e-6;
}

// ------------------------------------------------------------------------
// worst defect of the drift functional against the 4th-order stencil; both
// the stencil truncation and the integrator error shrink ~16x per halving
double fd4_max_diff(const Trajectory& traj, const DriftSpec& d) {
  DriftSeries s = energy_drift(traj, d.energy);
  double worst = 0.0;
  for (std::size_t t = 2; t + 2 < traj.snapshots.size(); ++t)
    worst = std::max(worst, std::abs(drift_value(d, traj.snapshots[t]) - s.derivative4[t - 2]));
  return worst;
}

bool criterion4(std::string& detail) {
  const double dt = 5e-4;
  const double tol = std::max(1e-6, 10.0 * dt * dt);
  double worst = 0.0;
  for (int k = 1; k <= 4; ++k) {
    DriftSpec d{builtin_energy(k), 0};
    for (int N : {4, 8, 16}) {
      d.truncation = N;
      GaussianEnsemble e{0.5 * k, N, default_sigma_sq, 4000 + static_cast<std::uint64_t>(k)};
      for (int i = 0; i < 20; ++i) {
        FlowConfig cfg{N, dt, 12.0 * dt, 1};
        Trajectory traj = evolve(sample_field(e, static_cast<std::uint64_t>(i)), cfg);
        worst = std::max(worst, fd4_max_diff(traj, d));
      }
    }
  }

  // halving the step shrinks the finite-difference defect by the combined
  // fourth order of the stencil and the integrator (~16x); measured on a
  // stiff configuration where the defect sits well above the roundoff floor
  GaussianEnsemble e{2.0, 16, default_sigma_sq, 4100};
  SpectralField u0 = sample_field(e, 0);
  DriftSpec d{builtin_energy(4), 16};
  auto fd_err = [&](double step) {
    FlowConfig cfg{16, step, 0.064, 1};
    Trajectory traj = evolve(u0, cfg);
    return fd4_max_diff(traj, d);
  };
  const double e_h = fd_err(2e-3);
  const double e_h2 = fd_err(1e-3);
  const double ratio = e_h / e_h2;

  char buf[140];
  std::snprintf(buf, sizeof(buf), "max |G - FD| = %.2e (tol %.2e), halving ratio %.1f", worst, tol,
                ratio);
  detail = buf;
  return worst <= tol && ratio >= 8.0 && ratio <= 32.0;
}

// ------------------------------------------------------------------------
bool criterion5(std::string& detail) {
  // L2 and mean over t in [0,1] at the largest supported truncation
  GaussianEnsemble e{2.0, 128, default_sigma_sq, 5000};
  SpectralField u0 = sample_field(e, 0);
  FlowConfig cfg{128, 0.0, 1.0, 64};
  Trajectory traj = evolve(u0, cfg);
  double l2_drift = 0.0;
  const double l0 = sobolev_norm_sq(project_low(u0, 128), 0.0);
  for (const auto& snap : traj.snapshots)
    l2_drift = std::max(l2_drift, std::abs(sobolev_norm_sq(project_low(snap, 128), 0.0) - l0));

  // truncation-inactive data: every built-in law conserved
  SpectralField low(48);
  low.mode(1) = cplx(0.18, -0.07);
  low.mode(2) = cplx(0.05, 0.11);
  FlowConfig cfg2{48, 2e-3, 0.1, 5};
  Trajectory traj2 = evolve(low, cfg2);
  double worst_energy = 0.0;
  for (int k = 0; k <= 4; ++k) {
    EnergySpec spec = builtin_energy(k);
    const double e0 = energy_value(spec, project_low(low, 48));
    for (const auto& snap : traj2.snapshots)
      worst_energy = std::max(worst_energy,
                              std::abs(energy_value(spec, project_low(snap, 48)) - e0));
  }

  // single-mode exact solution
  SpectralField cosx(1);
  cosx.mode(1) = 0.5;
  FlowConfig cfg3{1, 1e-2, 1.0, 100};
  Trajectory traj3 = evolve(cosx, cfg3);
  double single_err = 0.0;
  for (int j = 0; j < 512; ++j) {
    const double x = two_pi * j / 512;
    single_err =
        std::max(single_err, std::abs(traj3.snapshots.back().value_at(x) - std::cos(x - 1.0)));
  }

  char buf[160];
  std::snprintf(buf, sizeof(buf), "l2 drift %.2e, inactive-energy drift %.2e, single-mode %.2e",
                l2_drift, worst_energy, single_err);
  detail = buf;
  return l2_drift <= 1e-9 && worst_energy <= 1e-6 && single_err <= 1e-12;
}

// ------------------------------------------------------------------------
bool criterion6(std::string& detail) {
  // exhaustive orthogonality over zero-sum triples with entries in [-6,6]
  std::vector<std::array<int, 3>> triples;
  for (int i = -6; i <= 6; ++i)
    for (int j = -6; j <= 6; ++j) {
      const int k = -i - j;
      if (i == 0 || j == 0 || k == 0 || std::abs(k) > 6) continue;
      triples.push_back({i, j, k});
    }
  int zero_pairs = 0;
  for (const auto& a : triples)
    for (const auto& b : triples) {
      std::array<int, 3> sa = a, sb = b;
      std::sort(sa.begin(), sa.end());
      std::sort(sb.begin(), sb.end());
      if (sa == sb) continue;
      std::vector<WickFactor> f;
      for (int mode : a) f.push_back({mode, false});
      for (int mode : b) f.push_back({mode, true});
      if (wick_expectation(f, 0.25) != cplx{}) {
        detail = "nonzero expectation for distinct multisets";
        return false;
      }
      ++zero_pairs;
    }

  // Monte Carlo agreement for a correlated pair and an uncorrelated pair;
  // signed means, so the moments are accumulated directly
  GaussianEnsemble e{1.0, 6, default_sigma_sq, 6000};
  auto phi = [&](const SpectralField& u, int n) {
    return n > 0 ? u.coeff(n) * std::pow(n, e.s) : std::conj(u.coeff(-n) * std::pow(-n, e.s));
  };
  const std::uint64_t n_mc = 10000;
  auto signed_mean = [&](auto&& statistic) {
    MomentAccumulator acc = parallel_moments(
        n_mc, [&](std::uint64_t i) { return statistic(sample_field(e, i)); });
    const double n = static_cast<double>(acc.count);
    const double mean = acc.sum / n;
    const double var = std::max(0.0, (acc.sum_sq - n * mean * mean) / (n - 1.0));
    return std::pair<double, double>(mean, std::sqrt(var / n));
  };
  // matching multisets over three distinct modes: expectation sigma^6
  auto [same, same_se] = signed_mean([&](const SpectralField& u) {
    return (phi(u, 1) * phi(u, 2) * phi(u, -3) * std::conj(phi(u, 2) * phi(u, 1) * phi(u, -3)))
        .real();
  });
  const double sigma6 = std::pow(e.sigma_sq, 3);
  // distinct multisets: expectation zero
  auto [cross, cross_se] = signed_mean([&](const SpectralField& u) {
    return (phi(u, 1) * phi(u, 2) * phi(u, -3) * std::conj(phi(u, 1) * phi(u, 3) * phi(u, -4)))
        .real();
  });

  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "%d distinct-multiset pairs exactly 0; MC |d1|=%.1f se, |d2|=%.1f se", zero_pairs,
                std::abs(same - sigma6) / same_se, std::abs(cross) / cross_se);
  detail = buf;
  return zero_pairs > 5000 && std::abs(same - sigma6) <= 4.0 * same_se &&
         std::abs(cross) <= 4.0 * cross_se;
}

// ------------------------------------------------------------------------
bool criterion7(std::string& detail) {
  GaussianEnsemble e{2.0, 256, default_sigma_sq, 7000};
  Statistic h{Statistic::Kind::h, 0};
  bool h_ok = true;
  for (int N = 4; N <= 128; N *= 2) {
    double tail = 0.0;
    for (int n = N + 1; n <= 2 * N; ++n) tail += 1.0 / (static_cast<double>(n) * n);
    const double closed = std::sqrt(tail);
    const double dist = exact_l2_distance(h, N, 2 * N, e);
    if (std::abs(dist - closed) > 1e-13 || dist > 1.0 / std::sqrt(static_cast<double>(N)))
      h_ok = false;
  }

  double worst_ratio = 0.0;
  for (int m : {1, 2}) {
    GaussianEnsemble em{m + 1.0, 256, default_sigma_sq, 7001};
    Statistic p3{Statistic::Kind::p3, m};
    double lo = 1e300, hi = 0.0;
    for (int N = 4; N <= 128; N *= 2) {
      const double scaled =
          exact_l2_distance(p3, N, 2 * N, em) * std::sqrt(static_cast<double>(N));
      lo = std::min(lo, scaled);
      hi = std::max(hi, scaled);
    }
    worst_ratio = std::max(worst_ratio, hi / lo);
  }
  char buf[120];
  std::snprintf(buf, sizeof(buf), "h closed form ok=%d; sqrt(N)-scaled p3 ratio %.2f (m in 1..2)",
                h_ok, worst_ratio);
  detail = buf;
  return h_ok && worst_ratio <= 4.0;
}

// ------------------------------------------------------------------------
bool criterion8(std::string& detail) {
  // goldens against brute-force enumeration
  auto brute_pair = [](int N) {
    double s = 0.0;
    for (int n = -N; n <= N; ++n)
      for (int m = -N; m <= N; ++m) {
        if (n == 0 || m == 0 || std::abs(n + m) <= N) continue;
        s += 1.0 / (static_cast<double>(n) * n * std::abs(m));
      }
    return s;
  };
  auto brute_triple = [](int N) {
    double s = 0.0;
    for (int n = -N; n <= N; ++n)
      for (int m = -N; m <= N; ++m)
        for (int l = -N; l <= N; ++l) {
          if (n == 0 || m == 0 || l == 0 || std::abs(n + m + l) <= N) continue;
          s += 1.0 / (static_cast<double>(n) * n * m * m * std::abs(l));
        }
    return s;
  };
  bool goldens = std::abs(high_pair_sum(1) - 2.0) < 1e-15;
  for (int N : {1, 2, 4, 8}) {
    goldens = goldens && std::abs(high_pair_sum(N) - brute_pair(N)) < 1e-13;
    goldens = goldens && std::abs(high_triple_sum(N) - brute_triple(N)) < 1e-12;
  }

  double lo_p = 1e300, hi_p = 0.0, lo_t = 1e300, hi_t = 0.0;
  for (int N = 16; N <= 256; N *= 2) {
    const double np = high_pair_sum(N) * N / std::log(N);
    const double nt = high_triple_sum(N) * N / std::log(N);
    lo_p = std::min(lo_p, np), hi_p = std::max(hi_p, np);
    lo_t = std::min(lo_t, nt), hi_t = std::max(hi_t, nt);
  }
  char buf[140];
  std::snprintf(buf, sizeof(buf), "goldens=%d, normalized ratios pair %.2f triple %.2f", goldens,
                hi_p / lo_p, hi_t / lo_t);
  detail = buf;
  return goldens && hi_p / lo_p <= 4.0 && hi_t / lo_t <= 4.0;
}

// ------------------------------------------------------------------------
bool criterion9(std::string& detail) {
  const std::vector<int> grid{8, 16, 32, 64};
  const std::uint64_t samples = 2000;
  bool ok = true;
  std::string parts;
  for (const TermFamily& fam :
       {make_cubic_top(2), make_cubic(1, 2, 2), make_cubic(1, 3, 3), make_quartic(0, 0, 2, 2)}) {
    GaussianEnsemble e{static_cast<double>(fam.m + 1), 0, default_sigma_sq, 9000};
    auto rows = pstar_decay_experiment(fam, e, grid, 2.0, samples);
    const auto& first = rows.front();
    const auto& last = rows.back();
    const bool decayed =
        last.estimate < first.estimate - 2.0 * (first.std_error + last.std_error);
    // the log^2(N)/N envelope holds with the constant of the first grid
    // point, and the bound itself keeps falling
    bool majorant_ok = last.majorant <= first.majorant / 2.0;
    double prev_norm = 1e300;
    for (const auto& r : rows) {
      const double norm = r.majorant * r.N / std::pow(std::log(r.N), 2);
      if (norm > prev_norm * 1.05) majorant_ok = false;
      prev_norm = norm;
    }
    ok = ok && decayed && majorant_ok;
    parts += fam.label + (decayed && majorant_ok ? " ok " : " FAIL ");
  }
  detail = parts;
  return ok;
}

// ------------------------------------------------------------------------
bool criterion10(std::string& detail) {
  const std::vector<int> grid{8, 16, 32, 64};
  bool ok = true;
  std::string parts;
  for (int k = 2; k <= 4; ++k) {
    // the cutoff scale is tightened with k so that the density stays within
    // a few units on its support and the q = 2 moments certify within a
    // feasible sample budget; the support stays well away from empty
    const double R = k == 2 ? 2.0 : (k == 3 ? 1.5 : 1.25);
    const CutoffSpec cut{R};
    const std::uint64_t samples = k == 2 ? 8000 : 16000;
    std::map<int, std::vector<double>> diffs;
    std::map<int, double> p99;
    std::map<int, double> support;
    for (int N : grid) {
      GaussianEnsemble e{0.5 * k, 2 * N, default_sigma_sq, 10000 + static_cast<std::uint64_t>(k)};
      std::vector<double> d(samples), habs(samples), on(samples);
      parallel_map(samples, [&](std::uint64_t i) {
        SpectralField u = sample_field(e, i);
        const double fN = cutoff_density(k, N, cut, u);
        const double f2N = cutoff_density(k, 2 * N, cut, u);
        d[static_cast<std::size_t>(i)] = std::abs(fN - f2N);
        habs[static_cast<std::size_t>(i)] =
            std::abs(sobolev_norm_sq(project_low(u, N), 0.5 * (k - 1), true) - harmonic_sum(N));
        on[static_cast<std::size_t>(i)] = fN > 0.0 ? 1.0 : 0.0;
        return 0.0;
      });
      diffs[N] = std::move(d);
      std::vector<double> hs;
      for (std::uint64_t i = 0; i < samples; ++i)
        if (on[static_cast<std::size_t>(i)] > 0.0) hs.push_back(habs[static_cast<std::size_t>(i)]);
      support[N] = static_cast<double>(hs.size()) / static_cast<double>(samples);
      std::sort(hs.begin(), hs.end());
      p99[N] = hs.empty() ? 0.0 : hs[static_cast<std::size_t>(0.99 * (hs.size() - 1))];
    }

    for (double q : {1.0, 2.0}) {
      // the grid shares its samples, so each adjacent decrease is tested on
      // the paired per-sample differences
      bool monotone = true;
      for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        const auto& a = diffs[grid[i]];
        const auto& b = diffs[grid[i + 1]];
        double sum = 0.0, sum_sq = 0.0;
        for (std::uint64_t s = 0; s < samples; ++s) {
          const double d = std::pow(a[static_cast<std::size_t>(s)], q) -
                           std::pow(b[static_cast<std::size_t>(s)], q);
          sum += d;
          sum_sq += d * d;
        }
        const double n = static_cast<double>(samples);
        const double mean = sum / n;
        const double var = std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0));
        if (!(mean > 2.0 * std::sqrt(var / n))) monotone = false;
      }
      ok = ok && monotone;
      char buf[80];
      std::snprintf(buf, sizeof(buf), "k=%d q=%.0f %s ", k, q, monotone ? "dec" : "FLAT");
      parts += buf;
    }

    double p99_lo = 1e300, p99_hi = 0.0, support_lo = 1.0;
    for (int N : grid) {
      p99_lo = std::min(p99_lo, p99[N]);
      p99_hi = std::max(p99_hi, p99[N]);
      support_lo = std::min(support_lo, support[N]);
    }
    const bool h_ok = support_lo > 0.1 && p99_hi / std::max(p99_lo, 1e-300) <= 2.0;
    ok = ok && h_ok;
    char buf[90];
    std::snprintf(buf, sizeof(buf), "k=%d support>=%.2f p99 ratio %.2f%s; ", k, support_lo,
                  p99_hi / std::max(p99_lo, 1e-300), h_ok ? "" : " FAIL");
    parts += buf;
  }
  detail = parts;
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> pick;
  for (int i = 1; i < argc; ++i) pick.push_back(std::atoi(argv[i]));
  auto wanted = [&](int n) { return pick.empty() || std::count(pick.begin(), pick.end(), n) > 0; };

  if (wanted(1)) run_criterion(1, "operator algebra", criterion1);
  if (wanted(2)) run_criterion(2, "explicit cancellation identities", criterion2);
  if (wanted(3)) run_criterion(3, "coefficient-family span fits", criterion3);
  if (wanted(4)) run_criterion(4, "drift functional vs finite differences", criterion4);
  if (wanted(5)) run_criterion(5, "truncated-flow invariants", criterion5);
  if (wanted(6)) run_criterion(6, "Wick orthogonality oracle", criterion6);
  if (wanted(7)) run_criterion(7, "truncation-distance rates", criterion7);
  if (wanted(8)) run_criterion(8, "lattice-sum asymptotics", criterion8);
  if (wanted(9)) run_criterion(9, "star-substitution decay", criterion9);
  if (wanted(10)) run_criterion(10, "density Cauchy trend", criterion10);

  if (g_failures == 0) {
    std::printf("all criteria passed\n");
    return 0;
  }
  std::printf("%d criterion(s) failed\n", g_failures);
  return 1;
}
