// bom: spectral and Monte Carlo experiments for the periodic Benjamin-Ono
// equation.  Subcommands run deterministically from (flags, seed) and write
// CSV/JSON artifacts whose content is reproducible byte for byte apart from
// one timestamp comment line.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bom/energies.hpp"
#include "bom/flow.hpp"
#include "bom/gaussian.hpp"
#include "bom/gstar.hpp"
#include "bom/identities.hpp"
#include "bom/io.hpp"
#include "bom/parallel.hpp"
#include "bom/series.hpp"
#include "bom/spectral.hpp"
#include "bom/terms.hpp"

namespace {

using namespace bom;

constexpr int kExitUsage = 2;    // unknown flags / malformed command line
constexpr int kExitDomain = 3;   // parameter outside its valid range
constexpr int kExitIo = 4;       // unreadable input or unwritable output

std::uint64_t default_seed() {
  if (const char* env = std::getenv("BOM_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("BOM_SEED must be an unsigned integer");
    }
  }
  return 0;
}

SpectralField resolve_field(const std::string& spec) {
  if (spec == "cos1") {
    SpectralField f(1);
    f.mode(1) = 0.5;
    return f;
  }
  return load_field(spec);
}

std::string fmt(double v) { return format_double(v); }

// --config file.json supplies defaults for long flags not given on the
// command line: the file's entries are expanded to "--key value" arguments in
// front of the real ones, and every option takes the last occurrence.
std::vector<std::string> expand_config(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string config_path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) config_path = args[i + 1];
    else if (args[i].rfind("--config=", 0) == 0) config_path = args[i].substr(9);
  }
  if (config_path.empty()) return args;
  std::ifstream in(config_path);
  if (!in) throw std::runtime_error("cannot open config file '" + config_path + "'");
  nlohmann::json j = nlohmann::json::parse(in);
  std::vector<std::string> expanded;
  if (!args.empty()) expanded.push_back(args[0]);  // subcommand first
  for (auto it = j.begin(); it != j.end(); ++it) {
    expanded.push_back("--" + it.key());
    if (it.value().is_string()) expanded.push_back(it.value().get<std::string>());
    else expanded.push_back(it.value().dump());
  }
  for (std::size_t i = args.empty() ? 0 : 1; i < args.size(); ++i) expanded.push_back(args[i]);
  return expanded;
}

void take_last(CLI::App* app) {
  for (CLI::Option* opt : app->get_options())
    if (opt->get_expected_min() > 0) opt->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  for (CLI::App* sub : app->get_subcommands(nullptr)) take_last(sub);
}

struct Shared {
  std::uint64_t seed = 0;
  int threads = 0;
  std::string out;
  std::string config;  // consumed by expand_config; registered so CLI11 accepts it
};

void add_shared(CLI::App* cmd, Shared& sh) {
  cmd->add_option("--seed", sh.seed, "base RNG seed (env BOM_SEED overrides the default)");
  cmd->add_option("--threads", sh.threads, "worker threads (0 = auto; results are unchanged)");
  cmd->add_option("--out", sh.out, "output file path");
  cmd->add_option("--config", sh.config, "JSON file with default flag values");
}

// ---------------------------------------------------------------- sample --
int run_sample(double s, int n_max, std::uint64_t index, const Shared& sh) {
  GaussianEnsemble e{s, n_max, default_sigma_sq, sh.seed};
  SpectralField f = sample_field(e, index);
  if (!sh.out.empty()) save_field(f, sh.out);
  std::cout << "sample s=" << fmt(s) << " n_max=" << n_max << " seed=" << sh.seed
            << " index=" << index << "\n";
  std::cout << "l2_sq=" << fmt(sobolev_norm_sq(f, 0.0)) << " h_centered="
            << fmt(sobolev_norm_sq(f, s - 0.5) - harmonic_sum(std::max(1, n_max))) << "\n";
  return 0;
}

// ---------------------------------------------------------------- energy --
int run_energy(int k, const std::string& field_spec, const std::string& spec_path,
               const std::string& dump, const Shared& sh) {
  EnergySpec spec = spec_path.empty() ? builtin_energy(k) : load_energy(spec_path);
  if (!dump.empty()) {
    std::ofstream outf(dump);
    if (!outf) throw std::runtime_error("cannot write spec file '" + dump + "'");
    outf << energy_to_json(spec);
  }
  if (!field_spec.empty()) {
    SpectralField u = resolve_field(field_spec);
    std::cout << "energy=" << fmt(energy_value(spec, u))
              << " quadratic=" << fmt(sobolev_norm_sq(u, spec.s, true))
              << " remainder=" << fmt(remainder_value(spec, u)) << "\n";
  }
  (void)sh;
  return 0;
}

// ---------------------------------------------------------------- evolve --
int run_evolve(int N, const std::string& u0_spec, double t_end, double dt, int record_every,
               const std::string& dump_fields, const Shared& sh) {
  SpectralField u0 = resolve_field(u0_spec);
  FlowConfig cfg{N, dt, t_end, record_every};
  Trajectory traj = evolve(u0, cfg);

  std::vector<std::string> lines;
  lines.push_back("time,l2_sq,mean,e0,e05,e1,e15,e2");
  std::vector<EnergySpec> specs;
  for (int k = 0; k <= 4; ++k) specs.push_back(builtin_energy(k));
  for (std::size_t i = 0; i < traj.snapshots.size(); ++i) {
    SpectralField v = project_low(traj.snapshots[i], N);
    std::string row = fmt(traj.times[i]) + "," + fmt(sobolev_norm_sq(traj.snapshots[i], 0.0)) + ",0";
    for (const auto& spec : specs) row += "," + fmt(energy_value(spec, v));
    lines.push_back(row);
  }
  if (!sh.out.empty()) write_lines(sh.out, lines, "bom evolve");
  if (!dump_fields.empty())
    for (std::size_t i = 0; i < traj.snapshots.size(); ++i)
      save_field(traj.snapshots[i], dump_fields + "_" + std::to_string(i) + ".json");

  const double drift = std::abs(sobolev_norm_sq(project_low(traj.snapshots.back(), N), 0.0) -
                                sobolev_norm_sq(project_low(u0, N), 0.0));
  std::cout << "evolve N=" << N << " t=" << fmt(t_end) << " dt=" << fmt(traj.dt)
            << " snapshots=" << traj.snapshots.size() << "\n";
  std::cout << "l2_drift=" << fmt(drift) << " mean_drift=0\n";
  if (u0_spec == "cos1" && N == 1) {
    const SpectralField& last = traj.snapshots.back();
    double max_err = 0.0;
    for (int j = 0; j < 512; ++j) {
      const double x = two_pi * j / 512;
      max_err = std::max(max_err, std::abs(last.value_at(x) - std::cos(x - t_end)));
    }
    std::cout << "single_mode_max_error=" << fmt(max_err) << "\n";
  }
  return 0;
}

// ----------------------------------------------------------- gstar-check --
int run_gstar_check(int k, int N, int n_data, double dt, double t_end, const Shared& sh) {
  GaussianEnsemble e{0.5 * k, N, default_sigma_sq, sh.seed};
  DriftSpec d{builtin_energy(k), N};
  FlowConfig cfg{N, dt, t_end, 1};
  const double tol = std::max(1e-6, 10.0 * (dt > 0 ? dt * dt : 1e-4));

  std::vector<std::string> lines;
  lines.push_back("k,N,sample,seed,dt,max_abs_diff,tolerance");
  double worst = 0.0;
  for (int i = 0; i < n_data; ++i) {
    Trajectory traj = evolve(sample_field(e, static_cast<std::uint64_t>(i)), cfg);
    DriftSeries s = energy_drift(traj, d.energy);
    double max_diff = 0.0;
    for (std::size_t t = 2; t + 2 < traj.snapshots.size(); ++t)
      max_diff = std::max(max_diff,
                          std::abs(drift_value(d, traj.snapshots[t]) - s.derivative4[t - 2]));
    worst = std::max(worst, max_diff);
    lines.push_back(std::to_string(k) + "," + std::to_string(N) + "," + std::to_string(i) + "," +
                    std::to_string(sh.seed) + "," + fmt(traj.dt) + "," + fmt(max_diff) + "," +
                    fmt(tol));
  }
  if (!sh.out.empty()) write_lines(sh.out, lines, "bom gstar-check");
  std::cout << "gstar-check k=" << k << " N=" << N << " data=" << n_data
            << " worst=" << fmt(worst) << " tolerance=" << fmt(tol)
            << (worst <= tol ? " ok" : " FAIL") << "\n";
  return worst <= tol ? 0 : 1;
}

// ----------------------------------------------------------- gstar-decay --
int run_gstar_decay(const std::string& family, int m, std::vector<int> orders,
                    const std::string& expr, const std::vector<int>& grid, double q,
                    std::uint64_t samples, const Shared& sh) {
  TermFamily fam = [&] {
    if (family == "cubic-top") return make_cubic_top(m);
    if (family == "cubic") {
      if (orders.size() != 3) throw std::invalid_argument("--orders must list 3 values for cubic");
      return make_cubic(orders[0], orders[1], orders[2]);
    }
    if (family == "quartic") {
      if (orders.size() != 4)
        throw std::invalid_argument("--orders must list 4 values for quartic");
      return make_quartic(orders[0], orders[1], orders[2], orders[3]);
    }
    if (family == "multi") {
      if (expr.empty()) throw std::invalid_argument("--expr is required for the multi family");
      return make_multi(TermExpr::parse(expr), m);
    }
    throw std::invalid_argument("--family must be cubic-top, cubic, quartic or multi");
  }();

  GaussianEnsemble e{static_cast<double>(fam.m + 1), 0, default_sigma_sq, sh.seed};
  auto rows = pstar_decay_experiment(fam, e, grid, q, samples, sh.threads);

  std::vector<std::string> lines;
  lines.push_back("family,m,N,q,seed,samples,estimate,stderr,majorant");
  for (const auto& r : rows)
    lines.push_back(fam.label + "," + std::to_string(fam.m) + "," + std::to_string(r.N) + "," +
                    fmt(q) + "," + std::to_string(sh.seed) + "," + std::to_string(r.samples) +
                    "," + fmt(r.estimate) + "," + fmt(r.std_error) + "," + fmt(r.majorant));
  if (!sh.out.empty()) write_lines(sh.out, lines, "bom gstar-decay");
  for (const auto& line : lines) std::cout << line << "\n";
  return 0;
}

// ------------------------------------------------------------ identities --
int run_identities(int m, int N, int samples, const Shared& sh) {
  nlohmann::json report = nlohmann::json::array();
  for (PairedIdentity id :
       {PairedIdentity::uhh, PairedIdentity::huh, PairedIdentity::hhu, PairedIdentity::uuu}) {
    double worst = 0.0;
    GaussianEnsemble gen{0.5, N, 1.0, sh.seed};
    for (int i = 0; i < samples; ++i)
      worst = std::max(worst,
                       identity_residual(id, sample_field(gen, static_cast<std::uint64_t>(i)), N, m));
    report.push_back({{"identity", to_string(id)}, {"m", m}, {"N", N}, {"residual", worst}});
  }
  for (SlotFamily fam :
       {SlotFamily::uhu_mid, SlotFamily::uhu_top, SlotFamily::uuh_mid, SlotFamily::uuh_top,
        SlotFamily::hhh_mid, SlotFamily::hhh_top, SlotFamily::huu_mid, SlotFamily::huu_top}) {
    FitResult fit = fit_identity(fam, m, N, samples, sh.seed);
    nlohmann::json coeffs = nlohmann::json::array();
    for (const cplx& c : fit.coefficients) coeffs.push_back({c.real(), c.imag()});
    report.push_back({{"identity", to_string(fam)},
                      {"m", m},
                      {"N", N},
                      {"residual", fit.residual},
                      {"cross_delta", fit.cross_delta},
                      {"coefficients", coeffs}});
  }
  const std::string text = report.dump(2) + "\n";
  if (!sh.out.empty()) {
    std::ofstream outf(sh.out);
    if (!outf) throw std::runtime_error("cannot write report '" + sh.out + "'");
    outf << text;
  }
  std::cout << text;
  return 0;
}

// ---------------------------------------------------------------- series --
int run_series(const std::string& which, int N, const std::vector<int>& grid, const Shared& sh) {
  auto eval = [&](int n) {
    if (which == "prod" || which == "pair") return high_pair_sum(n);
    if (which == "orthspa" || which == "triple") return high_triple_sum(n);
    throw std::invalid_argument("--sum must be prod|pair or orthspa|triple");
  };
  if (!grid.empty()) {
    std::vector<std::string> lines;
    lines.push_back("N,value,value_N_over_logN");
    for (int n : grid)
      lines.push_back(std::to_string(n) + "," + fmt(eval(n)) + "," +
                      fmt(eval(n) * n / std::log(std::max(2, n))));
    if (!sh.out.empty()) write_lines(sh.out, lines, "bom series");
    for (const auto& line : lines) std::cout << line << "\n";
    return 0;
  }
  std::cout << fmt(eval(N)) << "\n";
  return 0;
}

// --------------------------------------------------------- measure-cauchy --
int run_measure_cauchy(int k, double R, const std::vector<int>& grid,
                       const std::vector<double>& qs, std::uint64_t samples, const Shared& sh) {
  const CutoffSpec cut{R};
  std::vector<std::string> lines;
  lines.push_back(std::string(kRecordCsvHeader) + ",support_fraction,h_p99");

  for (int N : grid) {
    GaussianEnsemble e{0.5 * k, 2 * N, default_sigma_sq, sh.seed};
    // one pass per N: densities at both truncations plus the centered
    // Sobolev statistic on the support
    std::vector<double> diff(static_cast<std::size_t>(samples));
    std::vector<double> habs(static_cast<std::size_t>(samples));
    std::vector<double> on_support(static_cast<std::size_t>(samples));
    parallel_map(
        samples,
        [&](std::uint64_t i) {
          SpectralField u = sample_field(e, i);
          const double fN = cutoff_density(k, N, cut, u);
          const double f2N = cutoff_density(k, 2 * N, cut, u);
          diff[static_cast<std::size_t>(i)] = std::abs(fN - f2N);
          const double h =
              sobolev_norm_sq(project_low(u, N), 0.5 * (k - 1), true) - harmonic_sum(N);
          habs[static_cast<std::size_t>(i)] = std::abs(h);
          on_support[static_cast<std::size_t>(i)] = fN > 0.0 ? 1.0 : 0.0;
          return 0.0;
        },
        sh.threads);

    std::vector<double> h_support;
    for (std::uint64_t i = 0; i < samples; ++i)
      if (on_support[static_cast<std::size_t>(i)] > 0.0)
        h_support.push_back(habs[static_cast<std::size_t>(i)]);
    double support_fraction = static_cast<double>(h_support.size()) / static_cast<double>(samples);
    double h_p99 = 0.0;
    if (!h_support.empty()) {
      std::sort(h_support.begin(), h_support.end());
      h_p99 = h_support[static_cast<std::size_t>(0.99 * (h_support.size() - 1))];
    }

    for (double q : qs) {
      double sum = 0.0, sum_sq = 0.0;
      for (std::uint64_t i = 0; i < samples; ++i) {
        const double v = std::pow(diff[static_cast<std::size_t>(i)], q);
        sum += v;
        sum_sq += v * v;
      }
      const double n = static_cast<double>(samples);
      const double mean = sum / n;
      const double var = std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0));
      ExperimentRecord rec{"measure-cauchy",
                           "k=" + std::to_string(k) + ";q=" + fmt(q) + ";R=" + fmt(R) +
                               ";N=" + std::to_string(N),
                           sh.seed, samples, mean, std::sqrt(var / n)};
      lines.push_back(csv_row(rec) + "," + fmt(support_fraction) + "," + fmt(h_p99));
    }
  }
  if (!sh.out.empty()) write_lines(sh.out, lines, "bom measure-cauchy");
  for (const auto& line : lines) std::cout << line << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral and Monte Carlo experiments for the periodic Benjamin-Ono equation"};
  app.require_subcommand(1);

  Shared sh;
  try {
    sh.seed = default_seed();
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitDomain;
  }

  // sample
  double s_idx = 1.0;
  int n_max = 16;
  std::uint64_t index = 0;
  Shared sh_sample = sh;
  CLI::App* c_sample = app.add_subcommand("sample", "draw one Gaussian random field");
  c_sample->add_option("--s", s_idx, "regularity index s of the mode law phi_n/|n|^s");
  c_sample->add_option("--N", n_max, "mode cutoff")->check(CLI::PositiveNumber);
  c_sample->add_option("--index", index, "sample index within the stream");
  add_shared(c_sample, sh_sample);

  // energy
  int k_energy = 2;
  std::string field_spec, spec_path, dump_path;
  Shared sh_energy = sh;
  CLI::App* c_energy = app.add_subcommand("energy", "evaluate a conservation law on a field");
  c_energy->add_option("--k", k_energy, "built-in law index (order k/2)")
      ->check(CLI::Range(0, 4));
  c_energy->add_option("--field", field_spec, "field JSON file, or the name cos1");
  c_energy->add_option("--spec", spec_path, "energy spec JSON file (overrides --k)");
  c_energy->add_option("--dump", dump_path, "write the energy spec as JSON");
  add_shared(c_energy, sh_energy);

  // evolve
  int N_evolve = 1, record_every = 1;
  double t_end = 1.0, dt = 0.0;
  std::string u0_spec = "cos1", dump_fields;
  Shared sh_evolve = sh;
  CLI::App* c_evolve = app.add_subcommand("evolve", "integrate the truncated flow");
  c_evolve->add_option("--N", N_evolve, "truncation level")->check(CLI::PositiveNumber);
  c_evolve->add_option("--u0", u0_spec, "initial field JSON file, or the name cos1");
  c_evolve->add_option("--t", t_end, "final time")->check(CLI::NonNegativeNumber);
  c_evolve->add_option("--dt", dt, "time step (0 = default min(1e-2, 0.1/N))");
  c_evolve->add_option("--record-every", record_every, "snapshot stride")
      ->check(CLI::PositiveNumber);
  c_evolve->add_option("--dump-fields", dump_fields, "prefix for snapshot JSON files");
  add_shared(c_evolve, sh_evolve);

  // gstar-check
  int k_check = 2, N_check = 8, data_check = 20;
  double dt_check = 0.0, t_check = 0.01;
  Shared sh_check = sh;
  CLI::App* c_check =
      app.add_subcommand("gstar-check", "drift functional versus finite-difference oracle");
  c_check->add_option("--k", k_check, "law index (order k/2)")->check(CLI::Range(1, 4));
  c_check->add_option("--N", N_check, "truncation level")->check(CLI::PositiveNumber);
  c_check->add_option("--samples", data_check, "number of Gaussian initial data")
      ->check(CLI::PositiveNumber);
  c_check->add_option("--dt", dt_check, "time step (0 = 5e-4)");
  c_check->add_option("--t", t_check, "trajectory length")->check(CLI::PositiveNumber);
  add_shared(c_check, sh_check);

  // gstar-decay
  std::string family = "cubic-top", expr;
  int m_decay = 2;
  std::vector<int> orders, grid_decay{8, 16, 32, 64};
  double q_decay = 2.0;
  std::uint64_t samples_decay = 2000;
  Shared sh_decay = sh;
  CLI::App* c_decay =
      app.add_subcommand("gstar-decay", "Monte Carlo decay of star-substituted families");
  c_decay->add_option("--family", family, "cubic-top | cubic | quartic | multi");
  c_decay->add_option("--m", m_decay, "regularity parameter (samples use s = m+1)");
  c_decay->add_option("--orders", orders, "leaf derivative orders for cubic/quartic")
      ->delimiter(',');
  c_decay->add_option("--expr", expr, "term expression for the multi family");
  c_decay->add_option("--N-grid", grid_decay, "truncation grid")->delimiter(',');
  c_decay->add_option("--q", q_decay, "moment order")->check(CLI::PositiveNumber);
  c_decay->add_option("--samples", samples_decay, "samples per grid point")
      ->check(CLI::PositiveNumber);
  add_shared(c_decay, sh_decay);

  // identities
  int m_id = 2, N_id = 8, samples_id = 24;
  Shared sh_id = sh;
  CLI::App* c_id = app.add_subcommand("identities", "verify the cancellation identities");
  c_id->add_option("--m", m_id, "derivative order parameter")->check(CLI::PositiveNumber);
  c_id->add_option("--N", N_id, "truncation level")->check(CLI::PositiveNumber);
  c_id->add_option("--samples", samples_id, "random fields per identity")
      ->check(CLI::PositiveNumber);
  add_shared(c_id, sh_id);

  // series
  std::string which = "prod";
  int N_series = 16;
  std::vector<int> grid_series;
  Shared sh_series = sh;
  CLI::App* c_series = app.add_subcommand("series", "constrained lattice sums");
  c_series->add_option("--sum", which, "prod|pair or orthspa|triple");
  c_series->add_option("--N", N_series, "single evaluation point")->check(CLI::PositiveNumber);
  c_series->add_option("--N-grid", grid_series, "grid (writes CSV)")->delimiter(',');
  add_shared(c_series, sh_series);

  // measure-cauchy
  int k_mc = 2;
  double R_mc = 4.0;
  std::vector<int> grid_mc{8, 16, 32, 64};
  std::vector<double> q_mc{1.0, 2.0};
  std::uint64_t samples_mc = 2000;
  Shared sh_mc = sh;
  CLI::App* c_mc =
      app.add_subcommand("measure-cauchy", "density differences between truncations");
  c_mc->add_option("--k", k_mc, "measure index (Gaussian law s = k/2)")->check(CLI::Range(2, 4));
  c_mc->add_option("--R", R_mc, "cutoff scale")->check(CLI::PositiveNumber);
  c_mc->add_option("--N-grid", grid_mc, "truncation grid")->delimiter(',');
  c_mc->add_option("--q", q_mc, "moment orders")->delimiter(',');
  c_mc->add_option("--samples", samples_mc, "samples per grid point")->check(CLI::PositiveNumber);
  add_shared(c_mc, sh_mc);

  take_last(&app);

  std::vector<std::string> args;
  try {
    args = expand_config(argc, argv);
  } catch (const nlohmann::json::exception& ex) {
    std::cerr << "error: config file: " << ex.what() << "\n";
    return kExitIo;
  } catch (const std::runtime_error& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitIo;
  }

  try {
    std::vector<const char*> cargs;
    cargs.push_back(argv[0]);
    for (const auto& a : args) cargs.push_back(a.c_str());
    app.parse(static_cast<int>(cargs.size()), cargs.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ValidationError& e) {
    app.exit(e);
    return kExitDomain;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (c_sample->parsed()) return run_sample(s_idx, n_max, index, sh_sample);
    if (c_energy->parsed())
      return run_energy(k_energy, field_spec, spec_path, dump_path, sh_energy);
    if (c_evolve->parsed())
      return run_evolve(N_evolve, u0_spec, t_end, dt, record_every, dump_fields, sh_evolve);
    if (c_check->parsed())
      return run_gstar_check(k_check, N_check, data_check, dt_check <= 0 ? 5e-4 : dt_check,
                             t_check, sh_check);
    if (c_decay->parsed())
      return run_gstar_decay(family, m_decay, orders, expr, grid_decay, q_decay, samples_decay,
                             sh_decay);
    if (c_id->parsed()) return run_identities(m_id, N_id, samples_id, sh_id);
    if (c_series->parsed()) return run_series(which, N_series, grid_series, sh_series);
    if (c_mc->parsed()) return run_measure_cauchy(k_mc, R_mc, grid_mc, q_mc, samples_mc, sh_mc);
  } catch (const std::invalid_argument& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitDomain;
  } catch (const std::runtime_error& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitIo;
  }
  return 0;
}
