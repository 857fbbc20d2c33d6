#include "bom/energies.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bom {

namespace {

TermExpr D(int a) { return TermExpr::deriv(a); }
TermExpr H(TermExpr t) { return TermExpr::hilbert_of(std::move(t)); }
TermExpr P(std::vector<TermExpr> f) { return TermExpr::product_of(std::move(f)); }

TermExpr upow(int n) {
  std::vector<TermExpr> f(static_cast<std::size_t>(n), D(0));
  return P(std::move(f));
}

}  // namespace

EnergySpec builtin_energy(int k) {
  EnergySpec e;
  e.s = 0.5 * k;
  switch (k) {
    case 0:
      return e;
    case 1:
      e.remainder.emplace_back(1.0 / 3.0, upow(3));
      return e;
    case 2:
      e.remainder.emplace_back(3.0 / 4.0, P({D(0), D(0), H(D(1))}));
      e.remainder.emplace_back(1.0 / 8.0, upow(4));
      return e;
    case 3:
      // Signs fixed by the conservation test: with these the law is exact
      // along the flow to machine precision (the sign-flipped variant
      // drifts at first order).
      e.remainder.emplace_back(3.0 / 2.0, P({D(0), D(1), D(1)}));
      e.remainder.emplace_back(1.0 / 2.0, P({D(0), H(D(1)), H(D(1))}));
      e.remainder.emplace_back(1.0 / 3.0, P({D(0), D(0), D(0), H(D(1))}));
      e.remainder.emplace_back(1.0 / 4.0, P({D(0), D(0), H(P({D(0), D(1)}))}));
      e.remainder.emplace_back(1.0 / 20.0, upow(5));
      return e;
    case 4:
      e.remainder.emplace_back(-5.0 / 4.0, P({D(1), D(1), H(D(1))}));
      e.remainder.emplace_back(-5.0 / 2.0, P({D(0), D(2), H(D(1))}));
      e.remainder.emplace_back(25.0 / 16.0, P({D(0), D(0), D(1), D(1)}));
      e.remainder.emplace_back(5.0 / 16.0, P({D(0), D(0), H(D(1)), H(D(1))}));
      e.remainder.emplace_back(5.0 / 8.0, P({D(0), H(D(1)), H(P({D(0), D(1)}))}));
      e.remainder.emplace_back(5.0 / 32.0, P({D(0), D(0), D(0), D(0), H(D(1))}));
      e.remainder.emplace_back(5.0 / 24.0, P({D(0), D(0), D(0), H(P({D(0), D(1)}))}));
      e.remainder.emplace_back(1.0 / 48.0, upow(6));
      return e;
    default:
      throw std::invalid_argument("builtin_energy: only orders k/2 with k in 0..4 are built in");
  }
}

double remainder_value(const EnergySpec& spec, const SpectralField& u) {
  double s = 0.0;
  for (const auto& [c, term] : spec.remainder) s += c * evaluate_integral(term, u);
  return s;
}

double energy_value(const EnergySpec& spec, const SpectralField& u) {
  return sobolev_norm_sq(u, spec.s, true) + remainder_value(spec, u);
}

double harmonic_sum(int N) {
  if (N < 1) throw std::invalid_argument("harmonic_sum requires N >= 1");
  double s = 0.0;
  for (int n = 1; n <= N; ++n) s += 1.0 / n;
  return s;
}

double plateau_cutoff(double x) {
  double a = std::abs(x);
  if (a <= 1.0) return 1.0;
  if (a >= 2.0) return 0.0;
  return 2.0 - a;
}

double cutoff_value(const CutoffSpec& c, double x) {
  if (c.R <= 0.0) throw std::invalid_argument("cutoff scale R must be positive");
  return plateau_cutoff(x / c.R);
}

double cutoff_density(int k, int N, const CutoffSpec& c, const SpectralField& u) {
  if (k < 2 || k > 4)
    throw std::invalid_argument("cutoff_density: k must lie in 2..4 (built-in laws only)");
  if (N < 1) throw std::invalid_argument("cutoff_density: N must be >= 1");
  SpectralField v = project_low(u, N);
  double density = 1.0;
  for (int j = 0; j + 2 <= k; ++j) {
    density *= cutoff_value(c, energy_value(builtin_energy(j), v));
    if (density == 0.0) return 0.0;
  }
  density *= cutoff_value(c, energy_value(builtin_energy(k - 1), v) - harmonic_sum(N));
  if (density == 0.0) return 0.0;
  return density * std::exp(-remainder_value(builtin_energy(k), v));
}

bool remainder_shape_ok(int k, const EnergySpec& spec) {
  const bool even = k % 2 == 0;
  const int n = even ? k / 2 : (k - 1) / 2;
  for (const auto& [c, term] : spec.remainder) {
    (void)c;
    std::vector<int> orders = term.leaf_orders();
    std::sort(orders.begin(), orders.end());
    const int j = static_cast<int>(orders.size());
    const int total = term.total_order();
    const int sup = term.sup_order();
    if (j < 3) return false;

    auto matches = [&](std::vector<int> pattern) {
      std::sort(pattern.begin(), pattern.end());
      return orders == pattern;
    };

    bool ok = false;
    if (even) {
      ok = (j == 3 && n >= 1 && matches({0, n - 1, n})) ||
           (j >= 3 && j <= 2 * n + 2 && total == 2 * n - j + 2 && sup <= n - 1);
    } else {
      ok = (j == 3 && matches({0, n, n})) ||
           (j == 3 && n >= 1 && matches({1, n - 1, n})) ||
           (j == 4 && n >= 1 && matches({0, 0, n - 1, n})) ||
           (j >= 3 && j <= 2 * n + 3 && total == 2 * n - j + 3 && sup <= n - 1);
    }
    if (!ok) return false;
  }
  return true;
}

}  // namespace bom
