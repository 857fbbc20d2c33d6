#include "bom/gstar.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "bom/series.hpp"

namespace bom {

double drift_value(const DriftSpec& d, const SpectralField& u) {
  if (d.truncation < 1) throw std::invalid_argument("drift_value: truncation must be >= 1");
  SpectralField v = project_low(u, d.truncation);
  double total = 0.0;
  for (const auto& [c, term] : d.energy.remainder)
    total += c * star_substitute(term, d.truncation, v);
  return total;
}

namespace {

TermExpr plain_product(const std::vector<int>& orders) {
  std::vector<TermExpr> factors;
  factors.reserve(orders.size());
  for (int a : orders) factors.push_back(TermExpr::deriv(a));
  return TermExpr::product_of(std::move(factors));
}

double binom(int n, int k) {
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

// Upper bound on the constrained spectator sum
//   sum over nonzero |s_i| <= N with |s_1 + ... + s_q| > threshold of
//   prod |s_i|^{-e_i},
// exact for q = 2, 3 and obtained by dyadic splitting off the
// largest-exponent index for q >= 4.
double constrained_sum(int N, int threshold, std::vector<double> exps) {
  std::sort(exps.begin(), exps.end());
  const std::size_t q = exps.size();
  if (q == 0) return 0.0;
  if (q == 1) return power_tail_sum(N, exps[0], std::min(N, threshold));
  if (q == 2) return pair_tail_sum(N, exps[0], exps[1], threshold);
  if (q == 3) return triple_tail_sum(N, exps[0], exps[1], exps[2], threshold);
  const double e_last = exps.back();
  exps.pop_back();
  double rest_all = 1.0;
  for (double e : exps) rest_all *= power_tail_sum(N, e);
  const int half = threshold / 2;
  return constrained_sum(N, half, exps) * power_tail_sum(N, e_last) +
         power_tail_sum(N, e_last, std::min(N, half)) * rest_all;
}

}  // namespace

TermFamily make_cubic_top(int m) {
  if (m < 2) throw std::invalid_argument("cubic_top family requires m >= 2");
  std::vector<int> orders{0, m, m + 1};
  return {TermFamily::Kind::cubic_top, m, orders, plain_product(orders),
          "cubic-top(m=" + std::to_string(m) + ")"};
}

TermFamily make_cubic(int a, int b, int c) {
  std::vector<int> orders{a, b, c};
  std::sort(orders.begin(), orders.end());
  if (orders[0] < 0) throw std::invalid_argument("cubic family: orders must be >= 0");
  const int total = a + b + c;
  if (total % 2 == 0)
    throw std::invalid_argument("cubic family: orders must sum to 2m+1 (odd), got an even sum");
  const int m = total / 2;
  if (m < 2) throw std::invalid_argument("cubic family requires m >= 2 (orders summing to >= 5)");
  if (orders[2] > m)
    throw std::invalid_argument("cubic family: every order must be <= m = (sum-1)/2");
  return {TermFamily::Kind::cubic, m, orders, plain_product(orders),
          "cubic(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")"};
}

TermFamily make_quartic(int a1, int a2, int a3, int a4) {
  std::vector<int> orders{a1, a2, a3, a4};
  std::sort(orders.begin(), orders.end());
  if (orders[0] < 0) throw std::invalid_argument("quartic family: orders must be >= 0");
  const int total = a1 + a2 + a3 + a4;
  if (total % 2 != 0)
    throw std::invalid_argument("quartic family: orders must sum to 2m (even), got an odd sum");
  const int m = total / 2;
  if (m < 1) throw std::invalid_argument("quartic family requires m >= 1");
  if (orders[3] > m) throw std::invalid_argument("quartic family: every order must be <= m = sum/2");
  return {TermFamily::Kind::quartic, m, orders, plain_product(orders),
          "quartic(" + std::to_string(a1) + "," + std::to_string(a2) + "," + std::to_string(a3) +
              "," + std::to_string(a4) + ")"};
}

TermFamily make_multi(TermExpr term, int m) {
  std::vector<int> orders = term.leaf_orders();
  std::sort(orders.begin(), orders.end());
  if (orders.size() < 5)
    throw std::invalid_argument("multi family: homogeneity must be >= 5");
  if (term.total_order() > 2 * m - 1)
    throw std::invalid_argument("multi family: total order must be <= 2m-1");
  if (term.sup_order() > m)
    throw std::invalid_argument("multi family: every order must be <= m");
  std::string label = "multi(" + term.to_string() + ",m=" + std::to_string(m) + ")";
  return {TermFamily::Kind::multi, m, orders, std::move(term), std::move(label)};
}

double family_majorant(const TermFamily& f, int N) {
  const int m = f.m;
  const double inf = std::numeric_limits<double>::infinity();
  double total = 0.0;
  for (std::size_t slot = 0; slot < f.orders.size(); ++slot) {
    const int alpha = f.orders[slot];
    std::vector<double> spect;
    for (std::size_t l = 0; l < f.orders.size(); ++l)
      if (l != slot) spect.push_back(static_cast<double>(m + 1 - f.orders[l]));
    const double spect_min = *std::min_element(spect.begin(), spect.end());
    for (int j = 0; j <= alpha; ++j) {
      const double p1 = m + 1 - j;
      const double p2 = m - alpha + j;
      double best = inf;
      if (std::min(p1, p2) >= 1.0) {
        // pair-constrained: free pair + all spectators but the smallest-exponent one
        double zeta = 1.0;
        bool dropped = false;
        for (double e : spect) {
          if (!dropped && e == spect_min) {
            dropped = true;
            continue;
          }
          zeta *= power_tail_sum(N, e);
        }
        best = std::min(best, pair_tail_sum(N, p1, p2) * zeta);
      }
      if (spect_min >= 1.0 && std::min(p1, p2) >= 0.0) {
        // spectator-constrained: the pair index with the smaller exponent is
        // the determined one and its weight is bounded by 1
        best = std::min(best, constrained_sum(N, N, spect) * power_tail_sum(N, std::max(p1, p2)));
      }
      // slots where neither route closes are the ones handled by the
      // cancellation identities; they carry no elementary coefficient bound
      if (best < inf) total += binom(alpha, j) * best;
    }
  }
  return total;
}

std::vector<DecayRow> pstar_decay_experiment(const TermFamily& f, const GaussianEnsemble& e,
                                             std::span<const int> N_grid, double q,
                                             std::uint64_t samples, int threads) {
  if (std::abs(e.s - (f.m + 1)) > 1e-12)
    throw std::invalid_argument("pstar_decay_experiment: ensemble regularity must equal m+1 = " +
                                std::to_string(f.m + 1));
  std::vector<DecayRow> rows;
  rows.reserve(N_grid.size());
  for (int N : N_grid) {
    if (N < 1) throw std::invalid_argument("pstar_decay_experiment: N must be >= 1");
    GaussianEnsemble eN = e;
    eN.n_max = N;
    auto statistic = [&f, N](const SpectralField& phi) {
      return star_substitute(f.term, N, project_low(phi, N));
    };
    MomentEstimate est = empirical_lq(statistic, eN, q, samples, threads);
    rows.push_back({N, est.value, est.std_error, family_majorant(f, N), est.samples});
  }
  return rows;
}

}  // namespace bom
