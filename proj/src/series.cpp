#include "bom/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace bom {

namespace {

// prefix[j] = sum_{i=1..j} i^{-e}
std::vector<double> power_prefix(int N, double e) {
  std::vector<double> w(static_cast<std::size_t>(N) + 1, 0.0);
  for (int i = 1; i <= N; ++i)
    w[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(i) - 1] + std::pow(i, -e);
  return w;
}

// sum of |l|^{-e} over integer l in [lo, hi] intersected with [-N,N]\{0},
// reading the prefix table of that exponent.
double range_weight(const std::vector<double>& w, int N, long long lo, long long hi) {
  double s = 0.0;
  long long a = std::max<long long>(lo, 1), b = std::min<long long>(hi, N);
  if (a <= b) s += w[static_cast<std::size_t>(b)] - w[static_cast<std::size_t>(a) - 1];
  a = std::max<long long>(lo, -N), b = std::min<long long>(hi, -1);
  if (a <= b) s += w[static_cast<std::size_t>(-a)] - w[static_cast<std::size_t>(-b) - 1];
  return s;
}

}  // namespace

double pair_tail_sum(int N, double a, double b, int threshold) {
  if (N < 1) throw std::invalid_argument("pair_tail_sum requires N >= 1");
  const int T = threshold <= 0 ? N : threshold;
  std::vector<double> wb = power_prefix(N, b);
  double s = 0.0;
  for (int n = -N; n <= N; ++n) {
    if (n == 0) continue;
    // m with n+m > T, plus m with n+m < -T
    const double msum = range_weight(wb, N, static_cast<long long>(T) - n + 1, N) +
                        range_weight(wb, N, -N, -static_cast<long long>(T) - n - 1);
    if (msum != 0.0) s += std::pow(std::abs(n), -a) * msum;
  }
  return s;
}

double triple_tail_sum(int N, double e1, double e2, double e3, int threshold) {
  if (N < 1) throw std::invalid_argument("triple_tail_sum requires N >= 1");
  if (N > 512) throw std::invalid_argument("triple_tail_sum: N > 512 rejected (cost guard)");
  const int T = threshold <= 0 ? N : threshold;
  std::vector<double> w3 = power_prefix(N, e3);
  double total = 0.0;
  for (int n = -N; n <= N; ++n) {
    if (n == 0) continue;
    const double wn = std::pow(std::abs(n), -e1);
    for (int m = -N; m <= N; ++m) {
      if (m == 0) continue;
      const long long s = n + m;
      // l with n+m+l > T, plus l with n+m+l < -T
      const double lsum = range_weight(w3, N, T - s + 1, N) + range_weight(w3, N, -N, -T - s - 1);
      if (lsum != 0.0) total += wn * std::pow(std::abs(m), -e2) * lsum;
    }
  }
  return total;
}

double power_tail_sum(int N, double e, int from) {
  if (N < 0) throw std::invalid_argument("power_tail_sum requires N >= 0");
  double s = 0.0;
  for (int n = std::max(1, from + 1); n <= N; ++n) s += std::pow(n, -e);
  return 2.0 * s;
}

double high_pair_sum(int N) { return pair_tail_sum(N, 2.0, 1.0); }
double high_triple_sum(int N) { return triple_tail_sum(N, 2.0, 2.0, 1.0); }

}  // namespace bom
