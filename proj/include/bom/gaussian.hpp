#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "bom/spectral.hpp"

namespace bom {

/// Per-mode variance that centers the cutoff density exactly: with it, the
/// expected homogeneous Sobolev energy of order s-1/2 of a truncated sample
/// equals the partial harmonic sum, under the 2*pi-Parseval convention.
inline constexpr double default_sigma_sq = 1.0 / (4.0 * pi);

/// The Gaussian random Fourier field with mode law phi_n / |n|^s: regularity
/// index s, mode cutoff, per-mode variance E|phi_n|^2 and base seed.  Samples
/// are drawn from a counter-based stream keyed by (seed, sample, mode), so a
/// given (seed, sample_index) yields a bitwise-identical field regardless of
/// evaluation order or thread count.
struct GaussianEnsemble {
  double s = 1.0;
  int n_max = 0;
  double sigma_sq = default_sigma_sq;
  std::uint64_t seed = 0;
};

SpectralField sample_field(const GaussianEnsemble& e, std::uint64_t sample_index);

/// One factor phi_mode (or its conjugate) of a Gaussian monomial.
struct WickFactor {
  int mode;
  bool conjugated;
};

/// Expectation of a product of the phi_n and their conjugates for a circular
/// complex Gaussian family with E|phi|^2 = sigma_sq and phi_{-n} = conj(phi_n):
/// each factor is reduced to a positive mode, factors are grouped by mode and
/// E[phi^a conj(phi)^b] = delta_{ab} a! sigma_sq^a is applied per group.
/// Products of more than 8 factors are rejected.
cplx wick_expectation(std::span<const WickFactor> factors, double sigma_sq);

/// Statistics whose truncation-cutoff L2 distances admit exact evaluation.
struct Statistic {
  enum class Kind {
    h,   // centered Sobolev energy of order s - 1/2
    p3,  // cubic integral u d^m u H(d^{m+1} u), leaf orders (0, m, m+1)
  };
  Kind kind = Kind::h;
  int m = 0;  // only used by p3
};

/// Exact L2(mu) distance between the statistic evaluated at truncations N and
/// M.  For h this is in closed form; for p3 it is a Wick-pairing enumeration
/// over the constrained index triples picked up between the two truncations.
double exact_l2_distance(const Statistic& stat, int M, int N, const GaussianEnsemble& e);

struct MomentEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
};

/// Monte Carlo mean of |statistic(sample)|^q with its CLT standard error.
MomentEstimate empirical_lq(const std::function<double(const SpectralField&)>& statistic,
                            const GaussianEnsemble& e, double q, std::uint64_t samples,
                            int threads = 0);

}  // namespace bom
