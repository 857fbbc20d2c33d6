#pragma once

#include <utility>
#include <vector>

#include "bom/spectral.hpp"
#include "bom/terms.hpp"

namespace bom {

/// A conserved functional of the flow: the homogeneous Sobolev energy of
/// quadratic order s plus a coefficient-weighted list of higher-homogeneity
/// remainder integrals.
struct EnergySpec {
  double s = 0.0;
  std::vector<std::pair<double, TermExpr>> remainder;
};

/// The explicitly known laws of half-integer order k/2 for k = 0..4.
/// Anything beyond has unspecified coefficients and must be supplied as data.
EnergySpec builtin_energy(int k);

double remainder_value(const EnergySpec& spec, const SpectralField& u);
double energy_value(const EnergySpec& spec, const SpectralField& u);

/// Partial harmonic sum 1 + 1/2 + ... + 1/N, the logarithmic centering
/// constant of the cutoff density.
double harmonic_sum(int N);

/// Scaled plateau cutoff chi(x/R): chi is 1 on [-1,1], 0 outside (-2,2),
/// linear in between.  Continuous, compactly supported, exactly evaluable.
struct CutoffSpec {
  double R = 1.0;
};
double plateau_cutoff(double x);
double cutoff_value(const CutoffSpec& c, double x);

/// Renormalized density of the weighted measure at truncation N:
///   prod_{j=0}^{k-2} chi_R(E_{j/2}(pi_N u))
///   * chi_R(E_{(k-1)/2}(pi_N u) - harmonic_sum(N))
///   * exp(-R_{k/2}(pi_N u)).
/// Requires 2 <= k <= 4 so that all the laws involved are built in.
double cutoff_density(int k, int N, const CutoffSpec& c, const SpectralField& u);

/// True when every remainder term of the law of order k/2 matches one of the
/// admissible leaf-order patterns for that order (used to sanity-check the
/// built-in transcriptions and user-supplied spec files).
bool remainder_shape_ok(int k, const EnergySpec& spec);

}  // namespace bom
