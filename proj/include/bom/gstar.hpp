#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bom/energies.hpp"
#include "bom/gaussian.hpp"
#include "bom/terms.hpp"

namespace bom {

/// The defect of a conservation law along the truncated flow.  Only the
/// remainder terms contribute: the quadratic part's formal contribution
/// vanishes because the substituted factor lives entirely above the
/// truncation range.
struct DriftSpec {
  EnergySpec energy;
  int truncation = 1;
};

/// Sum over remainder terms of coefficient * star_substitute(term, N, pi_N u).
/// Equals d/dt E(pi_N u(t)) along trajectories of the truncated flow.
double drift_value(const DriftSpec& d, const SpectralField& u);

/// Term families whose star-substituted integrals are driven to zero by the
/// truncation (tested as Monte Carlo decay trends against exact coefficient
/// majorants).
struct TermFamily {
  enum class Kind { cubic_top, cubic, quartic, multi };
  Kind kind;
  int m;                    // the sample regularity is s = m + 1
  std::vector<int> orders;  // leaf derivative orders of the tilde product
  TermExpr term;
  std::string label;
};

/// Leaf orders (0, m, m+1); requires m >= 2.
TermFamily make_cubic_top(int m);
/// Leaf orders (a, b, c) with a+b+c = 2m+1 odd and every order <= m; m >= 2.
TermFamily make_cubic(int a, int b, int c);
/// Four leaf orders summing to 2m with every order <= m; m >= 1.
TermFamily make_quartic(int a1, int a2, int a3, int a4);
/// Homogeneity >= 5, total order <= 2m-1, every order <= m.
TermFamily make_multi(TermExpr term, int m);

/// Exact coefficient-sum bound on |integral of the star-substituted family|
/// at truncation N: the Minkowski bound assembled slot by slot and Leibniz
/// term by Leibniz term from the constrained lattice sums.  Substitution
/// slots whose raw bound does not close (the ones controlled by the
/// cancellation identities instead) contribute nothing.
double family_majorant(const TermFamily& f, int N);

struct DecayRow {
  int N;
  double estimate;   // Monte Carlo mean of |integral|^q
  double std_error;  // CLT standard error of the mean
  double majorant;
  std::uint64_t samples;
};

/// Monte Carlo estimate of E |integral of p*_N(pi_N phi)|^q over the N-grid,
/// sampling phi from the ensemble (whose regularity must be m+1), together
/// with the exact majorant per N.
std::vector<DecayRow> pstar_decay_experiment(const TermFamily& f, const GaussianEnsemble& e,
                                             std::span<const int> N_grid, double q,
                                             std::uint64_t samples, int threads = 0);

}  // namespace bom
