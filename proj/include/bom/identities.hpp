#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bom/spectral.hpp"

namespace bom {

// The cubic shapes under study are H-decorations of u * d^m u * d^{m+1} u.
// A three-letter tag gives the decoration of each factor (h = Hilbert
// transform applied, u = bare).  After substituting the high-mode source
// pi_{>N}(u u_x) into the middle or top derivative factor, the signed sum of
// the two slots either collapses in closed form (masks whose mid and top
// decorations match the closed RHS) or lies in the span of an antisymmetric
// basis in which no element carries two factors of the top order m+1.

enum class PairedIdentity { uhh, huh, hhu, uuu };
enum class SlotFamily {
  uhu_mid,
  uhu_top,
  uuh_mid,
  uuh_top,
  hhh_mid,
  hhh_top,
  huu_mid,
  huu_top,
};

const char* to_string(PairedIdentity id);
const char* to_string(SlotFamily fam);
PairedIdentity paired_identity_from_string(const std::string& s);
SlotFamily slot_family_from_string(const std::string& s);

/// Relative residual |LHS - RHS| / (1 + |LHS|) of the closed-form identity:
/// LHS is the signed sum of the two substitution slots of the decorated cubic
/// integral (the sign is the one that cancels the double-top-order terms:
/// mid+top for uhh and uuu, top-mid for huh, mid-top for hhu), RHS its
/// explicit high-mode form.  Requires u supported on modes <= N with zero
/// mean (structural) and m >= 1.
double identity_residual(PairedIdentity id, const SpectralField& u, int N, int m);

/// The value of a single substitution slot's integral.
double slot_value(SlotFamily fam, const SpectralField& u, int N, int m);

/// The antisymmetric basis functionals spanning the slot integrals: for
/// j = 1..m the high-block pair (d^j u, d^{m-j+1} u) against (u, d^{m+1} u),
/// and for j = 0..m the same pair against its integration-by-parts companion
/// (d u, d^m u); 2m+1 elements, every one carrying at most a single factor
/// of order m+1.
std::vector<cplx> basis_values(const SpectralField& u, int N, int m);

struct FitResult {
  std::vector<cplx> coefficients;  // one per basis element, j = 1..m
  double residual;                 // relative least-squares residual
  double cross_delta;              // max coefficient change on a disjoint sample set
};

/// Least-squares expansion of the slot integral over the basis, evaluated on
/// `samples` seeded random fields supported on modes <= field_degree (<= N,
/// default N); a second disjoint sample set must reproduce the coefficients
/// (`cross_delta`).  Degenerate sample sets are redrawn; when every
/// functional vanishes identically the zero expansion is returned.
FitResult fit_identity(SlotFamily fam, int m, int N, int samples, std::uint64_t seed = 0,
                       int field_degree = 0);

}  // namespace bom
