#include "bom/identities.hpp"

#include <cmath>
#include <stdexcept>

#include "bom/gaussian.hpp"

namespace bom {

namespace {

struct Decoration {
  bool h0, h1, h2;  // Hilbert transform on u, d^m u, d^{m+1} u
};

Decoration decoration_of(PairedIdentity id) {
  switch (id) {
    case PairedIdentity::uhh: return {false, true, true};
    case PairedIdentity::huh: return {true, false, true};
    case PairedIdentity::hhu: return {true, true, false};
    case PairedIdentity::uuu: return {false, false, false};
  }
  throw std::logic_error("bad identity");
}

struct SlotSpec {
  Decoration dec;
  bool top;  // substitute at the d^{m+1} factor instead of the d^m one
};

SlotSpec slot_spec(SlotFamily fam) {
  switch (fam) {
    case SlotFamily::uhu_mid: return {{false, true, false}, false};
    case SlotFamily::uhu_top: return {{false, true, false}, true};
    case SlotFamily::uuh_mid: return {{false, false, true}, false};
    case SlotFamily::uuh_top: return {{false, false, true}, true};
    case SlotFamily::hhh_mid: return {{true, true, true}, false};
    case SlotFamily::hhh_top: return {{true, true, true}, true};
    case SlotFamily::huu_mid: return {{true, false, false}, false};
    case SlotFamily::huu_top: return {{true, false, false}, true};
  }
  throw std::logic_error("bad family");
}

ComplexField maybe_h(const ComplexField& f, bool apply) { return apply ? hilbert(f) : f; }

void require_supported(const SpectralField& u, int N, int m) {
  if (m < 1) throw std::invalid_argument("identities: m must be >= 1");
  if (N < 1) throw std::invalid_argument("identities: N must be >= 1");
  for (int n = N + 1; n <= u.n_max(); ++n)
    if (u.coeff(n) != cplx{})
      throw std::invalid_argument("identities: field has nonzero modes above N");
}

// One substitution slot of the decorated cubic integral, with the high-mode
// source w = pi_{>N}(u u_x) in place of u at that factor.
double slot_integral(const Decoration& d, bool top, const ComplexField& u, const ComplexField& w,
                     int m) {
  const ComplexField f0 = maybe_h(u, d.h0);
  const ComplexField f1 = maybe_h(derivative(top ? u : w, m), d.h1);
  const ComplexField f2 = maybe_h(derivative(top ? w : u, m + 1), d.h2);
  return integral_of_product(multiply(f0, f1), f2).real();
}

// Shared explicit right-hand side of the paired identities:
//   -int d^m(pi_{>N}(u+ u+_x)) pi_{>N}(u-_x d^m u-)
//   -int d^m(pi_{>N}(u- u-_x)) pi_{>N}(u+_x d^m u+)
double paired_rhs(const ComplexField& u, int N, int m) {
  const ComplexField up = project_plus(u);
  const ComplexField um = project_minus(u);
  const ComplexField pp = derivative(project_high(multiply(up, derivative(up, 1)), N), m);
  const ComplexField pm = derivative(project_high(multiply(um, derivative(um, 1)), N), m);
  const ComplexField qm = project_high(multiply(derivative(um, 1), derivative(um, m)), N);
  const ComplexField qp = project_high(multiply(derivative(up, 1), derivative(up, m)), N);
  return -(integral_of_product(pp, qm) + integral_of_product(pm, qp)).real();
}

}  // namespace

const char* to_string(PairedIdentity id) {
  switch (id) {
    case PairedIdentity::uhh: return "uhh";
    case PairedIdentity::huh: return "huh";
    case PairedIdentity::hhu: return "hhu";
    case PairedIdentity::uuu: return "uuu";
  }
  return "?";
}

const char* to_string(SlotFamily fam) {
  switch (fam) {
    case SlotFamily::uhu_mid: return "uhu-mid";
    case SlotFamily::uhu_top: return "uhu-top";
    case SlotFamily::uuh_mid: return "uuh-mid";
    case SlotFamily::uuh_top: return "uuh-top";
    case SlotFamily::hhh_mid: return "hhh-mid";
    case SlotFamily::hhh_top: return "hhh-top";
    case SlotFamily::huu_mid: return "huu-mid";
    case SlotFamily::huu_top: return "huu-top";
  }
  return "?";
}

PairedIdentity paired_identity_from_string(const std::string& s) {
  if (s == "uhh") return PairedIdentity::uhh;
  if (s == "huh") return PairedIdentity::huh;
  if (s == "hhu") return PairedIdentity::hhu;
  if (s == "uuu") return PairedIdentity::uuu;
  throw std::invalid_argument("unknown paired identity '" + s + "'");
}

SlotFamily slot_family_from_string(const std::string& s) {
  for (SlotFamily f :
       {SlotFamily::uhu_mid, SlotFamily::uhu_top, SlotFamily::uuh_mid, SlotFamily::uuh_top,
        SlotFamily::hhh_mid, SlotFamily::hhh_top, SlotFamily::huu_mid, SlotFamily::huu_top})
    if (s == to_string(f)) return f;
  throw std::invalid_argument("unknown slot family '" + s + "'");
}

double identity_residual(PairedIdentity id, const SpectralField& u, int N, int m) {
  require_supported(u, N, m);
  const ComplexField uc = u.to_complex();
  const ComplexField w = project_high(multiply(uc, derivative(uc, 1)), N);
  const Decoration d = decoration_of(id);
  // the slot signs that cancel the double-top-order terms
  double mid_sign = 1.0, top_sign = 1.0;
  if (id == PairedIdentity::huh) mid_sign = -1.0;
  if (id == PairedIdentity::hhu) top_sign = -1.0;
  const double lhs = mid_sign * slot_integral(d, false, uc, w, m) +
                     top_sign * slot_integral(d, true, uc, w, m);
  const double rhs = paired_rhs(uc, N, m);
  return std::abs(lhs - rhs) / (1.0 + std::abs(lhs));
}

double slot_value(SlotFamily fam, const SpectralField& u, int N, int m) {
  require_supported(u, N, m);
  const ComplexField uc = u.to_complex();
  const ComplexField w = project_high(multiply(uc, derivative(uc, 1)), N);
  const SlotSpec spec = slot_spec(fam);
  return slot_integral(spec.dec, spec.top, uc, w, m);
}

std::vector<cplx> basis_values(const SpectralField& u, int N, int m) {
  require_supported(u, N, m);
  const ComplexField uc = u.to_complex();
  const ComplexField up = project_plus(uc);
  const ComplexField um = project_minus(uc);
  const ComplexField top_p = project_high(multiply(up, derivative(up, m + 1)), N);
  const ComplexField top_m = project_high(multiply(um, derivative(um, m + 1)), N);
  const ComplexField ibp_p = project_high(multiply(derivative(up, 1), derivative(up, m)), N);
  const ComplexField ibp_m = project_high(multiply(derivative(um, 1), derivative(um, m)), N);
  std::vector<cplx> out;
  out.reserve(static_cast<std::size_t>(2 * m + 1));
  for (int j = 1; j <= m; ++j) {
    const ComplexField bp = project_high(multiply(derivative(up, j), derivative(up, m - j + 1)), N);
    const ComplexField bm = project_high(multiply(derivative(um, j), derivative(um, m - j + 1)), N);
    out.push_back(integral_of_product(bp, top_m) - integral_of_product(bm, top_p));
  }
  for (int j = 0; j <= m; ++j) {
    const ComplexField bp = project_high(multiply(derivative(up, j), derivative(up, m - j + 1)), N);
    const ComplexField bm = project_high(multiply(derivative(um, j), derivative(um, m - j + 1)), N);
    out.push_back(integral_of_product(bp, ibp_m) - integral_of_product(bm, ibp_p));
  }
  return out;
}

namespace {

// Eigendecomposition of a small Hermitian matrix by the cyclic Jacobi
// method; used for the minimal-norm least-squares solve (the basis is
// mirror-redundant by construction, so the Gram is rank-deficient).
void jacobi_hermitian(std::vector<std::vector<cplx>> A, std::vector<double>& eig,
                      std::vector<std::vector<cplx>>& vec) {
  const std::size_t n = A.size();
  vec.assign(n, std::vector<cplx>(n, cplx{}));
  for (std::size_t i = 0; i < n; ++i) vec[i][i] = 1.0;
  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(A[p][q]);
    if (off < 1e-30 * (n ? std::norm(A[0][0]) + 1e-300 : 1.0) || off == 0.0) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = A[p][q];
        if (std::abs(apq) == 0.0) continue;
        // unitary 2x2 rotation diag( e^{-i phi/...}) reducing |A_pq| to zero
        const double app = A[p][p].real(), aqq = A[q][q].real();
        const double phase = std::arg(apq);
        const double mod = std::abs(apq);
        const double theta = 0.5 * std::atan2(2.0 * mod, app - aqq);
        const double c = std::cos(theta);
        const cplx s = std::polar(std::sin(theta), phase);
        for (std::size_t k = 0; k < n; ++k) {
          const cplx akp = A[k][p], akq = A[k][q];
          A[k][p] = c * akp + std::conj(s) * akq;
          A[k][q] = -s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cplx apk = A[p][k], aqk = A[q][k];
          A[p][k] = c * apk + s * aqk;
          A[q][k] = -std::conj(s) * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cplx vkp = vec[k][p], vkq = vec[k][q];
          vec[k][p] = c * vkp + std::conj(s) * vkq;
          vec[k][q] = -s * vkp + c * vkq;
        }
      }
    }
  }
  eig.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) eig[i] = A[i][i].real();
}

// Minimal-norm solution of min |B a - y| via the pseudoinverse of the Gram.
std::vector<cplx> solve_min_norm(const std::vector<std::vector<cplx>>& G,
                                 const std::vector<cplx>& rhs) {
  std::vector<double> eig;
  std::vector<std::vector<cplx>> vec;
  jacobi_hermitian(G, eig, vec);
  double emax = 0.0;
  for (double e : eig) emax = std::max(emax, std::abs(e));
  const std::size_t n = rhs.size();
  std::vector<cplx> out(n, cplx{});
  for (std::size_t k = 0; k < n; ++k) {
    if (eig[k] <= 1e-12 * emax) continue;
    cplx proj{};
    for (std::size_t i = 0; i < n; ++i) proj += std::conj(vec[i][k]) * rhs[i];
    proj /= eig[k];
    for (std::size_t i = 0; i < n; ++i) out[i] += proj * vec[i][k];
  }
  return out;
}

struct SampledFit {
  std::vector<cplx> coeffs;
  double residual;
  bool degenerate;
};

SampledFit fit_on_samples(SlotFamily fam, int m, int N, int samples, std::uint64_t seed,
                          std::uint64_t first_index, int field_degree) {
  // mildly decaying spectrum keeps the normal equations well conditioned
  GaussianEnsemble gen{0.5, field_degree, 1.0, seed};
  const std::size_t dim = static_cast<std::size_t>(2 * m + 1);
  std::vector<std::vector<cplx>> B(static_cast<std::size_t>(samples));
  std::vector<double> y(static_cast<std::size_t>(samples));
  double basis_scale = 0.0, y_max = 0.0, y_scale = 0.0;
  for (int i = 0; i < samples; ++i) {
    SpectralField u = sample_field(gen, first_index + static_cast<std::uint64_t>(i));
    B[static_cast<std::size_t>(i)] = basis_values(u, N, m);
    y[static_cast<std::size_t>(i)] = slot_value(fam, u, N, m);
    for (const cplx& b : B[static_cast<std::size_t>(i)])
      basis_scale = std::max(basis_scale, std::abs(b));
    y_max = std::max(y_max, std::abs(y[static_cast<std::size_t>(i)]));
    y_scale += y[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(i)];
  }
  y_scale = std::sqrt(y_scale);

  // the slot values sit at the roundoff floor of the functionals (possibly
  // exactly zero): the zero expansion is exact
  if (y_max <= 1e-10 * basis_scale || (basis_scale == 0.0 && y_max == 0.0))
    return {std::vector<cplx>(dim, cplx{}), 0.0, false};
  if (basis_scale == 0.0) return {{}, 0.0, true};  // nonzero target, empty span

  std::vector<std::vector<cplx>> G(dim, std::vector<cplx>(dim, cplx{}));
  std::vector<cplx> rhs(dim, cplx{});
  for (int i = 0; i < samples; ++i) {
    const auto& row = B[static_cast<std::size_t>(i)];
    for (std::size_t a = 0; a < dim; ++a) {
      for (std::size_t b = 0; b < dim; ++b) G[a][b] += std::conj(row[a]) * row[b];
      rhs[a] += std::conj(row[a]) * y[static_cast<std::size_t>(i)];
    }
  }
  std::vector<cplx> coeffs = solve_min_norm(G, rhs);

  double err = 0.0;
  for (int i = 0; i < samples; ++i) {
    cplx pred{};
    for (std::size_t a = 0; a < dim; ++a)
      pred += coeffs[a] * B[static_cast<std::size_t>(i)][a];
    err += std::norm(pred - y[static_cast<std::size_t>(i)]);
  }
  const double residual = std::sqrt(err) / (y_scale + 1e-300);
  return {std::move(coeffs), residual, false};
}

}  // namespace

FitResult fit_identity(SlotFamily fam, int m, int N, int samples, std::uint64_t seed,
                       int field_degree) {
  if (m < 1) throw std::invalid_argument("fit_identity: m must be >= 1");
  if (samples < m + 2) throw std::invalid_argument("fit_identity: need at least m + 2 samples");
  if (field_degree <= 0) field_degree = N;
  if (field_degree > N)
    throw std::invalid_argument("fit_identity: field_degree must not exceed the truncation");
  for (int attempt = 0; attempt < 8; ++attempt) {
    const std::uint64_t salt = seed + 0x517cc1b727220a95ull * static_cast<std::uint64_t>(attempt);
    SampledFit first = fit_on_samples(fam, m, N, samples, salt, 0, field_degree);
    SampledFit second = fit_on_samples(fam, m, N, samples, salt,
                                       static_cast<std::uint64_t>(samples), field_degree);
    if (first.degenerate || second.degenerate) continue;  // resample
    FitResult out;
    out.coefficients = first.coeffs;
    out.residual = std::max(first.residual, second.residual);
    double delta = 0.0;
    for (std::size_t a = 0; a < first.coeffs.size(); ++a)
      delta = std::max(delta, std::abs(first.coeffs[a] - second.coeffs[a]));
    out.cross_delta = delta;
    return out;
  }
  throw std::runtime_error("fit_identity: degenerate sample sets after repeated redraws");
}

}  // namespace bom
