#pragma once

#include <complex>
#include <vector>

namespace bom {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846264338327950288;
inline constexpr double two_pi = 2.0 * pi;

/// A complex trigonometric polynomial on the 2*pi circle, storing every
/// Fourier coefficient for modes -n_max..n_max (mode 0 included).  This is
/// the general value type: outputs of the +/- frequency projectors and
/// intermediate products live here.
class ComplexField {
 public:
  ComplexField() : n_max_(0), c_(1) {}
  explicit ComplexField(int n_max) : n_max_(n_max), c_(2 * static_cast<std::size_t>(n_max) + 1) {}

  int n_max() const { return n_max_; }

  /// Coefficient of mode n; zero outside the stored range.
  cplx coeff(int n) const {
    if (n < -n_max_ || n > n_max_) return {};
    return c_[static_cast<std::size_t>(n + n_max_)];
  }
  cplx& at(int n) { return c_[static_cast<std::size_t>(n + n_max_)]; }

  ComplexField& operator+=(const ComplexField& o);
  ComplexField& operator-=(const ComplexField& o);
  ComplexField& operator*=(cplx z);

  friend ComplexField operator+(ComplexField a, const ComplexField& b) { return a += b; }
  friend ComplexField operator-(ComplexField a, const ComplexField& b) { return a -= b; }
  friend ComplexField operator*(cplx z, ComplexField a) { return a *= z; }

 private:
  int n_max_;
  std::vector<cplx> c_;
};

/// A real mean-zero trigonometric polynomial: only the coefficients of the
/// positive modes 1..n_max are stored, the negative ones being their
/// conjugates.  Hermitian symmetry and the absence of mode 0 are therefore
/// structural.  n_max is the size of the stored (possibly zero) coefficient
/// block; products report the sum of the factor degrees.
class SpectralField {
 public:
  SpectralField() = default;
  explicit SpectralField(int n_max) : c_(static_cast<std::size_t>(n_max)) {}
  static SpectralField from_modes(std::vector<cplx> positive_modes) {
    SpectralField f;
    f.c_ = std::move(positive_modes);
    return f;
  }

  int n_max() const { return static_cast<int>(c_.size()); }

  /// Coefficient of any mode: conjugate reflection for n < 0, zero for n = 0
  /// and beyond the stored range.
  cplx coeff(int n) const {
    if (n == 0) return {};
    int a = n < 0 ? -n : n;
    if (a > n_max()) return {};
    cplx c = c_[static_cast<std::size_t>(a - 1)];
    return n > 0 ? c : std::conj(c);
  }
  /// Mutable access to a stored positive mode, 1 <= n <= n_max.
  cplx& mode(int n) { return c_[static_cast<std::size_t>(n - 1)]; }

  const std::vector<cplx>& modes() const { return c_; }

  ComplexField to_complex() const;

  /// Pointwise value u(x); real by construction.
  double value_at(double x) const;

  SpectralField& operator+=(const SpectralField& o);
  SpectralField& operator-=(const SpectralField& o);
  SpectralField& operator*=(double a);
  friend SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
  friend SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
  friend SpectralField operator*(double z, SpectralField a) { return a *= z; }

 private:
  std::vector<cplx> c_;
};

/// Product of two real fields: the oscillating part plus the scalar mean,
/// which a mean-zero SpectralField cannot carry.
struct Product {
  double mean = 0.0;
  SpectralField field;
};

// Fourier multipliers.  All compositions are exact: no grid round-trip is
// ever involved.
SpectralField hilbert(const SpectralField& f);                  // c_n -> -i sign(n) c_n
SpectralField derivative(const SpectralField& f, int order);    // c_n -> (i n)^order c_n
SpectralField project_low(const SpectralField& f, int N);       // keep |n| <= N
SpectralField project_high(const SpectralField& f, int N);      // keep |n| >  N
ComplexField project_plus(const SpectralField& f);              // keep n > 0
ComplexField project_minus(const SpectralField& f);             // keep n < 0

ComplexField hilbert(const ComplexField& f);
ComplexField derivative(const ComplexField& f, int order);
ComplexField project_low(const ComplexField& f, int N);
ComplexField project_high(const ComplexField& f, int N);
ComplexField project_plus(const ComplexField& f);
ComplexField project_minus(const ComplexField& f);

/// Exact coefficient convolution.  Large products go through a zero-padded
/// FFT whose grid is the smallest power of two >= 2*(sum of degrees)+2, so
/// the result is alias-free and agrees with the direct path to roundoff.
ComplexField multiply(const ComplexField& a, const ComplexField& b);
Product multiply(const SpectralField& a, const SpectralField& b);

namespace detail {
// Both convolution paths, independently callable (the dispatching multiply
// picks between them on size).
ComplexField multiply_direct(const ComplexField& a, const ComplexField& b);
ComplexField multiply_fft(const ComplexField& a, const ComplexField& b);
}  // namespace detail

/// Integral over the period: 2*pi times the mode-0 coefficient.
double integrate(const SpectralField&);  // identically zero
double integrate(const Product& p);
cplx integrate(const ComplexField& f);

/// Integral of a pointwise product without forming it: 2*pi sum a_n b_{-n}.
cplx integral_of_product(const ComplexField& a, const ComplexField& b);

/// 2*pi-Parseval Sobolev norm squared, so that sobolev_norm_sq(f, 0) equals
/// the integral of f^2.  Homogeneous multiplier |n|^{2s}, otherwise (1+n^2)^s.
double sobolev_norm_sq(const SpectralField& f, double s, bool homogeneous = true);

/// L^p norm of (1 - d^2/dx^2)^{s/2} f via grid quadrature with at least 8x
/// oversampling.
double lp_norm(const SpectralField& f, double s, double p);

/// Pointwise values on a uniform grid of the given size (power of two).
std::vector<cplx> synthesize(const ComplexField& f, int grid_points);

}  // namespace bom
