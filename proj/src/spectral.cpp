#include "bom/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <stdexcept>

namespace bom {

namespace {

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

// Twiddle tables cached per (size, direction); thread-local so transforms
// stay safe to run from concurrent workers without locking.
const std::vector<cplx>& twiddles(std::size_t n, bool inverse) {
  thread_local std::map<std::pair<std::size_t, bool>, std::vector<cplx>> cache;
  auto key = std::make_pair(n, inverse);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<cplx> w(n / 2);
  const double sgn = inverse ? 1.0 : -1.0;
  for (std::size_t k = 0; k < n / 2; ++k) {
    double ang = sgn * two_pi * static_cast<double>(k) / static_cast<double>(n);
    w[k] = {std::cos(ang), std::sin(ang)};
  }
  return cache.emplace(key, std::move(w)).first->second;
}

// In-place radix-2 transform, no normalization.
// inverse=false: A_j = sum_k a_k e^{-2 pi i jk/n};  inverse=true: +.
void fft_raw(std::vector<cplx>& a, bool inverse) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  const auto& w = twiddles(n, inverse);
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t stride = n / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        cplx u = a[i + k];
        cplx v = a[i + k + len / 2] * w[k * stride];
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
      }
    }
  }
}

}  // namespace

namespace detail {

ComplexField multiply_direct(const ComplexField& a, const ComplexField& b) {
  ComplexField r(a.n_max() + b.n_max());
  for (int n = -a.n_max(); n <= a.n_max(); ++n) {
    cplx an = a.coeff(n);
    if (an == cplx{}) continue;
    for (int m = -b.n_max(); m <= b.n_max(); ++m) {
      r.at(n + m) += an * b.coeff(m);
    }
  }
  return r;
}

ComplexField multiply_fft(const ComplexField& a, const ComplexField& b) {
  const int deg = a.n_max() + b.n_max();
  const std::size_t grid = next_pow2(2 * static_cast<std::size_t>(deg) + 2);
  std::vector<cplx> va(grid), vb(grid);
  for (int n = -a.n_max(); n <= a.n_max(); ++n)
    va[static_cast<std::size_t>((n + static_cast<int>(grid)) % static_cast<int>(grid))] = a.coeff(n);
  for (int n = -b.n_max(); n <= b.n_max(); ++n)
    vb[static_cast<std::size_t>((n + static_cast<int>(grid)) % static_cast<int>(grid))] = b.coeff(n);
  fft_raw(va, true);  // coefficients -> grid values
  fft_raw(vb, true);
  for (std::size_t j = 0; j < grid; ++j) va[j] *= vb[j];
  fft_raw(va, false);  // values -> scaled coefficients
  ComplexField r(deg);
  const double inv = 1.0 / static_cast<double>(grid);
  for (int n = -deg; n <= deg; ++n)
    r.at(n) = va[static_cast<std::size_t>((n + static_cast<int>(grid)) % static_cast<int>(grid))] * inv;
  return r;
}

}  // namespace detail

ComplexField& ComplexField::operator+=(const ComplexField& o) {
  if (o.n_max_ > n_max_) {
    ComplexField grown(o.n_max_);
    for (int n = -n_max_; n <= n_max_; ++n) grown.at(n) = coeff(n);
    *this = std::move(grown);
  }
  for (int n = -o.n_max_; n <= o.n_max_; ++n) at(n) += o.coeff(n);
  return *this;
}

ComplexField& ComplexField::operator-=(const ComplexField& o) {
  if (o.n_max_ > n_max_) {
    ComplexField grown(o.n_max_);
    for (int n = -n_max_; n <= n_max_; ++n) grown.at(n) = coeff(n);
    *this = std::move(grown);
  }
  for (int n = -o.n_max_; n <= o.n_max_; ++n) at(n) -= o.coeff(n);
  return *this;
}

ComplexField& ComplexField::operator*=(cplx z) {
  for (auto& c : c_) c *= z;
  return *this;
}

ComplexField SpectralField::to_complex() const {
  ComplexField g(n_max());
  for (int n = 1; n <= n_max(); ++n) {
    cplx c = c_[static_cast<std::size_t>(n - 1)];
    g.at(n) = c;
    g.at(-n) = std::conj(c);
  }
  return g;
}

double SpectralField::value_at(double x) const {
  double v = 0.0;
  for (int n = 1; n <= n_max(); ++n) {
    cplx c = c_[static_cast<std::size_t>(n - 1)];
    v += 2.0 * (c.real() * std::cos(n * x) - c.imag() * std::sin(n * x));
  }
  return v;
}

SpectralField& SpectralField::operator+=(const SpectralField& o) {
  if (o.n_max() > n_max()) c_.resize(static_cast<std::size_t>(o.n_max()));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& o) {
  if (o.n_max() > n_max()) c_.resize(static_cast<std::size_t>(o.n_max()));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

SpectralField& SpectralField::operator*=(double a) {
  for (auto& c : c_) c *= a;
  return *this;
}

SpectralField hilbert(const SpectralField& f) {
  SpectralField g(f.n_max());
  const cplx mi(0.0, -1.0);
  for (int n = 1; n <= f.n_max(); ++n) g.mode(n) = mi * f.coeff(n);
  return g;
}

SpectralField derivative(const SpectralField& f, int order) {
  if (order < 0) throw std::invalid_argument("derivative order must be >= 0");
  SpectralField g(f.n_max());
  for (int n = 1; n <= f.n_max(); ++n) {
    cplx mult = std::pow(cplx(0.0, static_cast<double>(n)), order);
    g.mode(n) = mult * f.coeff(n);
  }
  return g;
}

SpectralField project_low(const SpectralField& f, int N) {
  SpectralField g(std::min(f.n_max(), N));
  for (int n = 1; n <= g.n_max(); ++n) g.mode(n) = f.coeff(n);
  return g;
}

SpectralField project_high(const SpectralField& f, int N) {
  SpectralField g(f.n_max());
  for (int n = N + 1; n <= f.n_max(); ++n) g.mode(n) = f.coeff(n);
  return g;
}

ComplexField project_plus(const SpectralField& f) { return project_plus(f.to_complex()); }
ComplexField project_minus(const SpectralField& f) { return project_minus(f.to_complex()); }

ComplexField hilbert(const ComplexField& f) {
  ComplexField g(f.n_max());
  for (int n = 1; n <= f.n_max(); ++n) {
    g.at(n) = cplx(0.0, -1.0) * f.coeff(n);
    g.at(-n) = cplx(0.0, 1.0) * f.coeff(-n);
  }
  return g;
}

ComplexField derivative(const ComplexField& f, int order) {
  if (order < 0) throw std::invalid_argument("derivative order must be >= 0");
  ComplexField g(f.n_max());
  for (int n = -f.n_max(); n <= f.n_max(); ++n) {
    if (n == 0) {
      g.at(0) = order == 0 ? f.coeff(0) : cplx{};
      continue;
    }
    g.at(n) = std::pow(cplx(0.0, static_cast<double>(n)), order) * f.coeff(n);
  }
  return g;
}

ComplexField project_low(const ComplexField& f, int N) {
  ComplexField g(std::min(f.n_max(), N));
  for (int n = -g.n_max(); n <= g.n_max(); ++n) g.at(n) = f.coeff(n);
  return g;
}

ComplexField project_high(const ComplexField& f, int N) {
  ComplexField g(f.n_max());
  for (int n = N + 1; n <= f.n_max(); ++n) {
    g.at(n) = f.coeff(n);
    g.at(-n) = f.coeff(-n);
  }
  return g;
}

ComplexField project_plus(const ComplexField& f) {
  ComplexField g(f.n_max());
  for (int n = 1; n <= f.n_max(); ++n) g.at(n) = f.coeff(n);
  return g;
}

ComplexField project_minus(const ComplexField& f) {
  ComplexField g(f.n_max());
  for (int n = 1; n <= f.n_max(); ++n) g.at(-n) = f.coeff(-n);
  return g;
}

ComplexField multiply(const ComplexField& a, const ComplexField& b) {
  const std::size_t direct_cost = (2 * static_cast<std::size_t>(a.n_max()) + 1) *
                                  (2 * static_cast<std::size_t>(b.n_max()) + 1);
  if (direct_cost <= 16384) return detail::multiply_direct(a, b);
  return detail::multiply_fft(a, b);
}

Product multiply(const SpectralField& a, const SpectralField& b) {
  ComplexField full = multiply(a.to_complex(), b.to_complex());
  Product p;
  p.mean = full.coeff(0).real();
  SpectralField f(full.n_max());
  for (int n = 1; n <= full.n_max(); ++n) f.mode(n) = full.coeff(n);
  p.field = std::move(f);
  return p;
}

double integrate(const SpectralField&) { return 0.0; }
double integrate(const Product& p) { return two_pi * p.mean; }
cplx integrate(const ComplexField& f) { return two_pi * f.coeff(0); }

cplx integral_of_product(const ComplexField& a, const ComplexField& b) {
  cplx s{};
  const int lim = std::min(a.n_max(), b.n_max());
  for (int n = -lim; n <= lim; ++n) s += a.coeff(n) * b.coeff(-n);
  return two_pi * s;
}

double sobolev_norm_sq(const SpectralField& f, double s, bool homogeneous) {
  double sum = 0.0;
  for (int n = 1; n <= f.n_max(); ++n) {
    double w = homogeneous ? std::pow(static_cast<double>(n), 2.0 * s)
                           : std::pow(1.0 + static_cast<double>(n) * n, s);
    sum += w * std::norm(f.coeff(n));
  }
  return two_pi * 2.0 * sum;
}

std::vector<cplx> synthesize(const ComplexField& f, int grid_points) {
  std::size_t grid = next_pow2(static_cast<std::size_t>(grid_points));
  if (grid < 2 * static_cast<std::size_t>(f.n_max()) + 2)
    throw std::invalid_argument("synthesize: grid too small for the field degree");
  std::vector<cplx> v(grid);
  for (int n = -f.n_max(); n <= f.n_max(); ++n)
    v[static_cast<std::size_t>((n + static_cast<int>(grid)) % static_cast<int>(grid))] = f.coeff(n);
  fft_raw(v, true);
  return v;
}

double lp_norm(const SpectralField& f, double s, double p) {
  if (p < 1.0) throw std::invalid_argument("lp_norm requires p >= 1");
  SpectralField g(f.n_max());
  for (int n = 1; n <= f.n_max(); ++n)
    g.mode(n) = std::pow(1.0 + static_cast<double>(n) * n, s / 2.0) * f.coeff(n);
  const int grid = static_cast<int>(next_pow2(std::max<std::size_t>(
      32, 8 * (2 * static_cast<std::size_t>(f.n_max()) + 1))));
  std::vector<cplx> v = synthesize(g.to_complex(), grid);
  double acc = 0.0;
  for (const cplx& z : v) acc += std::pow(std::abs(z.real()), p);
  return std::pow(acc * two_pi / static_cast<double>(grid), 1.0 / p);
}

}  // namespace bom
