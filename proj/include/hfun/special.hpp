#pragma once

#include <complex>
#include <cstdint>

namespace hfun {

using Complex = std::complex<double>;

/// Arguments within this distance of a non-positive integer are gamma poles.
inline constexpr double kPoleTolerance = 1e-12;

struct GammaResult {
  Complex value;
  bool is_pole = false;
};

bool is_gamma_pole(Complex z) noexcept;

/// Principal-branch log-gamma: exp(log_gamma(z)) == Gamma(z), Im in (-pi, pi].
/// Throws Error(Pole) on non-positive integers.
Complex log_gamma(Complex z);

/// Some logarithm of Gamma(z); continuous on Re(z) >= 0.5, otherwise only
/// correct modulo 2*pi*i. Meant for products and quotients of gammas that are
/// exponentiated afterwards. Throws Error(Pole).
Complex log_gamma_unwrapped(Complex z);

/// Gamma(z), reporting poles in-band.
GammaResult gamma(Complex z) noexcept;

/// 1/Gamma(z); exactly zero at the poles of Gamma.
Complex reciprocal_gamma(Complex z) noexcept;

/// Rising factorial a(a+1)...(a+n-1), always as a direct product.
Complex pochhammer(Complex a, std::uint64_t n) noexcept;

/// Gamma(k z) (2 pi)^{(k-1)/2} k^{1/2 - k z}, which equals prod_{j<k} Gamma(z + j/k).
Complex gamma_multiplication_factor(Complex z, unsigned k);

/// sin(pi z) with the real part reduced exactly before scaling by pi.
Complex sin_pi(Complex z) noexcept;

/// A logarithm of sin(pi z) that stays finite for large |Im z|.
Complex log_sin_pi(Complex z) noexcept;

}  // namespace hfun
