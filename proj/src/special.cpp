#include "hfun/special.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "hfun/error.hpp"

namespace hfun {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfLogTwoPi = 0.91893853320467274178032973640562;
constexpr double kStirlingThreshold = 15.0;

// B_{2k} / (2k (2k-1)), k = 1..8
constexpr std::array<double, 8> kStirling = {
    1.0 / 12.0,           -1.0 / 360.0,         1.0 / 1260.0,  -1.0 / 1680.0,
    1.0 / 1188.0,         -691.0 / 360360.0,    1.0 / 156.0,   -3617.0 / 122400.0,
};

// Stirling series on Re(z) >= 0.5, shifting |z| past the threshold first.
Complex log_gamma_right(Complex z) {
  Complex shift_product{1.0, 0.0};
  bool shifted = false;
  while (std::abs(z) < kStirlingThreshold) {
    shift_product *= z;
    z += 1.0;
    shifted = true;
  }
  const Complex inv = 1.0 / z;
  const Complex inv2 = inv * inv;
  Complex series{0.0, 0.0};
  for (auto it = kStirling.rbegin(); it != kStirling.rend(); ++it) series = series * inv2 + *it;
  series *= inv;
  Complex result = (z - 0.5) * std::log(z) - z + kHalfLogTwoPi + series;
  if (shifted) result -= std::log(shift_product);
  return result;
}

double sin_pi_real(double x) {
  const double n = std::nearbyint(x);
  const double r = x - n;
  const double s = std::sin(kPi * r);
  return std::fmod(n, 2.0) == 0.0 ? s : -s;
}

double cos_pi_real(double x) {
  const double n = std::nearbyint(x);
  const double r = x - n;
  const double c = std::cos(kPi * r);
  return std::fmod(n, 2.0) == 0.0 ? c : -c;
}

Complex wrap_principal(Complex w) {
  double im = std::remainder(w.imag(), 2.0 * kPi);
  if (im <= -kPi) im += 2.0 * kPi;
  return {w.real(), im};
}

}  // namespace

bool is_gamma_pole(Complex z) noexcept {
  if (std::abs(z.imag()) > kPoleTolerance) return false;
  const double n = std::nearbyint(z.real());
  return n <= 0.0 && std::abs(z - Complex{n, 0.0}) <= kPoleTolerance;
}

Complex sin_pi(Complex z) noexcept {
  const double x = z.real();
  const double y = z.imag();
  return {sin_pi_real(x) * std::cosh(kPi * y), cos_pi_real(x) * std::sinh(kPi * y)};
}

Complex log_sin_pi(Complex z) noexcept {
  const double y = z.imag();
  if (std::abs(y) < 10.0) return std::log(sin_pi(z));
  const double n = std::nearbyint(z.real());
  const Complex w{z.real() - n, y};
  const Complex parity{0.0, std::fmod(n, 2.0) == 0.0 ? 0.0 : kPi};
  const Complex i{0.0, 1.0};
  if (y > 0.0) {
    return std::log(Complex{0.0, 0.5}) - i * kPi * w + std::log(1.0 - std::exp(2.0 * i * kPi * w)) + parity;
  }
  return std::log(Complex{0.0, -0.5}) + i * kPi * w + std::log(1.0 - std::exp(-2.0 * i * kPi * w)) + parity;
}

Complex log_gamma_unwrapped(Complex z) {
  if (is_gamma_pole(z)) throw Error(ErrorCode::Pole, "log_gamma at non-positive integer");
  if (z.real() >= 0.5) return log_gamma_right(z);
  return std::log(kPi) - log_sin_pi(z) - log_gamma_right(1.0 - z);
}

Complex log_gamma(Complex z) { return wrap_principal(log_gamma_unwrapped(z)); }

GammaResult gamma(Complex z) noexcept {
  if (is_gamma_pole(z)) return {Complex{std::nan(""), std::nan("")}, true};
  Complex value = std::exp(log_gamma_unwrapped(z));
  if (z.imag() == 0.0) value.imag(0.0);
  return {value, false};
}

Complex reciprocal_gamma(Complex z) noexcept {
  if (is_gamma_pole(z)) return {0.0, 0.0};
  Complex value = std::exp(-log_gamma_unwrapped(z));
  if (z.imag() == 0.0) value.imag(0.0);
  return value;
}

Complex pochhammer(Complex a, std::uint64_t n) noexcept {
  Complex product{1.0, 0.0};
  for (std::uint64_t k = 0; k < n; ++k) product *= a + static_cast<double>(k);
  return product;
}

Complex gamma_multiplication_factor(Complex z, unsigned k) {
  if (k == 0) throw Error(ErrorCode::Domain, "multiplication factor needs k >= 1");
  const double kd = static_cast<double>(k);
  const Complex kz = kd * z;
  if (is_gamma_pole(kz)) throw Error(ErrorCode::Pole, "Gamma(k z) at a pole");
  const Complex log_value =
      log_gamma_unwrapped(kz) + 0.5 * (kd - 1.0) * std::log(2.0 * kPi) + (0.5 - kz) * std::log(kd);
  Complex value = std::exp(log_value);
  if (z.imag() == 0.0) value.imag(0.0);
  return value;
}

}  // namespace hfun
