#include "hfun/eval.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "hfun/error.hpp"

namespace hfun {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kLogOverflow = 700.0;

// Pairwise check that no two gamma factors of one pole family share a pole
// within the validation horizon: (c_h + nu)/C_h == (c_j + mu)/C_j.
void check_simple_poles(const std::vector<Complex>& coeffs, const std::vector<double>& scales) {
  for (std::size_t h = 0; h < coeffs.size(); ++h) {
    for (std::size_t j = h + 1; j < coeffs.size(); ++j) {
      for (int nu = 0; nu <= kPoleCheckHorizon; ++nu) {
        for (int mu = 0; mu <= kPoleCheckHorizon; ++mu) {
          const Complex gap = scales[j] * (coeffs[h] + double(nu)) - scales[h] * (coeffs[j] + double(mu));
          if (std::abs(gap) < kPoleSeparationTolerance) {
            throw Error(ErrorCode::MultiplePoles, "gamma factors " + std::to_string(h + 1) + " and " +
                                                      std::to_string(j + 1) + " share a pole");
          }
        }
      }
    }
  }
}

// Gamma factor c + d*w of a residue term.
struct Factor {
  Complex c;
  double d;
  enum Kind { Numerator, CrossNumerator, Denominator } kind;
};

// One pole family of a residue series: sum_nu (-1)^nu G(w_nu) z^{sign w_nu} / (nu! C_h)
// with w_nu = (offset + nu) / C_h.
EvalResult sum_family_terms(const std::vector<std::vector<Factor>>& families, const std::vector<Complex>& offsets,
                            const std::vector<double>& family_scales, Complex log_z_signed,
                            const SeriesOptions& options, Method method) {
  EvalResult result{{0.0, 0.0}, 0.0, method, 0};
  double abs_sum = 0.0;
  double tail = 0.0;
  for (std::size_t h = 0; h < families.size(); ++h) {
    const auto& factors = families[h];
    const double scale_h = family_scales[h];
    int quiet = 0;
    std::deque<double> window;
    std::int64_t nu = 0;
    for (;; ++nu) {
      if (nu >= options.max_terms) {
        throw Error(ErrorCode::NoConvergence, "residue series exceeded " + std::to_string(options.max_terms) +
                                                  " terms in pole family " + std::to_string(h + 1));
      }
      const double nud = static_cast<double>(nu);
      const Complex w = (offsets[h] + nud) / scale_h;
      bool vanishes = false;
      Complex log_term = w * log_z_signed - std::lgamma(nud + 1.0) - std::log(scale_h);
      for (const auto& f : factors) {
        const Complex arg = f.c + f.d * w;
        if (is_gamma_pole(arg)) {
          if (f.kind == Factor::Denominator) {
            vanishes = true;
            break;
          }
          if (f.kind == Factor::Numerator) {
            throw Error(ErrorCode::MultiplePoles, "higher-order pole met at term " + std::to_string(nu));
          }
          throw Error(ErrorCode::InvalidSpec, "left and right pole families coincide");
        }
        const Complex lg = log_gamma_unwrapped(arg);
        log_term += f.kind == Factor::Denominator ? -lg : lg;
      }
      Complex term{0.0, 0.0};
      if (!vanishes) {
        if (log_term.real() > kLogOverflow) throw Error(ErrorCode::NoConvergence, "residue terms overflow");
        term = std::exp(log_term);
        if (nu % 2 == 1) term = -term;
      }
      result.value += term;
      const double mag = std::abs(term);
      abs_sum += mag;
      window.push_back(mag);
      if (window.size() > static_cast<std::size_t>(kSeriesStopWindow)) window.pop_front();
      quiet = mag <= options.tol * std::abs(result.value) ? quiet + 1 : 0;
      if (quiet >= kSeriesStopWindow) break;
    }
    result.work += nu + 1;
    tail += *std::max_element(window.begin(), window.end());
  }
  result.work = std::max<std::int64_t>(result.work, 1);
  result.abs_error_estimate = tail + 4.0 * kEps * abs_sum;
  return result;
}

Complex integrand_log(const HFunctionSpec& spec, Complex s, const Complex& log_z, bool& vanishes) {
  Complex acc = -s * log_z;
  vanishes = false;
  auto numer = [&](Complex arg) {
    if (is_gamma_pole(arg)) throw Error(ErrorCode::Contour, "contour passes through a pole");
    acc += log_gamma_unwrapped(arg);
  };
  auto denom = [&](Complex arg) {
    if (is_gamma_pole(arg)) {
      vanishes = true;
      return;
    }
    acc -= log_gamma_unwrapped(arg);
  };
  for (int j = 0; j < spec.q(); ++j) {
    const auto& [b, big_b] = spec.lower[j];
    if (j < spec.m) numer(b + big_b * s); else denom(1.0 - b - big_b * s);
  }
  for (int j = 0; j < spec.p(); ++j) {
    const auto& [a, big_a] = spec.upper[j];
    if (j < spec.n) numer(1.0 - a - big_a * s); else denom(a + big_a * s);
  }
  return acc;
}

Complex integrand(const HFunctionSpec& spec, Complex s, const Complex& log_z) {
  bool vanishes = false;
  const Complex lg = integrand_log(spec, s, log_z, vanishes);
  if (vanishes || lg.real() < -745.0) return {0.0, 0.0};
  if (lg.real() > kLogOverflow) throw Error(ErrorCode::Decay, "integrand overflows on the contour");
  return std::exp(lg);
}

struct Contour {
  ContourShape shape;
  double c;
  double curvature;  // only for loops
  Complex point(double tau) const {
    switch (shape) {
      case ContourShape::LeftLoop: return {c - curvature * tau * tau, tau};
      case ContourShape::RightLoop: return {c + curvature * tau * tau, tau};
      default: return {c, tau};
    }
  }
  Complex derivative(double tau) const {
    switch (shape) {
      case ContourShape::LeftLoop: return {-2.0 * curvature * tau, 1.0};
      case ContourShape::RightLoop: return {2.0 * curvature * tau, 1.0};
      default: return {0.0, 1.0};
    }
  }
};

struct PoleBounds {
  double left = -std::numeric_limits<double>::infinity();   // rightmost left pole
  double right = std::numeric_limits<double>::infinity();   // leftmost right pole
};

PoleBounds pole_bounds(const HFunctionSpec& spec) {
  PoleBounds bounds;
  for (int j = 0; j < spec.m; ++j) {
    bounds.left = std::max(bounds.left, -spec.lower[j].coeff.real() / spec.lower[j].scale);
  }
  for (int k = 0; k < spec.n; ++k) {
    bounds.right = std::min(bounds.right, (1.0 - spec.upper[k].coeff.real()) / spec.upper[k].scale);
  }
  return bounds;
}

double loop_curvature(const HFunctionSpec& spec, double c, bool left) {
  double curvature = 1.0;
  if (left) {
    for (int j = 0; j < spec.m; ++j) {
      const auto& [b, big_b] = spec.lower[j];
      const double row = -b.imag() / big_b;
      if (row != 0.0) curvature = std::min(curvature, (c + b.real() / big_b) / (2.0 * row * row));
    }
  } else {
    for (int k = 0; k < spec.n; ++k) {
      const auto& [a, big_a] = spec.upper[k];
      const double row = -a.imag() / big_a;
      if (row != 0.0) curvature = std::min(curvature, ((1.0 - a.real()) / big_a - c) / (2.0 * row * row));
    }
  }
  return curvature;
}

struct Quadrature {
  Complex value;
  double error;
  double abs_mass;
  std::int64_t nodes;
};

// Trapezoid rule on [-T, T] with node doubling; also reports whether the ends
// had decayed.
Quadrature trapezoid(const HFunctionSpec& spec, const Complex& log_z, const Contour& contour, double half_length,
                     std::int64_t nodes, const QuadratureConfig& cfg, bool& decayed) {
  nodes = std::max<std::int64_t>(nodes, 3);
  double h = 2.0 * half_length / static_cast<double>(nodes - 1);
  auto f = [&](double tau) { return integrand(spec, contour.point(tau), log_z) * contour.derivative(tau); };

  Complex sum{0.0, 0.0};
  double abs_sum = 0.0;
  double peak = 0.0;
  for (std::int64_t k = 0; k < nodes; ++k) {
    const double tau = -half_length + h * static_cast<double>(k);
    const Complex v = f(tau);
    const double w = (k == 0 || k == nodes - 1) ? 0.5 : 1.0;
    sum += w * v;
    abs_sum += w * std::abs(v);
    peak = std::max(peak, std::abs(v));
  }
  const double ends = std::max(std::abs(f(-half_length)), std::abs(f(half_length)));
  decayed = peak > 0.0 ? ends < 1e-16 * peak : true;

  const Complex norm{0.0, 2.0 * kPi};
  Complex estimate = h * sum / norm;
  if (!decayed) return {estimate, std::numeric_limits<double>::infinity(), h * abs_sum / (2.0 * kPi), nodes};
  double error = std::numeric_limits<double>::infinity();
  std::int64_t used = nodes;
  for (int d = 0; d < cfg.max_doublings; ++d) {
    Complex mid{0.0, 0.0};
    for (std::int64_t k = 0; k < used - 1; ++k) {
      const Complex v = f(-half_length + h * (static_cast<double>(k) + 0.5));
      mid += v;
      abs_sum += std::abs(v);
    }
    sum += mid;
    h *= 0.5;
    used = 2 * used - 1;
    const Complex refined = h * sum / norm;
    error = std::abs(refined - estimate);
    estimate = refined;
    const double rounding = 64.0 * kEps * h * abs_sum / (2.0 * kPi);
    if (error <= cfg.tol * std::abs(estimate) || error <= rounding) break;
  }
  return {estimate, error, h * abs_sum / (2.0 * kPi), used};
}

}  // namespace

EvalResult eval_series_left(const HFunctionSpec& spec, const Argument& z, const SeriesOptions& options) {
  const ConvergenceInfo info = validate(spec);
  if (z.is_zero()) throw Error(ErrorCode::Domain, "left series needs z != 0");
  if (!info.left_series_valid(z)) {
    throw Error(ErrorCode::Domain, "left series needs delta > 0, or delta = 0 and |z| < 1/D");
  }
  std::vector<Complex> coeffs;
  std::vector<double> scales;
  for (int j = 0; j < spec.m; ++j) {
    coeffs.push_back(spec.lower[j].coeff);
    scales.push_back(spec.lower[j].scale);
  }
  check_simple_poles(coeffs, scales);

  std::vector<std::vector<Factor>> families;
  for (int h = 0; h < spec.m; ++h) {
    std::vector<Factor> factors;
    for (int j = 0; j < spec.q(); ++j) {
      if (j == h) continue;
      const auto& [b, big_b] = spec.lower[j];
      if (j < spec.m) factors.push_back({b, -big_b, Factor::Numerator});
      else factors.push_back({1.0 - b, big_b, Factor::Denominator});
    }
    for (int j = 0; j < spec.p(); ++j) {
      const auto& [a, big_a] = spec.upper[j];
      if (j < spec.n) factors.push_back({1.0 - a, big_a, Factor::CrossNumerator});
      else factors.push_back({a, -big_a, Factor::Denominator});
    }
    families.push_back(std::move(factors));
  }
  return sum_family_terms(families, coeffs, scales, z.log(), options, Method::SeriesLeft);
}

EvalResult eval_series_right(const HFunctionSpec& spec, const Argument& z, const SeriesOptions& options) {
  const ConvergenceInfo info = validate(spec);
  if (z.is_zero()) throw Error(ErrorCode::Domain, "right series needs z != 0");
  if (!info.right_series_valid(z)) {
    throw Error(ErrorCode::Domain, "right series needs delta < 0, or delta = 0 and |z| > 1/D");
  }
  std::vector<Complex> offsets;
  std::vector<double> scales;
  for (int k = 0; k < spec.n; ++k) {
    offsets.push_back(1.0 - spec.upper[k].coeff);
    scales.push_back(spec.upper[k].scale);
  }
  check_simple_poles(offsets, scales);

  std::vector<std::vector<Factor>> families;
  for (int h = 0; h < spec.n; ++h) {
    std::vector<Factor> factors;
    for (int j = 0; j < spec.p(); ++j) {
      if (j == h) continue;
      const auto& [a, big_a] = spec.upper[j];
      if (j < spec.n) factors.push_back({1.0 - a, -big_a, Factor::Numerator});
      else factors.push_back({a, big_a, Factor::Denominator});
    }
    for (int j = 0; j < spec.q(); ++j) {
      const auto& [b, big_b] = spec.lower[j];
      if (j < spec.m) factors.push_back({b, big_b, Factor::CrossNumerator});
      else factors.push_back({1.0 - b, -big_b, Factor::Denominator});
    }
    families.push_back(std::move(factors));
  }
  return sum_family_terms(families, offsets, scales, -z.log(), options, Method::SeriesRight);
}

EvalResult eval_mellin_barnes(const HFunctionSpec& spec, const Argument& z, const QuadratureConfig& cfg) {
  const ConvergenceInfo info = validate(spec);
  if (z.is_zero()) throw Error(ErrorCode::Domain, "Mellin-Barnes integral needs z != 0");
  if (!(cfg.half_length > 0.0) || cfg.nodes < 3 || !(cfg.tol > 0.0)) {
    throw Error(ErrorCode::Contour, "invalid quadrature configuration");
  }
  const PoleBounds bounds = pole_bounds(spec);
  if (!(bounds.left < bounds.right)) throw Error(ErrorCode::Contour, "no vertical line separates the pole families");

  double c = cfg.contour_abscissa;
  if (std::isnan(c)) {
    if (std::isfinite(bounds.left) && std::isfinite(bounds.right)) c = 0.5 * (bounds.left + bounds.right);
    else if (std::isfinite(bounds.left)) c = bounds.left + 1.0;
    else if (std::isfinite(bounds.right)) c = bounds.right - 1.0;
    else c = 0.0;
  } else if (!(bounds.left < c && c < bounds.right)) {
    throw Error(ErrorCode::Contour, "contour abscissa does not separate the pole families");
  }

  const Complex log_z = z.log();
  auto finish = [&](const Quadrature& q) {
    return EvalResult{q.value, q.error + 64.0 * kEps * q.abs_mass, Method::MellinBarnes, q.nodes};
  };

  std::string vertical_failure;
  if (cfg.shape == ContourShape::Auto || cfg.shape == ContourShape::Vertical) {
    bool decayed = false;
    try {
      const Quadrature q = trapezoid(spec, log_z, {ContourShape::Vertical, c, 0.0}, cfg.half_length, cfg.nodes,
                                     cfg, decayed);
      if (decayed) return finish(q);
      vertical_failure = "integrand has not decayed at the ends of the vertical segment";
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Decay) throw;
      vertical_failure = e.what();
    }
    if (cfg.shape == ContourShape::Vertical) throw Error(ErrorCode::Decay, vertical_failure);
  }

  ContourShape shape = cfg.shape;
  if (shape == ContourShape::Auto) {
    if (info.left_series_valid(z)) shape = ContourShape::LeftLoop;
    else if (info.right_series_valid(z)) shape = ContourShape::RightLoop;
    else throw Error(ErrorCode::Decay, vertical_failure + "; no loop contour applies on |z| = 1/D");
  }
  const bool left = shape == ContourShape::LeftLoop;
  const Contour contour{shape, c, loop_curvature(spec, c, left)};
  if (!(contour.curvature > 0.0)) throw Error(ErrorCode::Contour, "no loop contour separates the pole families");

  const double h = 2.0 * cfg.half_length / static_cast<double>(cfg.nodes - 1);
  for (double half_length = 8.0; half_length <= 256.0; half_length *= 2.0) {
    const auto nodes = static_cast<std::int64_t>(std::ceil(2.0 * half_length / h)) + 1;
    bool decayed = false;
    Quadrature q;
    try {
      q = trapezoid(spec, log_z, contour, half_length, nodes, cfg, decayed);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Decay) throw;
      continue;
    }
    if (decayed) return finish(q);
  }
  throw Error(ErrorCode::Decay, "integrand does not decay along the loop contour");
}

EvalResult eval(const HFunctionSpec& spec, const Argument& z, const EvalOptions& options) {
  const ConvergenceInfo info = validate(spec);
  if (z.is_zero()) throw Error(ErrorCode::Domain, "H-function series need z != 0");
  const SeriesOptions series{options.tol, options.max_terms};
  QuadratureConfig quadrature = options.quadrature;
  quadrature.tol = std::min(quadrature.tol, options.tol);

  if (options.method == EvalMethod::MellinBarnes) return eval_mellin_barnes(spec, z, quadrature);

  std::string failures;
  auto try_series = [&]() -> std::optional<EvalResult> {
    try {
      if (info.left_series_valid(z)) return eval_series_left(spec, z, series);
      if (info.right_series_valid(z)) return eval_series_right(spec, z, series);
      throw Error(ErrorCode::Domain, "|z| = 1/D lies on the boundary of both residue series");
    } catch (const Error& e) {
      if (e.code() == ErrorCode::InvalidSpec) throw;
      if (options.method == EvalMethod::Series) throw;
      failures += std::string("series: ") + e.what();
      return std::nullopt;
    }
  };
  if (auto r = try_series()) return *r;
  try {
    return eval_mellin_barnes(spec, z, quadrature);
  } catch (const Error& e) {
    failures += std::string("; mellin-barnes: ") + e.what();
  }
  throw Error(ErrorCode::Unevaluable, failures);
}

EvalResult eval(const HFunctionSpec& spec, Complex z, const EvalOptions& options) {
  return eval(spec, Argument::from_value(z), options);
}

Complex limit_at_zero(const HFunctionSpec& spec) {
  const ConvergenceInfo info = validate(spec);
  if (info.delta < -kDeltaZeroTolerance) throw Error(ErrorCode::Domain, "no left residue series at z = 0");
  Complex total{0.0, 0.0};
  for (int h = 0; h < spec.m; ++h) {
    const auto& [bh, scale_h] = spec.lower[h];
    const Complex exponent = bh / scale_h;
    if (std::abs(exponent) < 1e-14) {
      // nu = 0 term with w = 0
      Complex value = 1.0 / scale_h;
      for (int j = 0; j < spec.q(); ++j) {
        if (j == h) continue;
        const auto& [b, big_b] = spec.lower[j];
        if (j < spec.m) {
          const auto g = gamma(b);
          if (g.is_pole) throw Error(ErrorCode::MultiplePoles, "higher-order pole at s = 0");
          value *= g.value;
        } else {
          value *= reciprocal_gamma(1.0 - b);
        }
      }
      for (int j = 0; j < spec.p(); ++j) {
        const auto& [a, big_a] = spec.upper[j];
        if (j < spec.n) {
          const auto g = gamma(1.0 - a);
          if (g.is_pole) throw Error(ErrorCode::InvalidSpec, "left and right pole families coincide");
          value *= g.value;
        } else {
          value *= reciprocal_gamma(a);
        }
      }
      total += value;
    } else if (exponent.real() <= 0.0) {
      throw Error(ErrorCode::Domain, "H-function has no finite limit at z = 0");
    }
  }
  return total;
}

}  // namespace hfun
