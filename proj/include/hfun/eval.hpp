#pragma once

#include <cstdint>
#include <limits>

#include "hfun/model.hpp"
#include "hfun/result.hpp"

namespace hfun {

inline constexpr std::int64_t kDefaultMaxTerms = 100'000;

struct SeriesOptions {
  double tol = 1e-10;
  std::int64_t max_terms = kDefaultMaxTerms;  // per pole family
};

/// Number of consecutive negligible terms that ends a residue series.
inline constexpr int kSeriesStopWindow = 20;

enum class ContourShape { Auto, Vertical, LeftLoop, RightLoop };

struct QuadratureConfig {
  /// Real part of the contour where it crosses the real axis; NaN picks the
  /// midpoint of the gap between the two pole families.
  double contour_abscissa = std::numeric_limits<double>::quiet_NaN();
  double half_length = 40.0;
  std::int64_t nodes = 2001;
  double tol = 1e-10;
  ContourShape shape = ContourShape::Auto;
  int max_doublings = 6;
};

/// Residue sum over the poles of prod_{j<=m} Gamma(b_j + B_j s), in powers of z.
EvalResult eval_series_left(const HFunctionSpec& spec, const Argument& z, const SeriesOptions& options = {});

/// Residue sum over the poles of prod_{j<=n} Gamma(1 - a_j - A_j s), in powers of 1/z.
EvalResult eval_series_right(const HFunctionSpec& spec, const Argument& z, const SeriesOptions& options = {});

/// Trapezoidal quadrature of the Mellin-Barnes integral.
///
/// The vertical line c + it is tried first. When the integrand has not decayed
/// to 1e-16 of its peak at the ends (|arg z| too close to the opening angle of
/// the gamma quotient), ContourShape::Auto switches to a parabolic loop that
/// wraps the left poles (delta > 0) or the right poles (delta < 0). The error
/// estimate is the node-doubling difference.
EvalResult eval_mellin_barnes(const HFunctionSpec& spec, const Argument& z, const QuadratureConfig& cfg = {});

enum class EvalMethod { Auto, Series, MellinBarnes };

struct EvalOptions {
  double tol = 1e-10;
  std::int64_t max_terms = kDefaultMaxTerms;
  EvalMethod method = EvalMethod::Auto;
  QuadratureConfig quadrature{};
};

/// Picks the residue series the convergence domain allows; on any series
/// failure Auto retries with Mellin-Barnes. Throws Error(Unevaluable) listing
/// every failure, Error(InvalidSpec) for bad specs, Error(Domain) at z = 0.
EvalResult eval(const HFunctionSpec& spec, const Argument& z, const EvalOptions& options = {});
EvalResult eval(const HFunctionSpec& spec, Complex z, const EvalOptions& options = {});

/// lim_{z->0} H(z): the constant term of the left residue series. Throws
/// Error(Domain) if a leading exponent has non-positive real part other than 0.
Complex limit_at_zero(const HFunctionSpec& spec);

}  // namespace hfun
