#include "hfun/mlsum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "hfun/error.hpp"

namespace hfun {
namespace {

constexpr double kIntegerTolerance = 1e-12;

Complex ml_argument(const MLSumSpec& spec) { return spec.beta * std::pow(spec.x, spec.alpha); }

}  // namespace

void validate(const MLSumSpec& spec) {
  const bool finite = std::isfinite(spec.alpha) && std::isfinite(spec.beta) && std::isfinite(spec.gamma) &&
                      std::isfinite(spec.delta) && std::isfinite(spec.x);
  if (!finite) throw Error(ErrorCode::InvalidSpec, "non-finite parameter");
  if (spec.alpha < 0.0) throw Error(ErrorCode::InvalidSpec, "alpha must be >= 0");
  if (spec.gamma <= 0.0) throw Error(ErrorCode::InvalidSpec, "gamma must be > 0");
  if (spec.delta < 0.0) throw Error(ErrorCode::InvalidSpec, "delta must be >= 0");
  if (spec.x <= 0.0) throw Error(ErrorCode::InvalidSpec, "x must be > 0");
}

EvalResult ml_series(Complex w, double gamma, double delta, double tol, std::int64_t max_terms) {
  EvalResult result{1.0 / std::tgamma(delta + 1.0), 0.0, Method::Direct, 1};
  if (w == Complex{0.0, 0.0}) return result;
  const bool real_w = w.imag() == 0.0;
  const Complex log_w = real_w ? Complex{std::log(std::abs(w.real())), 0.0} : std::log(w);
  const double sign = real_w && w.real() < 0.0 ? -1.0 : 1.0;
  double abs_sum = std::abs(result.value);
  double window_max = 0.0;
  int quiet = 0;
  for (std::int64_t n = 1;; ++n) {
    if (n >= max_terms) throw Error(ErrorCode::NoConvergence, "series not converged after " + std::to_string(n) + " terms");
    // integer powers of w are branch free
    Complex term = std::exp(double(n) * log_w - std::lgamma(gamma * double(n) + delta + 1.0));
    if (sign < 0.0 && n % 2 == 1) term = -term;
    result.value += term;
    abs_sum += std::abs(term);
    result.work = n + 1;
    const double size = std::abs(term);
    // the terms only start to fall once gamma n exceeds |w|^{1/gamma} or so
    const bool past_peak = gamma * double(n) > std::pow(std::abs(w), 1.0 / gamma);
    if (past_peak && size <= tol * std::abs(result.value)) {
      window_max = std::max(window_max, size);
      if (++quiet >= kSeriesStopWindow) break;
    } else {
      quiet = 0;
      window_max = 0.0;
    }
  }
  result.abs_error_estimate = window_max + 4.0 * std::numeric_limits<double>::epsilon() * abs_sum;
  return result;
}

EvalResult ml_direct(const MLSumSpec& spec, double tol) {
  validate(spec);
  return ml_series(ml_argument(spec), spec.gamma, spec.delta, tol);
}

EvalResult ml_via_pfq(const MLSumSpec& spec, double tol) {
  validate(spec);
  const double rounded = std::round(spec.gamma);
  if (std::abs(spec.gamma - rounded) > kIntegerTolerance) {
    throw Error(ErrorCode::InvalidSpec, "pFq form needs an integer gamma");
  }
  const int k = static_cast<int>(rounded);
  PFQSpec pfq{{1.0}, {}};
  for (int j = 1; j <= k; ++j) pfq.lower.push_back((spec.delta + j) / rounded);
  const Complex z = ml_argument(spec) / std::pow(rounded, rounded);
  EvalResult result = pfq_eval(pfq, z, {tol, kDefaultMaxTerms});
  const double prefactor = 1.0 / std::tgamma(spec.delta + 1.0);
  result.value *= prefactor;
  result.abs_error_estimate *= prefactor;
  return result;
}

HFunctionSpec ml_h_spec(double gamma, double delta) {
  return {1, 1, {{0.0, 1.0}}, {{0.0, 1.0}, {-delta, gamma}}};
}

EvalResult ml_via_h(const MLSumSpec& spec, double tol) {
  validate(spec);
  const HFunctionSpec h = ml_h_spec(spec.gamma, spec.delta);
  const double modulus = std::abs(spec.beta) * std::pow(spec.x, spec.alpha);
  if (modulus == 0.0) return {limit_at_zero(h), 0.0, Method::Direct, 1};
  // argument -beta x^alpha
  const Argument z = Argument::polar(modulus, spec.beta > 0.0 ? std::numbers::pi : 0.0);
  EvalOptions options;
  options.tol = tol;
  return eval(h, z, options);
}

TripleResult ml_triple(const MLSumSpec& spec, double tol) {
  validate(spec);
  TripleResult out;
  auto run = [&](PathOutcome& slot, auto&& path) {
    try {
      slot.result = path(spec, tol);
    } catch (const Error& e) {
      slot.error = e.what();
    }
  };
  run(out.direct, [](const MLSumSpec& s, double t) { return ml_direct(s, std::min(t, 1e-15)); });
  run(out.via_pfq, [](const MLSumSpec& s, double t) { return ml_via_pfq(s, std::min(t, 1e-15)); });
  run(out.via_h, [](const MLSumSpec& s, double t) { return ml_via_h(s, t); });

  std::vector<Complex> values;
  for (const PathOutcome* slot : {&out.direct, &out.via_pfq, &out.via_h}) {
    if (slot->result) values.push_back(slot->result->value);
  }
  if (values.size() < 2) {
    throw Error(ErrorCode::Unevaluable, "fewer than two paths succeeded: " + out.direct.error + "; " +
                                            out.via_pfq.error + "; " + out.via_h.error);
  }
  double largest = 0.0;
  for (const Complex v : values) largest = std::max(largest, std::abs(v));
  double worst = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) worst = std::max(worst, std::abs(values[i] - values[j]));
  }
  out.max_pairwise_discrepancy = largest > 0.0 ? worst / largest : worst;
  return out;
}

}  // namespace hfun
