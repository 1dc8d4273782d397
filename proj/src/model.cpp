#include "hfun/model.hpp"

#include <cmath>
#include <string>

#include "hfun/error.hpp"

namespace hfun {

Argument Argument::from_value(Complex z) {
  if (z == Complex{0.0, 0.0}) return Argument({-std::numeric_limits<double>::infinity(), 0.0});
  return Argument(std::log(z));
}

Argument Argument::polar(double modulus, double phase) {
  if (!(modulus >= 0.0)) throw Error(ErrorCode::Domain, "negative modulus");
  if (modulus == 0.0) return Argument({-std::numeric_limits<double>::infinity(), 0.0});
  return Argument({std::log(modulus), phase});
}

double Argument::modulus() const noexcept { return is_zero() ? 0.0 : std::exp(log_.real()); }

Complex Argument::value() const noexcept {
  if (is_zero()) return {0.0, 0.0};
  return std::exp(log_);
}

Argument Argument::rotated(double theta) const {
  if (is_zero()) return *this;
  return Argument(log_ + Complex{0.0, theta});
}

Argument Argument::power(double k) const {
  if (is_zero()) {
    if (k > 0.0) return *this;
    throw Error(ErrorCode::Domain, "non-positive power of zero");
  }
  return Argument(k * log_);
}

Argument Argument::scaled(double factor) const {
  if (!(factor > 0.0)) throw Error(ErrorCode::Domain, "argument scale must be positive");
  if (is_zero()) return *this;
  return Argument(log_ + std::log(factor));
}

bool ConvergenceInfo::left_series_valid(const Argument& z) const noexcept {
  if (z.is_zero()) return false;
  if (delta > kDeltaZeroTolerance) return true;
  if (delta < -kDeltaZeroTolerance) return false;
  return z.modulus() < 1.0 / big_d;
}

bool ConvergenceInfo::right_series_valid(const Argument& z) const noexcept {
  if (z.is_zero()) return false;
  if (delta < -kDeltaZeroTolerance) return true;
  if (delta > kDeltaZeroTolerance) return false;
  return z.modulus() > 1.0 / big_d;
}

namespace {

void check_pair(const ParamPair& pair, const char* row, std::size_t index) {
  const bool finite = std::isfinite(pair.coeff.real()) && std::isfinite(pair.coeff.imag());
  if (!finite || !std::isfinite(pair.scale)) {
    throw Error(ErrorCode::InvalidSpec, std::string(row) + " pair " + std::to_string(index + 1) + " is not finite");
  }
  if (!(pair.scale > 0.0)) {
    throw Error(ErrorCode::InvalidSpec,
                std::string(row) + " pair " + std::to_string(index + 1) + " has non-positive scale");
  }
}

}  // namespace

ConvergenceInfo validate(const HFunctionSpec& spec) {
  if (spec.n < 0 || spec.n > spec.p()) throw Error(ErrorCode::InvalidSpec, "n must satisfy 0 <= n <= p");
  if (spec.m < 0 || spec.m > spec.q()) throw Error(ErrorCode::InvalidSpec, "m must satisfy 0 <= m <= q");
  for (std::size_t j = 0; j < spec.upper.size(); ++j) check_pair(spec.upper[j], "upper", j);
  for (std::size_t j = 0; j < spec.lower.size(); ++j) check_pair(spec.lower[j], "lower", j);

  // A left pole -(b_j+nu)/B_j must never meet a right pole (1-a_k+mu)/A_k.
  for (int j = 0; j < spec.m; ++j) {
    const auto& [b, big_b] = spec.lower[j];
    for (int k = 0; k < spec.n; ++k) {
      const auto& [a, big_a] = spec.upper[k];
      for (int nu = 0; nu <= kPoleCheckHorizon; ++nu) {
        for (int mu = 0; mu <= kPoleCheckHorizon; ++mu) {
          const Complex gap = big_a * (b + double(nu)) - big_b * (a - 1.0 - double(mu));
          if (std::abs(gap) < kPoleSeparationTolerance) {
            throw Error(ErrorCode::InvalidSpec, "poles of lower pair " + std::to_string(j + 1) +
                                                    " collide with poles of upper pair " + std::to_string(k + 1));
          }
        }
      }
    }
  }

  ConvergenceInfo info;
  double log_d = 0.0;
  for (const auto& pair : spec.upper) {
    info.delta -= pair.scale;
    log_d += pair.scale * std::log(pair.scale);
  }
  for (const auto& pair : spec.lower) {
    info.delta += pair.scale;
    log_d -= pair.scale * std::log(pair.scale);
  }
  info.big_d = std::exp(log_d);
  if (std::abs(info.delta) > kDeltaZeroTolerance) {
    info.domain_class = DomainClass::AllNonzeroZ;
  } else if (spec.m > 0) {
    info.domain_class = DomainClass::DiskInterior;
  } else if (spec.n > 0) {
    info.domain_class = DomainClass::DiskExterior;
  } else {
    info.domain_class = DomainClass::Empty;
  }
  return info;
}

PfqBridge pfq_to_h(const PFQSpec& pfq) {
  PfqBridge bridge;
  bridge.prefactor = {1.0, 0.0};
  for (const auto& b : pfq.lower) {
    const auto g = gamma(b);
    if (g.is_pole) throw Error(ErrorCode::Pole, "lower pFq parameter is a non-positive integer");
    bridge.prefactor *= g.value;
  }
  for (const auto& a : pfq.upper) {
    const auto g = gamma(a);
    if (g.is_pole) throw Error(ErrorCode::Pole, "upper pFq parameter is a non-positive integer");
    bridge.prefactor /= g.value;
  }
  auto& spec = bridge.spec;
  spec.m = 1;
  spec.n = static_cast<int>(pfq.upper.size());
  for (const auto& a : pfq.upper) spec.upper.push_back({1.0 - a, 1.0});
  spec.lower.push_back({0.0, 1.0});
  for (const auto& b : pfq.lower) spec.lower.push_back({1.0 - b, 1.0});
  return bridge;
}

HFunctionSpec power_rescale(const HFunctionSpec& spec, double k) {
  if (!(k > 0.0) || !std::isfinite(k)) throw Error(ErrorCode::InvalidSpec, "rescale factor must be positive");
  HFunctionSpec out = spec;
  for (auto& pair : out.upper) pair.scale *= k;
  for (auto& pair : out.lower) pair.scale *= k;
  return out;
}

EvalResult pfq_eval(const PFQSpec& pfq, Complex z, const PfqOptions& options) {
  for (const auto& b : pfq.lower) {
    if (is_gamma_pole(b)) throw Error(ErrorCode::InvalidSpec, "lower pFq parameter is a non-positive integer");
  }
  EvalResult result{{1.0, 0.0}, 0.0, Method::Hypergeometric, 1};
  if (z == Complex{0.0, 0.0}) return result;

  const auto p = pfq.upper.size();
  const auto q = pfq.lower.size();
  if (p > q + 1) throw Error(ErrorCode::Divergent, "pFq with p > q+1 diverges for z != 0");
  if (p == q + 1 && std::abs(z) >= 1.0) throw Error(ErrorCode::Divergent, "pFq with p = q+1 needs |z| < 1");

  Complex term{1.0, 0.0};
  Complex sum{1.0, 0.0};
  for (std::int64_t k = 0; k < options.max_terms; ++k) {
    const double kd = static_cast<double>(k);
    Complex ratio = z / (kd + 1.0);
    for (const auto& a : pfq.upper) ratio *= a + kd;
    for (const auto& b : pfq.lower) ratio /= b + kd;
    const Complex next = term * ratio;
    result.work = k + 1;
    if (next == Complex{0.0, 0.0}) {
      result.value = sum;
      result.abs_error_estimate = 0.0;
      return result;
    }
    if (std::abs(next) <= options.tol * std::abs(sum) && std::abs(ratio) < 1.0) {
      result.value = sum;
      result.abs_error_estimate = std::abs(next);
      return result;
    }
    sum += next;
    term = next;
    if (!std::isfinite(std::abs(sum))) throw Error(ErrorCode::NoConvergence, "pFq partial sums overflowed");
  }
  throw Error(ErrorCode::NoConvergence, "pFq series exceeded the term cap");
}

}  // namespace hfun
