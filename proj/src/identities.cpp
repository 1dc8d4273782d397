#include "hfun/identities.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "hfun/error.hpp"

namespace hfun {
namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};

std::string describe(const ParamPair& pair) {
  char buf[96];
  if (pair.coeff.imag() != 0.0) {
    std::snprintf(buf, sizeof buf, "(%g%+gi, %g)", pair.coeff.real(), pair.coeff.imag(), pair.scale);
  } else {
    std::snprintf(buf, sizeof buf, "(%g, %g)", pair.coeff.real(), pair.scale);
  }
  return buf;
}

void require_lambda(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw Error(ErrorCode::InvalidSpec, "lambda must be positive");
}

HFunctionSpec drop_leading(const HFunctionSpec& spec) {
  HFunctionSpec out = spec;
  out.upper.erase(out.upper.begin());
  out.lower.erase(out.lower.begin());
  out.m -= 1;
  out.n -= 1;
  return out;
}

// e^{i pi alpha} for complex alpha
Complex phase_weight(Complex alpha, double sign) { return std::exp(sign * kI * kPi * alpha); }

std::vector<WeightedTerm> akr_terms(const HFunctionSpec& spec, Complex alpha, double lambda) {
  const Complex two_pi_i = 2.0 * kPi * kI;
  return {
      {phase_weight(alpha, 1.0) / two_pi_i, -kPi * lambda, spec},
      {-phase_weight(alpha, -1.0) / two_pi_i, kPi * lambda, spec},
  };
}

std::vector<WeightedTerm> new_terms(const HFunctionSpec& spec, Complex alpha, double lambda) {
  return {
      {phase_weight(alpha, 1.0), -kPi * lambda, spec},
      {phase_weight(alpha, -1.0), kPi * lambda, spec},
  };
}

void require_leading_pair(const HFunctionSpec& spec, const ParamPair& expected) {
  if (spec.m < 1 || spec.n < 1) throw Error(ErrorCode::Structure, "needs m >= 1 and n >= 1");
  if (!pairs_match(spec.upper.front(), expected)) {
    throw Error(ErrorCode::Structure, "upper slot 1 is " + describe(spec.upper.front()) + ", expected " + describe(expected));
  }
  if (!pairs_match(spec.lower.front(), expected)) {
    throw Error(ErrorCode::Structure, "lower slot 1 is " + describe(spec.lower.front()) + ", expected " + describe(expected));
  }
}

}  // namespace

bool pairs_match(const ParamPair& a, const ParamPair& b) noexcept {
  return std::abs(a.coeff - b.coeff) <= kPairMatchTolerance && std::abs(a.scale - b.scale) <= kPairMatchTolerance;
}

HFunctionSpec prepend_pair(const HFunctionSpec& spec, const ParamPair& pair) {
  HFunctionSpec out = spec;
  out.upper.insert(out.upper.begin(), pair);
  out.lower.insert(out.lower.begin(), pair);
  out.m += 1;
  out.n += 1;
  return out;
}

HFunctionSpec append_pair(const HFunctionSpec& spec, const ParamPair& pair) {
  HFunctionSpec out = spec;
  out.upper.push_back(pair);
  out.lower.push_back(pair);
  return out;
}

SplitResult split_akr(const HFunctionSpec& spec, Complex alpha, double lambda) {
  require_lambda(lambda);
  return {append_pair(spec, {alpha, lambda}), akr_terms(spec, alpha, lambda)};
}

SplitResult split_new(const HFunctionSpec& spec, Complex alpha, double lambda) {
  require_lambda(lambda);
  require_leading_pair(spec, {alpha, lambda});
  HFunctionSpec doubled = spec;
  doubled.upper.front() = {2.0 * alpha, 2.0 * lambda};
  doubled.lower.front() = {2.0 * alpha, 2.0 * lambda};
  return {spec, new_terms(doubled, alpha, lambda)};
}

SplitResult reduce_akr(const HFunctionSpec& spec) {
  if (spec.m < 1 || spec.n < 1) throw Error(ErrorCode::Structure, "needs m >= 1 and n >= 1");
  const ParamPair lead = spec.upper.front();
  require_leading_pair(spec, lead);
  return {drop_leading(spec), akr_terms(spec, lead.coeff, lead.scale)};
}

SplitResult reduce_new(const HFunctionSpec& spec) {
  if (spec.n < 1 || spec.p() - 1 < spec.n) throw Error(ErrorCode::Structure, "needs p-1 >= n >= 1");
  if (spec.m < 1 || spec.q() - 1 < spec.m) throw Error(ErrorCode::Structure, "needs q-1 >= m >= 1");
  const ParamPair trail = spec.upper.back();
  if (!pairs_match(spec.lower.back(), trail)) {
    throw Error(ErrorCode::Structure, "lower slot " + std::to_string(spec.q()) + " is " + describe(spec.lower.back()) +
                                          ", expected " + describe(trail));
  }
  require_leading_pair(spec, {2.0 * trail.coeff, 2.0 * trail.scale});
  HFunctionSpec reduced = drop_leading(spec);
  reduced.upper.pop_back();
  reduced.lower.pop_back();
  return {reduced, new_terms(spec, trail.coeff, trail.scale)};
}

SplitEvaluation evaluate_split(const SplitResult& split, const Argument& z, const EvalOptions& options) {
  SplitEvaluation out;
  out.lhs = eval(split.source, z, options).value;
  double term_mass = 0.0;
  for (const auto& term : split.terms) {
    const Complex contribution = term.weight * eval(term.spec, z.rotated(term.phase), options).value;
    out.rhs += contribution;
    term_mass += std::abs(contribution);
  }
  out.scale = std::max(std::abs(out.lhs), term_mass);
  return out;
}

std::string_view formula_name(FormulaTag tag) noexcept {
  switch (tag) {
    case FormulaTag::ExpNeg: return "EXP_NEG";
    case FormulaTag::Expm1OverZ: return "EXPM1_OVER_Z";
    case FormulaTag::Expm1MinusZOverZ2: return "EXPM1_MINUS_Z_OVER_Z2";
    case FormulaTag::CoshSqrt: return "COSH_SQRT";
    case FormulaTag::SinhSqrtOverSqrt: return "SINH_SQRT_OVER_SQRT";
  }
  return "UNKNOWN";
}

namespace {

// sum_{k>=0} z^k / (k + shift)!
Complex shifted_exp_series(Complex z, int shift) {
  Complex term = 1.0;
  for (int k = 1; k <= shift; ++k) term /= double(k);
  Complex sum = term;
  for (int k = 1; k < 40; ++k) {
    term *= z / double(k + shift);
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

}  // namespace

Complex ClosedForm::formula_value(Complex z) const {
  switch (formula) {
    case FormulaTag::ExpNeg:
      return std::exp(-z);
    case FormulaTag::Expm1OverZ:
      if (std::abs(z) < 0.5) return shifted_exp_series(z, 1);
      return (std::exp(z) - 1.0) / z;
    case FormulaTag::Expm1MinusZOverZ2:
      if (std::abs(z) < 0.5) return shifted_exp_series(z, 2);
      return (std::exp(z) - 1.0 - z) / (z * z);
    case FormulaTag::CoshSqrt:
      return std::cosh(std::sqrt(z));
    case FormulaTag::SinhSqrtOverSqrt: {
      const Complex r = std::sqrt(z);
      if (std::abs(r) < 1e-4) return 1.0 + z / 6.0;
      return std::sinh(r) / r;
    }
  }
  return {std::nan(""), std::nan("")};
}

const std::vector<ClosedForm>& closed_form_registry() {
  static const std::vector<ClosedForm> registry = [] {
    const ParamPair p00{0.0, 1.0};
    const ParamPair pm1{-1.0, 1.0};
    const ParamPair pm2{-2.0, 1.0};
    return std::vector<ClosedForm>{
        {"exp_neg", {1, 0, {}, {p00}}, 1, FormulaTag::ExpNeg, "all complex z"},
        {"exp_neg_cancelled", {1, 1, {p00}, {p00, p00}}, 1, FormulaTag::ExpNeg, "all complex z"},
        {"expm1_over_z", {1, 1, {p00}, {p00, pm1}}, -1, FormulaTag::Expm1OverZ, "all complex z"},
        {"expm1_minus_z_over_z2", {1, 2, {p00, pm1}, {p00, pm1, pm2}}, -1, FormulaTag::Expm1MinusZOverZ2,
         "all complex z"},
        {"cosh_sqrt", {1, 1, {p00}, {p00, {0.0, 2.0}}}, -1, FormulaTag::CoshSqrt, "all complex z"},
        {"sinh_sqrt_over_sqrt", {1, 1, {p00}, {p00, {-1.0, 2.0}}}, -1, FormulaTag::SinhSqrtOverSqrt,
         "all complex z"},
    };
  }();
  return registry;
}

std::optional<ClosedForm> match_closed_form(const HFunctionSpec& spec) {
  for (const auto& entry : closed_form_registry()) {
    const auto& pattern = entry.pattern;
    if (pattern.m != spec.m || pattern.n != spec.n || pattern.p() != spec.p() || pattern.q() != spec.q()) continue;
    bool same = true;
    for (int j = 0; same && j < spec.p(); ++j) same = pairs_match(pattern.upper[j], spec.upper[j]);
    for (int j = 0; same && j < spec.q(); ++j) same = pairs_match(pattern.lower[j], spec.lower[j]);
    if (same) return entry;
  }
  return std::nullopt;
}

}  // namespace hfun
