#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hfun/eval.hpp"
#include "hfun/model.hpp"

namespace hfun {

/// weight * H(spec, e^{i phase} z). The phase is kept unreduced so that it
/// composes with arg z on the Riemann surface.
struct WeightedTerm {
  Complex weight;
  double phase = 0.0;
  HFunctionSpec spec;

  Complex argument_factor() const { return std::polar(1.0, phase); }
};

/// source(z) == sum_t weight_t * H(spec_t, e^{i phase_t} z).
struct SplitResult {
  HFunctionSpec source;
  std::vector<WeightedTerm> terms;
};

/// Parameter pairs compare equal within this tolerance in structural checks.
inline constexpr double kPairMatchTolerance = 1e-12;

bool pairs_match(const ParamPair& a, const ParamPair& b) noexcept;

/// Puts (alpha, lambda) in the first slot of both rows (m and n grow by one).
HFunctionSpec prepend_pair(const HFunctionSpec& spec, const ParamPair& pair);
/// Puts (alpha, lambda) in the last slot of both rows (m and n unchanged).
HFunctionSpec append_pair(const HFunctionSpec& spec, const ParamPair& pair);

/// Splits the spec augmented with a trailing (alpha, lambda) in both rows into
/// e^{i pi alpha}/(2 pi i) H(spec, e^{-i pi lambda} z) - e^{-i pi alpha}/(2 pi i) H(spec, e^{i pi lambda} z).
SplitResult split_akr(const HFunctionSpec& spec, Complex alpha, double lambda);

/// Spec whose first upper and first lower pairs are both (alpha, lambda) becomes
/// e^{i pi alpha} H(spec', e^{-i pi lambda} z) + e^{-i pi alpha} H(spec', e^{i pi lambda} z),
/// spec' having (2 alpha, 2 lambda) in those slots. Throws Error(Structure).
SplitResult split_new(const HFunctionSpec& spec, Complex alpha, double lambda);

/// Leading pairs (alpha, lambda) removed from spec, expressed through spec at
/// rotated arguments with weights +-e^{+-i pi alpha}/(2 pi i).
SplitResult reduce_akr(const HFunctionSpec& spec);

/// Spec with leading (2 alpha, 2 lambda) and trailing (alpha, lambda) pairs;
/// the spec with both removed equals the e^{+-i pi alpha}-weighted sum.
SplitResult reduce_new(const HFunctionSpec& spec);

struct SplitEvaluation {
  Complex lhs;
  Complex rhs;
  double scale = 0.0;  // max(|lhs|, sum |weight_t H_t|)
  double rel_discrepancy() const { return scale > 0.0 ? std::abs(lhs - rhs) / scale : std::abs(lhs - rhs); }
};

SplitEvaluation evaluate_split(const SplitResult& split, const Argument& z, const EvalOptions& options = {});

enum class FormulaTag { ExpNeg, Expm1OverZ, Expm1MinusZOverZ2, CoshSqrt, SinhSqrtOverSqrt };

std::string_view formula_name(FormulaTag tag) noexcept;

/// Registry entry: H(pattern, w) == f(z) with w = z (sign +1) or w = -z (sign -1).
struct ClosedForm {
  std::string name;
  HFunctionSpec pattern;
  int argument_sign = 1;
  FormulaTag formula = FormulaTag::ExpNeg;
  std::string domain;

  /// The elementary function of z.
  Complex formula_value(Complex z) const;
  /// The H-function value at argument w, through the formula.
  Complex evaluate(const Argument& w) const { return formula_value(double(argument_sign) * w.value()); }
};

const std::vector<ClosedForm>& closed_form_registry();

/// Exact structural lookup (counts and parameters within 1e-12).
std::optional<ClosedForm> match_closed_form(const HFunctionSpec& spec);

}  // namespace hfun
