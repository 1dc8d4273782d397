#pragma once

#include <optional>
#include <string>

#include "hfun/eval.hpp"
#include "hfun/model.hpp"

namespace hfun {

/// sum_n x^{alpha n} beta^n / Gamma(gamma n + delta + 1).
///
/// gamma may be any positive real for the direct and H paths; the pFq path
/// needs an integer.
struct MLSumSpec {
  double alpha = 1.0;
  double beta = 1.0;
  double gamma = 1.0;
  double delta = 0.0;
  double x = 1.0;
};

/// Throws Error(InvalidSpec) unless alpha >= 0, gamma > 0, delta >= 0, x > 0.
void validate(const MLSumSpec& spec);

/// sum_n w^n / Gamma(gamma n + delta + 1) for a complex w.
EvalResult ml_series(Complex w, double gamma, double delta, double tol = 1e-15,
                     std::int64_t max_terms = kDefaultMaxTerms);

EvalResult ml_direct(const MLSumSpec& spec, double tol = 1e-15);
EvalResult ml_via_pfq(const MLSumSpec& spec, double tol = 1e-15);
EvalResult ml_via_h(const MLSumSpec& spec, double tol = 1e-12);

/// H^{1,1}_{1,2}[. | (0,1); (0,1), (-delta, gamma)].
HFunctionSpec ml_h_spec(double gamma, double delta);

struct PathOutcome {
  std::optional<EvalResult> result;
  std::string error;  // what() of the failure when result is empty
};

struct TripleResult {
  PathOutcome direct;
  PathOutcome via_pfq;
  PathOutcome via_h;
  /// max |v_i - v_j| over successful pairs, divided by the largest |v|.
  double max_pairwise_discrepancy = 0.0;
};

/// Throws Error(Unevaluable) when fewer than two paths succeed, Error(InvalidSpec)
/// on an invalid spec.
TripleResult ml_triple(const MLSumSpec& spec, double tol = 1e-12);

}  // namespace hfun
