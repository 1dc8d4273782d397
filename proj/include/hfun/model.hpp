#pragma once

#include <cstdint>
#include <limits>
#include <numbers>
#include <vector>

#include "hfun/result.hpp"
#include "hfun/special.hpp"

namespace hfun {

/// A point on the Riemann surface of log: the argument of an H-function.
///
/// The split identities rotate arguments by e^{-+i pi lambda}; those phases must
/// accumulate without being reduced to the principal branch, so the argument is
/// stored as its logarithm. Plain complex values enter through from_value(),
/// which picks the principal branch.
class Argument {
public:
  static Argument from_value(Complex z);
  static Argument from_log(Complex log_z) { return Argument(log_z); }
  static Argument polar(double modulus, double phase);

  bool is_zero() const noexcept { return log_.real() == -std::numeric_limits<double>::infinity(); }
  Complex log() const noexcept { return log_; }
  double modulus() const noexcept;
  double phase() const noexcept { return log_.imag(); }
  Complex value() const noexcept;

  /// e^{i theta} * z, keeping theta on the surface.
  Argument rotated(double theta) const;
  /// z^k taken as exp(k log z).
  Argument power(double k) const;
  Argument scaled(double factor) const;

private:
  explicit Argument(Complex log_z) : log_(log_z) {}
  Complex log_;
};

struct ParamPair {
  Complex coeff;       // a_j or b_j
  double scale = 1.0;  // A_j or B_j, positive

  friend bool operator==(const ParamPair&, const ParamPair&) = default;
};

/// H^{m,n}_{p,q} parameter set; p = upper.size(), q = lower.size().
///
/// The first n upper pairs enter as Gamma(1 - a - A s) and the first m lower
/// pairs as Gamma(b + B s) in the numerator of the Mellin-Barnes integrand; the
/// remaining pairs enter the denominator. Order inside each group is free,
/// order across the group boundary is not.
struct HFunctionSpec {
  int m = 0;
  int n = 0;
  std::vector<ParamPair> upper;
  std::vector<ParamPair> lower;

  int p() const noexcept { return static_cast<int>(upper.size()); }
  int q() const noexcept { return static_cast<int>(lower.size()); }

  friend bool operator==(const HFunctionSpec&, const HFunctionSpec&) = default;
};

enum class DomainClass { AllNonzeroZ, DiskInterior, DiskExterior, Empty };

struct ConvergenceInfo {
  double delta = 0.0;  // sum B_j - sum A_j
  double big_d = 1.0;  // prod A_j^A_j / prod B_j^B_j
  DomainClass domain_class = DomainClass::Empty;

  /// |z|-tests for the two residue series.
  bool left_series_valid(const Argument& z) const noexcept;
  bool right_series_valid(const Argument& z) const noexcept;
};

inline constexpr double kDeltaZeroTolerance = 1e-12;
inline constexpr double kPoleSeparationTolerance = 1e-10;
inline constexpr int kPoleCheckHorizon = 50;

/// Checks structure, scale positivity and left/right pole separation, and
/// classifies the residue-series domain. Throws Error(InvalidSpec).
ConvergenceInfo validate(const HFunctionSpec& spec);

struct PFQSpec {
  std::vector<Complex> upper;
  std::vector<Complex> lower;
};

/// pFq(z) == prefactor * H(spec, e^{i pi} z).
struct PfqBridge {
  Complex prefactor;
  HFunctionSpec spec;

  Argument argument(Complex z) const { return Argument::from_value(z).rotated(std::numbers::pi); }
};

PfqBridge pfq_to_h(const PFQSpec& pfq);

/// Multiplies every scale by k. Contract: H(spec, z) == k * H(result, z^k);
/// the caller applies the factor k and Argument::power(k).
HFunctionSpec power_rescale(const HFunctionSpec& spec, double k);

struct PfqOptions {
  double tol = 1e-15;
  std::int64_t max_terms = 1'000'000;
};

/// Partial sums of the generalized hypergeometric series.
EvalResult pfq_eval(const PFQSpec& pfq, Complex z, const PfqOptions& options = {});

}  // namespace hfun
