#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hfun/eval.hpp"
#include "hfun/model.hpp"

namespace hfun {

/// w(x) = scale * x^power * e^{i pi phase}, kept on the log surface so that
/// phases outside (-1, 1] survive.
struct ArgumentMap {
  double scale = 1.0;
  double power = 1.0;
  double phase = 0.0;  // in units of pi

  Argument at(double x) const;
};

enum class KernelKind { H, Pfq, MittagLeffler, TrigSeries, Elementary };
enum class ElementaryFn { One, Exp, Cos, Sin, Cosh, Sinh };

struct Kernel {
  KernelKind kind = KernelKind::Elementary;
  HFunctionSpec spec;                   // H
  EvalMethod method = EvalMethod::Auto;  // H
  PFQSpec pfq;                          // Pfq
  double ml_gamma = 1.0;                // MittagLeffler: sum w^n / Gamma(gamma n + delta + 1)
  double ml_delta = 0.0;
  double trig_angle = 0.0;              // TrigSeries: sum cos(n pi angle) w^n / n!
  ElementaryFn fn = ElementaryFn::One;  // Elementary: fn(w + shift)
  double shift = 0.0;
};

/// coeff * e^{exp_rate x} * x^{x_power} * kernel(arg(x))
struct Term {
  Complex coeff = 1.0;
  double exp_rate = 0.0;
  double x_power = 0.0;
  Kernel kernel;
  ArgumentMap arg;
};

struct Side {
  std::string label;
  std::vector<Term> terms;
};

/// A chain of equal expressions in x, every one checked against the closed form.
struct Fixture {
  std::string name;
  std::string note;
  double x_max = 2.5;
  std::vector<Side> sides;
  Side closed_form;
};

struct Catalog {
  int version = 0;
  std::vector<Fixture> fixtures;
};

Catalog parse_catalog(const nlohmann::json& node);
Catalog parse_catalog_text(std::string_view text);
Catalog load_catalog(const std::string& path);

/// The catalog shipped in data/catalog.json, compiled in.
std::string_view builtin_catalog_text();
const Catalog& application_catalog();

struct SideValue {
  Complex value;
  double magnitude = 0.0;  // sum of |term| for the discrepancy scale
};

SideValue evaluate_term(const Term& term, double x, const EvalOptions& options = {});
SideValue evaluate_side(const Side& side, double x, const EvalOptions& options = {});

}  // namespace hfun
