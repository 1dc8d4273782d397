#include "hfun/catalog.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "hfun/error.hpp"
#include "hfun/json_io.hpp"
#include "hfun/mlsum.hpp"

namespace hfun {
namespace {

using nlohmann::json;

double real_field(const json& node, const char* name, double fallback) {
  return node.contains(name) ? real_constant(node[name]) : fallback;
}

ArgumentMap parse_arg(const json& node) {
  if (!node.is_object()) throw Error(ErrorCode::Parse, "arg must be an object");
  ArgumentMap arg;
  arg.scale = real_field(node, "scale", 1.0);
  arg.power = real_field(node, "power", 1.0);
  arg.phase = real_field(node, "phase", 0.0);
  if (!(arg.scale > 0.0)) throw Error(ErrorCode::Parse, "arg scale must be positive");
  return arg;
}

std::vector<Complex> complex_list(const json& node, const char* name) {
  std::vector<Complex> out;
  if (!node.contains(name)) return out;
  if (!node[name].is_array()) throw Error(ErrorCode::Parse, std::string(name) + " must be an array");
  for (const auto& item : node[name]) out.push_back(complex_constant(item));
  return out;
}

ElementaryFn parse_fn(const std::string& name) {
  if (name == "one") return ElementaryFn::One;
  if (name == "exp") return ElementaryFn::Exp;
  if (name == "cos") return ElementaryFn::Cos;
  if (name == "sin") return ElementaryFn::Sin;
  if (name == "cosh") return ElementaryFn::Cosh;
  if (name == "sinh") return ElementaryFn::Sinh;
  throw Error(ErrorCode::Parse, "unknown elementary function '" + name + "'");
}

Kernel parse_kernel(const json& node) {
  if (!node.is_object() || !node.contains("type")) throw Error(ErrorCode::Parse, "kernel needs a type");
  const std::string type = node["type"].get<std::string>();
  Kernel k;
  if (type == "H") {
    k.kind = KernelKind::H;
    k.spec = spec_from_json(node.at("spec"));
    const std::string method = node.value("method", "auto");
    if (method == "series") {
      k.method = EvalMethod::Series;
    } else if (method == "mb") {
      k.method = EvalMethod::MellinBarnes;
    } else if (method != "auto") {
      throw Error(ErrorCode::Parse, "unknown method '" + method + "'");
    }
  } else if (type == "pfq") {
    k.kind = KernelKind::Pfq;
    k.pfq = {complex_list(node, "upper"), complex_list(node, "lower")};
  } else if (type == "ml") {
    k.kind = KernelKind::MittagLeffler;
    k.ml_gamma = real_field(node, "gamma", 1.0);
    k.ml_delta = real_field(node, "delta", 0.0);
  } else if (type == "trig_series") {
    k.kind = KernelKind::TrigSeries;
    k.trig_angle = real_field(node, "angle", 0.0);
  } else if (type == "elementary") {
    k.kind = KernelKind::Elementary;
    k.fn = parse_fn(node.value("fn", "one"));
    k.shift = real_field(node, "shift", 0.0);
  } else {
    throw Error(ErrorCode::Parse, "unknown kernel type '" + type + "'");
  }
  return k;
}

Side parse_side(const json& node) {
  Side side;
  side.label = node.value("label", "");
  if (!node.contains("terms") || !node["terms"].is_array() || node["terms"].empty()) {
    throw Error(ErrorCode::Parse, "side '" + side.label + "' needs a nonempty terms array");
  }
  for (const auto& t : node["terms"]) {
    Term term;
    if (t.contains("coeff")) term.coeff = complex_constant(t["coeff"]);
    term.exp_rate = real_field(t, "exp_rate", 0.0);
    term.x_power = real_field(t, "x_power", 0.0);
    term.kernel = parse_kernel(t.value("kernel", json{{"type", "elementary"}}));
    if (t.contains("arg")) term.arg = parse_arg(t["arg"]);
    side.terms.push_back(std::move(term));
  }
  return side;
}

}  // namespace

Argument ArgumentMap::at(double x) const {
  return Argument::polar(scale * std::pow(x, power), std::numbers::pi * phase);
}

Catalog parse_catalog(const json& node) {
  try {
    Catalog catalog;
    catalog.version = node.at("version").get<int>();
    for (const auto& f : node.at("fixtures")) {
      Fixture fixture;
      fixture.name = f.at("name").get<std::string>();
      fixture.note = f.value("note", "");
      fixture.x_max = real_field(f, "x_max", 2.5);
      for (const auto& s : f.at("sides")) fixture.sides.push_back(parse_side(s));
      fixture.closed_form = parse_side(f.at("closed_form"));
      catalog.fixtures.push_back(std::move(fixture));
    }
    return catalog;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
}

Catalog parse_catalog_text(std::string_view text) {
  json node;
  try {
    node = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
  return parse_catalog(node);
}

Catalog load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_catalog_text(buffer.str());
}

const Catalog& application_catalog() {
  static const Catalog catalog = parse_catalog_text(builtin_catalog_text());
  return catalog;
}

namespace {

Complex trig_series(Complex w, double angle) {
  Complex term = 1.0;  // w^n / n!
  Complex sum = 1.0;
  int quiet = 0;
  for (int n = 1; n < 10000; ++n) {
    term *= w / double(n);
    const Complex contribution = term * std::cos(double(n) * std::numbers::pi * angle);
    sum += contribution;
    if (double(n) > std::abs(w) && std::abs(term) < 1e-17 * std::max(std::abs(sum), 1e-300)) {
      if (++quiet >= kSeriesStopWindow) return sum;
    } else {
      quiet = 0;
    }
  }
  throw Error(ErrorCode::NoConvergence, "trig series did not converge");
}

Complex elementary(ElementaryFn fn, Complex w) {
  switch (fn) {
    case ElementaryFn::One: return 1.0;
    case ElementaryFn::Exp: return std::exp(w);
    case ElementaryFn::Cos: return std::cos(w);
    case ElementaryFn::Sin: return std::sin(w);
    case ElementaryFn::Cosh: return std::cosh(w);
    case ElementaryFn::Sinh: return std::sinh(w);
  }
  return 0.0;
}

Complex kernel_value(const Kernel& k, const Argument& w, const EvalOptions& options) {
  switch (k.kind) {
    case KernelKind::H: {
      if (w.is_zero()) return limit_at_zero(k.spec);
      EvalOptions opts = options;
      opts.method = k.method;
      return eval(k.spec, w, opts).value;
    }
    case KernelKind::Pfq:
      return pfq_eval(k.pfq, w.value()).value;
    case KernelKind::MittagLeffler:
      return ml_series(w.value(), k.ml_gamma, k.ml_delta).value;
    case KernelKind::TrigSeries:
      return trig_series(w.value(), k.trig_angle);
    case KernelKind::Elementary:
      return elementary(k.fn, w.value() + k.shift);
  }
  return 0.0;
}

}  // namespace

SideValue evaluate_term(const Term& term, double x, const EvalOptions& options) {
  double factor = std::exp(term.exp_rate * x);
  if (term.x_power != 0.0) {
    if (x == 0.0 && term.x_power < 0.0) throw Error(ErrorCode::Domain, "negative power of x at x = 0");
    factor *= std::pow(x, term.x_power);
  }
  const Complex value = term.coeff * factor * kernel_value(term.kernel, term.arg.at(x), options);
  return {value, std::abs(value)};
}

SideValue evaluate_side(const Side& side, double x, const EvalOptions& options) {
  SideValue out{0.0, 0.0};
  for (const auto& term : side.terms) {
    const SideValue v = evaluate_term(term, x, options);
    out.value += v.value;
    out.magnitude += v.magnitude;
  }
  return out;
}

}  // namespace hfun
