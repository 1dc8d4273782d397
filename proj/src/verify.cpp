#include "hfun/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <random>

#include "hfun/error.hpp"
#include "hfun/identities.hpp"
#include "hfun/json_io.hpp"
#include "hfun/mlsum.hpp"

namespace hfun {
namespace {

constexpr double kPi = std::numbers::pi;

double relative(Complex lhs, Complex rhs, double scale) {
  const double diff = std::abs(lhs - rhs);
  return scale > 0.0 ? diff / scale : diff;
}

// Runs body and turns a thrown Error into a failed report.
IdentityReport make_report(std::string name, double threshold, const std::function<void(IdentityReport&)>& body) {
  IdentityReport report;
  report.identity_name = std::move(name);
  report.threshold = threshold;
  try {
    body(report);
  } catch (const std::exception& e) {
    report.error = e.what();
  }
  finalize(report);
  return report;
}

double distance_to_nonpositive_integer(Complex z) {
  const double re = std::min(std::round(z.real()), 0.0);
  return std::abs(z - re);
}

Complex random_point(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u(-radius, radius);
  const double re = u(rng);
  return {re, u(rng)};
}

}  // namespace

Suite parse_suite(std::string_view name) {
  if (name == "gamma") return Suite::Gamma;
  if (name == "splits") return Suite::Splits;
  if (name == "mlsum") return Suite::MlSum;
  if (name == "catalog") return Suite::Catalog;
  if (name == "all") return Suite::All;
  throw Error(ErrorCode::Parse, "unknown suite '" + std::string(name) + "'");
}

void finalize(IdentityReport& report) {
  double worst = 0.0;
  for (const auto& point : report.grid) {
    const double r = point.rel_discrepancy;
    worst = std::isnan(r) ? std::numeric_limits<double>::infinity() : std::max(worst, r);
  }
  report.max_rel_discrepancy = worst;
  report.pass = report.error.empty() && !report.grid.empty() && worst < report.threshold;
}

bool all_pass(const std::vector<IdentityReport>& reports) {
  // an empty run verified nothing
  return !reports.empty() && std::all_of(reports.begin(), reports.end(), [](const IdentityReport& r) { return r.pass; });
}

std::vector<IdentityReport> gamma_suite(double threshold) {
  std::vector<IdentityReport> out;
  const double tol = std::min(threshold, kGammaTolerance);

  out.push_back(make_report("gamma/reflection", tol, [](IdentityReport& r) {
    std::mt19937_64 rng(1001);
    while (r.grid.size() < 1000) {
      const Complex z = random_point(rng, 10.0);
      // both Gamma(z) and Gamma(1 - z) must stay off their poles
      if (std::abs(z - std::round(z.real())) < 0.1) continue;
      const Complex lhs = hfun::gamma(z).value * hfun::gamma(1.0 - z).value;
      const Complex rhs = kPi / std::sin(kPi * z);
      r.grid.push_back({z, lhs, rhs, relative(lhs, rhs, std::abs(rhs))});
    }
  }));

  for (unsigned k : {2u, 3u, 4u}) {
    out.push_back(make_report("gamma/multiplication-k" + std::to_string(k), tol, [k](IdentityReport& r) {
      std::mt19937_64 rng(2000 + k);
      while (r.grid.size() < 1000) {
        const Complex z = random_point(rng, 8.0);
        bool near_pole = distance_to_nonpositive_integer(double(k) * z) < 0.1;
        for (unsigned j = 0; j < k; ++j) near_pole = near_pole || distance_to_nonpositive_integer(z + double(j) / k) < 0.1;
        if (near_pole) continue;
        Complex lhs = 1.0;
        for (unsigned j = 0; j < k; ++j) lhs *= hfun::gamma(z + double(j) / k).value;
        const Complex rhs = gamma_multiplication_factor(z, k);
        r.grid.push_back({z, lhs, rhs, relative(lhs, rhs, std::abs(rhs))});
      }
    }));
  }

  // Gamma(t) Gamma(1-t) = Gamma(2t) Gamma(1-2t) (e^{i pi t} + e^{-i pi t}), t = alpha + lambda s
  out.push_back(make_report("gamma/duplication-chain", std::min(threshold, kDuplicationTolerance), [](IdentityReport& r) {
    std::mt19937_64 rng(3001);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_real_distribution<double> scale(0.2, 2.0);
    while (r.grid.size() < 500) {
      const Complex alpha{u(rng), 0.3 * u(rng)};
      const double lambda = scale(rng);
      const Complex s = 3.0 * Complex{u(rng), u(rng)};
      const Complex t = alpha + lambda * s;
      const Complex t2 = 2.0 * t;
      if (std::abs(t2 - std::round(t2.real())) < 0.05) continue;
      const Complex lhs = hfun::gamma(t).value * hfun::gamma(1.0 - t).value;
      const Complex rhs = hfun::gamma(t2).value * hfun::gamma(1.0 - t2).value *
                          (std::exp(Complex{0.0, kPi} * t) + std::exp(Complex{0.0, -kPi} * t));
      r.grid.push_back({s, lhs, rhs, relative(lhs, rhs, std::abs(lhs))});
    }
  }));

  out.push_back(make_report("gamma/pochhammer-recurrence", tol, [](IdentityReport& r) {
    std::mt19937_64 rng(4001);
    for (int i = 0; i < 200; ++i) {
      const Complex a = random_point(rng, 5.0);
      const std::uint64_t n = rng() % 30;
      const Complex lhs = pochhammer(a, n + 1);
      const Complex rhs = pochhammer(a, n) * (a + double(n));
      r.grid.push_back({a, lhs, rhs, relative(lhs, rhs, std::abs(lhs))});
    }
  }));
  return out;
}

namespace {

// Arguments for real-line fixtures: -scale x^power at x = 2.5 k / 10.
std::vector<Argument> negative_real_grid(double scale, double power) {
  std::vector<Argument> out;
  for (int k = 1; k <= 10; ++k) out.push_back(Argument::polar(scale * std::pow(0.25 * k, power), kPi));
  return out;
}

void fill_split_grid(IdentityReport& r, const SplitResult& split, const std::vector<Argument>& arguments) {
  for (const auto& z : arguments) {
    const SplitEvaluation e = evaluate_split(split, z);
    r.grid.push_back({z.value(), e.lhs, e.rhs, e.rel_discrepancy()});
  }
}

HFunctionSpec random_base(std::mt19937_64& rng, bool need_left_family) {
  std::uniform_real_distribution<double> coeff(-0.5, 0.8);
  std::uniform_real_distribution<double> scale(0.5, 1.5);
  for (;;) {
    HFunctionSpec spec;
    spec.m = need_left_family ? 1 : int(rng() % 2);
    spec.n = int(rng() % 2);
    const int extra_lower = int(rng() % 2);
    const int extra_upper = int(rng() % 2);
    for (int j = 0; j < spec.m + extra_lower; ++j) spec.lower.push_back({coeff(rng), scale(rng)});
    for (int j = 0; j < spec.n + extra_upper; ++j) spec.upper.push_back({coeff(rng), scale(rng)});
    if (spec.q() == 0) continue;
    double delta = 0.0;
    for (const auto& pair : spec.lower) delta += pair.scale;
    for (const auto& pair : spec.upper) delta -= pair.scale;
    if (delta >= 0.2) return spec;
  }
}

bool series_evaluable(const HFunctionSpec& spec) {
  try {
    EvalOptions options;
    options.method = EvalMethod::Series;
    eval(spec, Argument::polar(1.0, 0.3), options);
    return true;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

std::vector<RandomSplitCase> random_split_cases(std::string_view identity, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> alpha_re(-0.3, 0.6);
  std::uniform_real_distribution<double> alpha_im(-0.2, 0.2);
  std::uniform_real_distribution<double> lambda_dist(0.2, 0.8);
  std::uniform_real_distribution<double> radius(0.3, 2.0);
  std::uniform_real_distribution<double> angle(-0.5 * kPi, 0.5 * kPi);
  std::vector<RandomSplitCase> out;
  while (int(out.size()) < count) {
    const Complex alpha{alpha_re(rng), out.size() % 2 == 1 ? alpha_im(rng) : 0.0};
    const double lambda = lambda_dist(rng);
    const ParamPair pair{alpha, lambda};
    RandomSplitCase c;
    try {
      if (identity == "split_new") {
        c.split = split_new(prepend_pair(random_base(rng, false), pair), alpha, lambda);
      } else if (identity == "split_akr") {
        c.split = split_akr(random_base(rng, true), alpha, lambda);
      } else if (identity == "reduce_akr") {
        c.split = reduce_akr(prepend_pair(random_base(rng, true), pair));
      } else if (identity == "reduce_new") {
        c.split = reduce_new(append_pair(prepend_pair(random_base(rng, true), {2.0 * alpha, 2.0 * lambda}), pair));
      } else {
        throw Error(ErrorCode::Parse, "unknown identity '" + std::string(identity) + "'");
      }
    } catch (const Error& e) {
      if (e.code() == ErrorCode::Parse) throw;
      continue;
    }
    bool ok = series_evaluable(c.split.source);
    for (const auto& term : c.split.terms) ok = ok && series_evaluable(term.spec);
    if (!ok) continue;
    for (int k = 0; k < 10; ++k) {
      const double r = radius(rng);
      c.arguments.push_back(Argument::polar(r, angle(rng)));
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<IdentityReport> splits_suite(double threshold) {
  std::vector<IdentityReport> out;
  const double tol = std::min(threshold, kIdentityTolerance);
  const ParamPair p01{0.0, 1.0};

  for (int alpha : {2, 3}) {
    const std::string suffix = "-alpha" + std::to_string(alpha);
    const HFunctionSpec cosh_spec{1, 1, {p01}, {p01, {0.0, 2.0}}};
    const HFunctionSpec sinh_spec{1, 1, {p01}, {p01, {-1.0, 2.0}}};
    out.push_back(make_report("split_new/cosh" + suffix, tol, [&](IdentityReport& r) {
      fill_split_grid(r, split_new(cosh_spec, 0.0, 1.0), negative_real_grid(1.0, alpha));
    }));
    out.push_back(make_report("split_new/sinh" + suffix, tol, [&](IdentityReport& r) {
      fill_split_grid(r, split_new(sinh_spec, 0.0, 1.0), negative_real_grid(1.0, alpha));
    }));
  }

  struct AkrFixture {
    const char* name;
    HFunctionSpec base;
    double alpha, lambda, scale;
  };
  const std::vector<AkrFixture> akr_fixtures = {
      {"hypnbai6-1", {1, 0, {}, {p01}}, 0.5, 1.0 / 6.0, std::sqrt(3.0)},
      {"hypnbai7-1", {1, 1, {p01}, {p01, {-1.0, 1.0}}}, 2.0 / 3.0, 1.0 / 6.0, std::sqrt(3.0)},
      {"hypnbai8-1", {1, 2, {p01, {-1.0, 1.0}}, {p01, {-1.0, 1.0}, {-2.0, 1.0}}}, 5.0 / 6.0, 1.0 / 6.0, std::sqrt(3.0)},
      {"nr1", {1, 0, {}, {p01}}, 0.5, 1.0 / 3.0, 1.0},
  };
  for (const auto& f : akr_fixtures) {
    out.push_back(make_report(std::string("split_akr/") + f.name, tol, [&](IdentityReport& r) {
      fill_split_grid(r, split_akr(f.base, f.alpha, f.lambda), negative_real_grid(f.scale, 1.0));
    }));
    out.push_back(make_report(std::string("reduce_akr/") + f.name, tol, [&](IdentityReport& r) {
      fill_split_grid(r, reduce_akr(prepend_pair(f.base, {f.alpha, f.lambda})), negative_real_grid(f.scale, 1.0));
    }));
  }
  out.push_back(make_report("reduce_new/exp-neg", tol, [&](IdentityReport& r) {
    const ParamPair pair{0.25, 1.0 / 3.0};
    const HFunctionSpec spec = append_pair(prepend_pair({1, 0, {}, {p01}}, {0.5, 2.0 / 3.0}), pair);
    fill_split_grid(r, reduce_new(spec), negative_real_grid(1.0, 1.0));
  }));

  const char* identities[] = {"split_new", "split_akr", "reduce_akr", "reduce_new"};
  for (std::uint64_t i = 0; i < 4; ++i) {
    const std::string identity = identities[i];
    std::vector<RandomSplitCase> cases;
    try {
      cases = random_split_cases(identity, 10, 5000 + i);
    } catch (const std::exception& e) {
      const std::string message = e.what();
      out.push_back(make_report(identity + "/random", tol, [&](IdentityReport&) {
        throw Error(ErrorCode::Unevaluable, message);
      }));
      continue;
    }
    for (std::size_t k = 0; k < cases.size(); ++k) {
      char name[64];
      std::snprintf(name, sizeof name, "%s/random-%02zu", identity.c_str(), k + 1);
      out.push_back(make_report(name, tol, [&](IdentityReport& r) {
        fill_split_grid(r, cases[k].split, cases[k].arguments);
      }));
    }
  }
  return out;
}

std::vector<IdentityReport> mlsum_suite(double threshold) {
  std::vector<IdentityReport> out;
  const double tol = std::min(threshold, kMlSumTolerance);
  for (int g = 1; g <= 4; ++g) {
    for (int d = 0; d <= 3; ++d) {
      const std::string name = "mlsum/gamma" + std::to_string(g) + "-delta" + std::to_string(d);
      out.push_back(make_report(name, tol, [&](IdentityReport& r) {
        for (double beta : {-1.0, 1.0}) {
          for (double alpha : {1.0, 2.0, 3.0}) {
            for (double x : {0.25, 1.0, 2.0}) {
              const TripleResult t = ml_triple({alpha, beta, double(g), double(d), x});
              const PathOutcome* paths[] = {&t.direct, &t.via_pfq, &t.via_h};
              std::vector<Complex> values;
              for (const auto* p : paths) {
                if (p->result) values.push_back(p->result->value);
              }
              r.grid.push_back({x, values.front(), values.back(), t.max_pairwise_discrepancy});
            }
          }
        }
      }));
    }
  }

  out.push_back(make_report("mlsum/exp-anchor", std::min(threshold, 1e-12), [](IdentityReport& r) {
    for (int k = 0; k <= 50; ++k) {
      const double x = 0.1 * k;
      const Complex lhs = ml_series(x, 1.0, 0.0).value;
      const Complex rhs = std::exp(x);
      r.grid.push_back({x, lhs, rhs, relative(lhs, rhs, std::abs(rhs))});
    }
  }));

  out.push_back(make_report("mlsum/cos-sweep", tol, [](IdentityReport& r) {
    for (int k = 1; k <= 30; ++k) {
      const double x = 0.1 * k;
      const TripleResult t = ml_triple({2.0, -1.0, 2.0, 0.0, x});
      const Complex rhs = std::cos(x);
      double worst = 0.0;
      Complex lhs = rhs;
      for (const auto* p : {&t.direct, &t.via_pfq, &t.via_h}) {
        if (!p->result) throw Error(ErrorCode::Unevaluable, p->error);
        const double rel = relative(p->result->value, rhs, std::max(std::abs(rhs), std::abs(p->result->value)));
        if (rel >= worst) {
          worst = rel;
          lhs = p->result->value;
        }
      }
      r.grid.push_back({x, lhs, rhs, worst});
    }
  }));

  // x -> ix turns the gamma = 2 sums into e^x cos x and x^{-1} e^x sin x
  out.push_back(make_report("mlsum/x-to-ix", std::min(threshold, kIdentityTolerance), [](IdentityReport& r) {
    for (int k = 1; k <= 20; ++k) {
      const double x = 2.5 * k / 20.0;
      const Complex ix{0.0, x};
      const Complex cos_side = std::exp(x) * ml_series(ix * ix, 2.0, 0.0).value;
      const Complex sin_side = std::exp(x) * ml_series(ix * ix, 2.0, 1.0).value;
      const double c = std::exp(x) * std::cos(x);
      const double s = std::exp(x) * std::sin(x) / x;
      r.grid.push_back({x, cos_side, c, relative(cos_side, c, std::max(std::abs(c), std::abs(cos_side)))});
      r.grid.push_back({x, sin_side, s, relative(sin_side, s, std::max(std::abs(s), std::abs(sin_side)))});
    }
  }));
  return out;
}

std::vector<IdentityReport> catalog_suite(const Catalog& catalog, double threshold) {
  std::vector<IdentityReport> out;
  const double tol = std::min(threshold, kIdentityTolerance);
  for (const auto& fixture : catalog.fixtures) {
    for (const auto& side : fixture.sides) {
      out.push_back(make_report("catalog/" + fixture.name + "/" + side.label, tol, [&](IdentityReport& r) {
        for (int i = 1; i <= 30; ++i) {
          const double x = fixture.x_max * i / 30.0;
          const SideValue closed = evaluate_side(fixture.closed_form, x);
          const SideValue value = evaluate_side(side, x);
          const double scale = std::max(closed.magnitude, value.magnitude);
          r.grid.push_back({x, closed.value, value.value, relative(closed.value, value.value, scale)});
        }
      }));
    }
  }
  return out;
}

std::vector<IdentityReport> registry_suite(double threshold) {
  std::vector<IdentityReport> out;
  const double tol = std::min(threshold, kRegistryTolerance);
  for (const auto& entry : closed_form_registry()) {
    out.push_back(make_report("registry/" + entry.name, tol, [&](IdentityReport& r) {
      for (int k = 1; k <= 50; ++k) {
        const double z = 3.0 * k / 50.0;
        const Argument w = Argument::polar(z, entry.argument_sign < 0 ? kPi : 0.0);
        const Complex lhs = entry.formula_value(z);
        const Complex rhs = eval(entry.pattern, w).value;
        r.grid.push_back({z, lhs, rhs, relative(lhs, rhs, std::max(std::abs(lhs), std::abs(rhs)))});
      }
    }));
  }
  return out;
}

std::vector<IdentityReport> oracle_suite(const Catalog& catalog, double threshold) {
  std::vector<IdentityReport> out;
  const double tol = std::min(threshold, kIdentityTolerance);
  // one report per distinct (spec, argument map)
  std::vector<std::pair<const Term*, std::string>> distinct;
  auto same = [](const Term& a, const Term& b) {
    return a.kernel.spec == b.kernel.spec && a.arg.scale == b.arg.scale && a.arg.power == b.arg.power &&
           a.arg.phase == b.arg.phase;
  };
  for (const auto& fixture : catalog.fixtures) {
    std::vector<const Side*> sides;
    for (const auto& side : fixture.sides) sides.push_back(&side);
    sides.push_back(&fixture.closed_form);
    for (const Side* side : sides) {
      for (std::size_t t = 0; t < side->terms.size(); ++t) {
        const Term& term = side->terms[t];
        if (term.kernel.kind != KernelKind::H) continue;
        const bool seen = std::any_of(distinct.begin(), distinct.end(),
                                      [&](const auto& entry) { return same(*entry.first, term); });
        if (seen) continue;
        distinct.emplace_back(&term, fixture.name + "/" + side->label + "/term" + std::to_string(t + 1));
      }
    }
  }
  for (const auto& [term, name] : distinct) {
    out.push_back(make_report("oracle/" + name, tol, [&](IdentityReport& r) {
      EvalOptions series;
      series.method = EvalMethod::Series;
      EvalOptions quadrature;
      quadrature.method = EvalMethod::MellinBarnes;
      std::string last_failure;
      for (int i = 1; i <= 20; ++i) {
        const Argument z = term->arg.at(2.5 * i / 20.0);
        try {
          const Complex lhs = eval(term->kernel.spec, z, series).value;
          const Complex rhs = eval(term->kernel.spec, z, quadrature).value;
          r.grid.push_back({z.value(), lhs, rhs, relative(lhs, rhs, std::max(std::abs(lhs), std::abs(rhs)))});
        } catch (const Error& e) {
          last_failure = e.what();  // outside the joint convergence region
        }
      }
      if (r.grid.empty()) throw Error(ErrorCode::Unevaluable, "no point where both evaluators converge: " + last_failure);
    }));
  }
  return out;
}

std::vector<IdentityReport> run_suite(Suite suite, const VerifyOptions& options) {
  const Catalog& catalog = options.catalog ? *options.catalog : application_catalog();
  const double th = options.threshold;
  std::vector<IdentityReport> out;
  auto add = [&](std::vector<IdentityReport> more) {
    for (auto& r : more) out.push_back(std::move(r));
  };
  const bool all = suite == Suite::All;
  if (all || suite == Suite::Gamma) add(gamma_suite(th));
  if (all || suite == Suite::Splits) add(splits_suite(th));
  if (all || suite == Suite::MlSum) add(mlsum_suite(th));
  if (all || suite == Suite::Catalog) {
    add(catalog_suite(catalog, th));
    add(registry_suite(th));
    add(oracle_suite(catalog, th));
  }
  std::sort(out.begin(), out.end(),
            [](const IdentityReport& a, const IdentityReport& b) { return a.identity_name < b.identity_name; });
  return out;
}

std::string reports_to_json(const std::vector<IdentityReport>& reports) {
  JsonWriter w;
  w.begin_object();
  w.key("reports").begin_array();
  for (const auto& r : reports) {
    w.begin_object();
    w.key("identity_name").value(r.identity_name);
    w.key("max_rel_discrepancy").value(r.max_rel_discrepancy);
    w.key("threshold").value(r.threshold);
    w.key("pass").value(r.pass);
    w.key("error");
    if (r.error.empty()) {
      w.null();
    } else {
      w.value(r.error);
    }
    w.key("grid").begin_array();
    for (const auto& p : r.grid) {
      w.begin_object();
      w.key("argument").value(p.argument);
      w.key("lhs").value(p.lhs);
      w.key("rhs").value(p.rhs);
      w.key("rel_discrepancy").value(p.rel_discrepancy);
      w.end_object();
    }
    w.end_array();
    w.end_object();
  }
  w.end_array();
  const auto passed = std::count_if(reports.begin(), reports.end(), [](const IdentityReport& r) { return r.pass; });
  w.key("summary").begin_object();
  w.key("total").value(std::int64_t(reports.size()));
  w.key("passed").value(std::int64_t(passed));
  w.key("all_pass").value(all_pass(reports));
  w.end_object();
  w.end_object();
  return w.str();
}

std::string reports_to_csv(const std::vector<IdentityReport>& reports) {
  std::string out = "identity_name,max_rel_discrepancy,pass\n";
  for (const auto& r : reports) {
    const std::string value = std::isinf(r.max_rel_discrepancy) ? "inf" : format_number(r.max_rel_discrepancy);
    out += r.identity_name + "," + value + "," + (r.pass ? "true" : "false") + "\n";
  }
  return out;
}

}  // namespace hfun
