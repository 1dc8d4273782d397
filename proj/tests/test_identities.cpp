#include <cmath>
#include <fstream>
#include <numbers>

#include <doctest.h>
#include <json.hpp>

#include "hfun/identities.hpp"
#include "hfun/json_io.hpp"
#include "test_util.hpp"

using namespace hfun;
using std::numbers::pi;

namespace {

const Complex kI{0.0, 1.0};

HFunctionSpec exp_neg() { return {1, 0, {}, {{0.0, 1.0}}}; }
HFunctionSpec cosh_spec() { return {1, 1, {{0.0, 1.0}}, {{0.0, 1.0}, {0.0, 2.0}}}; }

double worst_discrepancy(const SplitResult& split, std::initializer_list<Argument> points) {
  double worst = 0.0;
  for (const auto& z : points) worst = std::max(worst, evaluate_split(split, z).rel_discrepancy());
  return worst;
}

}  // namespace

TEST_SUITE("identities") {

TEST_CASE("split_akr weights and phases") {
  auto split = split_akr(exp_neg(), 0.5, 1.0 / 6.0);
  REQUIRE(split.terms.size() == 2);
  CHECK(split.source.p() == 1);
  CHECK(split.source.q() == 2);
  CHECK(split.source.upper.back() == ParamPair{0.5, 1.0 / 6.0});
  CHECK(split.source.lower.back() == ParamPair{0.5, 1.0 / 6.0});
  CHECK(split.source.m == 1);
  CHECK(split.source.n == 0);
  // e^{i pi/2} / (2 pi i) = 1 / (2 pi)
  CHECK(std::abs(split.terms[0].weight - 1.0 / (2 * pi)) < 1e-16);
  CHECK(std::abs(split.terms[1].weight - 1.0 / (2 * pi)) < 1e-16);
  CHECK(split.terms[0].phase == doctest::Approx(-pi / 6));
  CHECK(split.terms[1].phase == doctest::Approx(pi / 6));
  CHECK(split.terms[0].spec == exp_neg());

  auto trivial = split_akr(exp_neg(), 0.0, 1.0);
  CHECK(std::abs(trivial.terms[0].weight - 1.0 / (2 * pi * kI)) < 1e-16);
  CHECK(std::abs(trivial.terms[1].weight + 1.0 / (2 * pi * kI)) < 1e-16);
  CHECK(std::abs(trivial.terms[0].argument_factor() - Complex(-1.0)) < 1e-15);
  CHECK(std::abs(trivial.terms[1].argument_factor() - Complex(-1.0)) < 1e-15);
}

TEST_CASE("split_akr holds numerically") {
  auto split = split_akr(exp_neg(), 0.5, 1.0 / 6.0);
  CHECK(worst_discrepancy(split, {Argument::from_value(0.4), Argument::from_value(1.7),
                                  Argument::from_value(3.0), Argument::from_value({1.0, 0.5})}) < 1e-7);
  auto complex_alpha = split_akr(cosh_spec(), {0.3, 0.2}, 0.7);
  CHECK(worst_discrepancy(complex_alpha, {Argument::from_value(0.6), Argument::from_value(2.2)}) < 1e-7);
}

TEST_CASE("split_new on the cosh and sinh specs") {
  auto split = split_new(cosh_spec(), 0.0, 1.0);
  HFunctionSpec doubled{1, 1, {{0.0, 2.0}}, {{0.0, 2.0}, {0.0, 2.0}}};
  REQUIRE(split.terms.size() == 2);
  for (const auto& t : split.terms) {
    CHECK(t.spec == doubled);
    CHECK(std::abs(t.weight - 1.0) < 1e-16);
  }
  CHECK(split.terms[0].phase == doctest::Approx(-pi));
  CHECK(split.terms[1].phase == doctest::Approx(pi));
  // H(cosh spec, -x^2) = cosh(x)
  for (double x : {0.3, 1.0, 1.9}) {
    Argument w = Argument::polar(x * x, pi);
    auto e = evaluate_split(split, w);
    CHECK(e.rel_discrepancy() < 1e-7);
    CHECK(test::rel_err(e.lhs, std::cosh(x)) < 1e-9);
  }

  HFunctionSpec sinh_spec{1, 1, {{0.0, 1.0}}, {{0.0, 1.0}, {-1.0, 2.0}}};
  auto s = split_new(sinh_spec, 0.0, 1.0);
  HFunctionSpec sinh_doubled{1, 1, {{0.0, 2.0}}, {{0.0, 2.0}, {-1.0, 2.0}}};
  CHECK(s.terms[0].spec == sinh_doubled);
  CHECK(worst_discrepancy(s, {Argument::polar(0.5, pi), Argument::polar(2.0, pi)}) < 1e-7);
}

TEST_CASE("split_new checks the leading pairs") {
  auto structure = test::code(ErrorCode::Structure);
  CHECK(test::error_code([] { split_new(cosh_spec(), 0.5, 1.0); }) == structure);
  CHECK(test::error_code([] { split_new(cosh_spec(), 0.0, 2.0); }) == structure);
  CHECK(test::error_code([] { split_new(exp_neg(), 0.0, 1.0); }) == structure);
  try {
    split_new(cosh_spec(), 0.5, 1.0);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("upper slot 1 is (0, 1), expected (0.5, 1)") != std::string::npos);
  }
  CHECK(test::error_code([] { split_new(cosh_spec(), 0.0, 0.0); }) == test::code(ErrorCode::InvalidSpec));
  CHECK(test::error_code([] { split_akr(exp_neg(), 0.0, -1.0); }) == test::code(ErrorCode::InvalidSpec));
}

TEST_CASE("reduce_akr") {
  const ParamPair pair{0.5, 1.0 / 6.0};
  auto spec = prepend_pair(exp_neg(), pair);
  CHECK(spec.m == 2);
  CHECK(spec.n == 1);
  auto reduced = reduce_akr(spec);
  CHECK(reduced.source == exp_neg());
  for (const auto& t : reduced.terms) CHECK(t.spec == spec);
  CHECK(worst_discrepancy(reduced, {Argument::from_value(0.5), Argument::from_value(2.5)}) < 1e-7);

  // alpha = 0, lambda = 1: equal terms with opposite weights
  auto cancelling = reduce_akr(prepend_pair(exp_neg(), {0.0, 1.0}));
  CHECK(std::abs(cancelling.terms[0].weight + cancelling.terms[1].weight) < 1e-16);
  CHECK(std::abs(cancelling.terms[0].weight - 1.0 / (2 * pi * kI)) < 1e-16);
  CHECK(std::abs(cancelling.terms[0].argument_factor() - cancelling.terms[1].argument_factor()) < 1e-15);

  HFunctionSpec mismatched{1, 1, {{0.5, 1.0}}, {{0.0, 1.0}, {0.0, 2.0}}};
  CHECK(test::error_code([&] { reduce_akr(mismatched); }) == test::code(ErrorCode::Structure));
  CHECK(test::error_code([] { reduce_akr(exp_neg()); }) == test::code(ErrorCode::Structure));
}

TEST_CASE("reduce_new inverts split_new") {
  const ParamPair pair{0.0, 1.0};
  const ParamPair doubled{0.0, 2.0};
  HFunctionSpec base = exp_neg();
  auto split = split_new(prepend_pair(base, pair), pair.coeff, pair.scale);
  CHECK(split.terms[0].spec == prepend_pair(base, doubled));

  auto reduced = reduce_new(append_pair(split.terms[0].spec, pair));
  CHECK(reduced.source == base);
  for (const auto& t : reduced.terms) {
    CHECK(t.spec == append_pair(prepend_pair(base, doubled), pair));
    CHECK(std::abs(t.weight - 1.0) < 1e-16);
    CHECK(std::abs(t.argument_factor() - Complex(-1.0)) < 1e-15);
  }
  CHECK(worst_discrepancy(reduced, {Argument::from_value(0.5), Argument::from_value(1.5)}) < 1e-7);
  CHECK(test::error_code([] { reduce_new(cosh_spec()); }) == test::code(ErrorCode::Structure));
}

TEST_CASE("phase unitarity") {
  std::vector<SplitResult> splits{split_akr(cosh_spec(), {0.1, 0.4}, 0.3), split_new(cosh_spec(), 0.0, 1.0),
                                  reduce_akr(prepend_pair(exp_neg(), {0.2, 0.9}))};
  for (const auto& s : splits) {
    for (const auto& t : s.terms) {
      CHECK(std::abs(std::abs(t.argument_factor()) - 1.0) < 1e-15);
      CHECK(std::abs(t.weight) > 0.0);
    }
  }
}

TEST_CASE("closed-form registry") {
  auto m = match_closed_form(exp_neg());
  REQUIRE(m);
  CHECK(m->formula == FormulaTag::ExpNeg);

  HFunctionSpec expm1{1, 1, {{0.0, 1.0}}, {{0.0, 1.0}, {-1.0, 1.0}}};
  m = match_closed_form(expm1);
  REQUIRE(m);
  CHECK(m->formula == FormulaTag::Expm1OverZ);
  CHECK(m->argument_sign == -1);

  m = match_closed_form(cosh_spec());
  REQUIRE(m);
  CHECK(m->formula == FormulaTag::CoshSqrt);
  CHECK(test::rel_err(m->evaluate(Argument::polar(4.0, pi)), std::cosh(2.0)) < 1e-15);

  HFunctionSpec near = cosh_spec();
  near.lower[1].scale += 1e-9;
  CHECK_FALSE(match_closed_form(near));
  CHECK_FALSE(match_closed_form({1, 0, {}, {{0.5, 1.0}}}));

  for (const auto& entry : closed_form_registry()) {
    CAPTURE(entry.name);
    for (double z : {0.2, 1.1, 2.9}) {
      Argument w = Argument::from_value(z).rotated(entry.argument_sign < 0 ? pi : 0.0);
      CHECK(test::rel_err(eval(entry.pattern, w).value, entry.evaluate(w)) < 1e-8);
    }
  }
}

TEST_CASE("registry matches the shipped JSON") {
  std::ifstream in(HFUN_DATA_DIR "/closed_forms.json");
  REQUIRE(in);
  auto doc = nlohmann::json::parse(in);
  const auto& registry = closed_form_registry();
  REQUIRE(doc.at("closed_forms").size() == registry.size());
  for (std::size_t i = 0; i < registry.size(); ++i) {
    const auto& node = doc["closed_forms"][i];
    CHECK(node.at("name") == registry[i].name);
    CHECK(spec_from_json(node.at("pattern")) == registry[i].pattern);
    CHECK(node.at("formula") == std::string(formula_name(registry[i].formula)));
    CHECK(node.at("argument") == (registry[i].argument_sign > 0 ? "z" : "-z"));
    CHECK(node.at("domain") == registry[i].domain);
  }
}

}
