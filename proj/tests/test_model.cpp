#include <cmath>
#include <numbers>

#include <doctest.h>

#include "hfun/eval.hpp"
#include "hfun/model.hpp"
#include "oracles/oracle_values.hpp"
#include "test_util.hpp"

using namespace hfun;
using std::numbers::pi;

namespace {

HFunctionSpec exp_neg() { return {1, 0, {}, {{0.0, 1.0}}}; }

}  // namespace

TEST_SUITE("model") {

TEST_CASE("arguments keep their phase on the log surface") {
  Argument minus_one = Argument::polar(1.0, pi);
  CHECK(minus_one.phase() == doctest::Approx(pi));
  Argument turned = minus_one.rotated(pi);
  CHECK(turned.phase() == doctest::Approx(2 * pi));
  CHECK(std::abs(turned.value() - Complex(1.0)) < 1e-15);

  // sqrt on the second sheet picks the other root
  Argument second_sheet = Argument::polar(4.0, 2 * pi);
  CHECK(std::abs(second_sheet.power(0.5).value() - Complex(-2.0)) < 1e-14);
  CHECK(std::abs(Argument::from_value(4.0).power(0.5).value() - Complex(2.0)) < 1e-14);

  Argument z = Argument::from_value({-1.0, 0.0});
  CHECK(z.phase() == doctest::Approx(pi));
  CHECK(Argument::from_value(0.0).is_zero());
  CHECK(Argument::from_value({3.0, 4.0}).modulus() == doctest::Approx(5.0));
  CHECK(Argument::from_value(2.0).scaled(1.5).modulus() == doctest::Approx(3.0));
  CHECK(test::error_code([] { Argument::polar(-1.0, 0.0); }) == test::code(ErrorCode::Domain));
}

TEST_CASE("validate classifies the residue domain") {
  auto info = validate(exp_neg());
  CHECK(info.delta == doctest::Approx(1.0));
  CHECK(info.domain_class == DomainClass::AllNonzeroZ);

  // 1/(1+z): delta = 0, D = 1, left series inside the unit disk
  HFunctionSpec geometric{1, 1, {{0.0, 1.0}}, {{0.0, 1.0}}};
  info = validate(geometric);
  CHECK(info.domain_class == DomainClass::DiskInterior);
  CHECK(info.big_d == doctest::Approx(1.0));
  CHECK(info.left_series_valid(Argument::from_value(0.5)));
  CHECK_FALSE(info.left_series_valid(Argument::from_value(2.0)));
  CHECK(info.right_series_valid(Argument::from_value(2.0)));
  CHECK_FALSE(info.right_series_valid(Argument::from_value(0.5)));

  HFunctionSpec exterior{0, 1, {{0.0, 1.0}}, {{0.0, 1.0}}};
  CHECK(validate(exterior).domain_class == DomainClass::DiskExterior);
}

TEST_CASE("validate rejects malformed specs") {
  auto invalid = test::code(ErrorCode::InvalidSpec);
  CHECK(test::error_code([] { validate({2, 0, {}, {{0.0, 1.0}}}); }) == invalid);
  CHECK(test::error_code([] { validate({1, 1, {}, {{0.0, 1.0}}}); }) == invalid);
  CHECK(test::error_code([] { validate({1, 0, {}, {{0.0, 0.0}}}); }) == invalid);
  CHECK(test::error_code([] { validate({1, 0, {}, {{0.0, -1.0}}}); }) == invalid);
  CHECK(test::error_code([] { validate({1, 0, {}, {{NAN, 1.0}}}); }) == invalid);
  // Gamma(s) and Gamma(1 - 1 - s) share the pole at s = 0
  CHECK(test::error_code([] { validate({1, 1, {{1.0, 1.0}}, {{0.0, 1.0}}}); }) == invalid);
}

TEST_CASE("pFq bridge") {
  PFQSpec pfq{{0.5, 1.0}, {1.5}};
  auto direct = pfq_eval(pfq, -0.25);
  CHECK(test::rel_err(direct.value, oracle::kPfq21) < 1e-14);

  auto bridge = pfq_to_h(pfq);
  CHECK(bridge.spec.m == 1);
  CHECK(bridge.spec.n == 2);
  auto via_h = eval(bridge.spec, bridge.argument(-0.25));
  CHECK(test::rel_err(bridge.prefactor * via_h.value, oracle::kPfq21) < 1e-10);

  PFQSpec pfq12{{1.0}, {{0.5, 0.3}, 2.2}};
  CHECK(test::rel_err(pfq_eval(pfq12, {3.0, -1.0}).value, oracle::kPfq12) < 1e-13);

  CHECK(test::error_code([] { pfq_eval({{1.0, 1.0}, {}}, 0.5); }) == test::code(ErrorCode::Divergent));
  CHECK(test::error_code([] { pfq_eval({{1.0, 1.0}, {1.0}}, 1.5); }) == test::code(ErrorCode::Divergent));
  CHECK(test::error_code([] { pfq_to_h({{1.0}, {-2.0}}); }) == test::code(ErrorCode::Pole));
}

TEST_CASE("power_rescale contract") {
  HFunctionSpec spec{1, 1, {{0.2, 0.7}}, {{0.1, 1.3}, {0.4, 0.5}}};
  const double k = 2.5;
  auto scaled = power_rescale(spec, k);
  CHECK(scaled.upper[0].scale == doctest::Approx(0.7 * k));
  Argument z = Argument::from_value({0.6, 0.2});
  Complex lhs = eval(spec, z).value;
  Complex rhs = k * eval(scaled, z.power(k)).value;
  CHECK(test::rel_err(rhs, lhs) < 1e-9);
  CHECK(test::error_code([&] { power_rescale(spec, 0.0); }) == test::code(ErrorCode::InvalidSpec));
}

}
