#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <doctest.h>

#include "hfun/catalog.hpp"
#include "test_util.hpp"

using namespace hfun;

namespace {

const Fixture& fixture(const std::string& name) {
  for (const auto& f : application_catalog().fixtures) {
    if (f.name == name) return f;
  }
  FAIL("no fixture " << name);
  throw;
}

const Side& side(const Fixture& f, const std::string& label) {
  for (const auto& s : f.sides) {
    if (s.label == label) return s;
  }
  FAIL("no side " << label);
  throw;
}

}  // namespace

TEST_SUITE("catalog") {

TEST_CASE("built-in catalog is the shipped file") {
  std::ifstream in(HFUN_DATA_DIR "/catalog.json");
  REQUIRE(in);
  std::stringstream text;
  text << in.rdbuf();
  auto loaded = load_catalog(HFUN_DATA_DIR "/catalog.json");
  const auto& builtin = application_catalog();
  CHECK(builtin_catalog_text() == text.str());
  CHECK(loaded.version == builtin.version);
  REQUIRE(loaded.fixtures.size() == builtin.fixtures.size());
  std::set<std::string> names;
  for (const auto& f : builtin.fixtures) {
    CHECK(names.insert(f.name).second);
    CHECK_FALSE(f.sides.empty());
    CHECK_FALSE(f.closed_form.terms.empty());
  }
  CHECK(test::error_code([] { load_catalog("/nonexistent/catalog.json"); }) == test::code(ErrorCode::Io));
  CHECK(test::error_code([] { parse_catalog_text("[]"); }) == test::code(ErrorCode::Parse));
}

TEST_CASE("nr1 at x = 0 is 1 on every side") {
  const auto& f = fixture("nr1");
  CHECK(std::abs(evaluate_side(f.closed_form, 0.0).value - 1.0) < 1e-15);
  for (const auto& s : f.sides) {
    CAPTURE(s.label);
    auto v = evaluate_side(s, 0.0);
    CHECK(std::abs(v.value - 1.0) < 1e-12);
  }
}

TEST_CASE("closed forms at x = 1") {
  auto closed = [](const std::string& name) { return evaluate_side(fixture(name).closed_form, 1.0).value; };
  CHECK(test::rel_err(closed("g2-d1-bneg"), std::exp(1.0) * std::sin(1.0)) < 1e-15);
  CHECK(test::rel_err(closed("g2-d0-bneg"), std::exp(1.0) * std::cos(1.0)) < 1e-15);
  double r3 = std::sqrt(3.0);
  CHECK(test::rel_err(closed("g3-d0-bneg"), 1.0 / 3.0 + 2.0 / 3.0 * std::exp(1.5) * std::cos(r3 / 2)) < 1e-14);
  CHECK(test::rel_err(closed("nr1"), std::exp(2.0) / 3.0 + 2.0 / 3.0 * std::exp(0.5) * std::cos(r3 / 2)) < 1e-14);
}

TEST_CASE("every side agrees with its closed form at a few points") {
  for (const auto& f : application_catalog().fixtures) {
    for (double x : {0.37, 1.0, 2.5}) {
      if (x > f.x_max) continue;
      Complex want = evaluate_side(f.closed_form, x).value;
      for (const auto& s : f.sides) {
        CAPTURE(f.name);
        CAPTURE(s.label);
        CAPTURE(x);
        auto got = evaluate_side(s, x);
        CHECK(std::abs(got.value - want) < 1e-7 * std::max(got.magnitude, std::abs(want)));
      }
    }
  }
}

TEST_CASE("the H-side of the gamma = 2 chain") {
  const auto& f = fixture("g2-d1-bneg");
  double want = std::exp(1.0) * std::sin(1.0);
  CHECK(std::abs(want - 2.2873552872) < 1e-10);
  for (const auto& s : f.sides) {
    if (s.label.find("H") == std::string::npos) continue;
    CAPTURE(s.label);
    CHECK(test::rel_err(evaluate_side(s, 1.0).value, want) < 1e-8);
  }
}

TEST_CASE("argument maps stay on the log surface") {
  ArgumentMap map{2.0, 2.0, 1.5};
  Argument w = map.at(3.0);
  CHECK(w.modulus() == doctest::Approx(18.0));
  CHECK(w.phase() == doctest::Approx(1.5 * 3.141592653589793));
  CHECK(ArgumentMap{}.at(0.0).is_zero());
}

TEST_CASE("negative powers of x reject x = 0") {
  Term t;
  t.x_power = -1.0;
  CHECK(test::error_code([&] { evaluate_term(t, 0.0); }) == test::code(ErrorCode::Domain));
  CHECK(evaluate_term(t, 2.0).value == Complex(0.5));
}

}
