#include <cmath>
#include <limits>
#include <numbers>

#include <doctest.h>
#include <json.hpp>

#include "hfun/json_io.hpp"
#include "test_util.hpp"

using namespace hfun;
using nlohmann::json;

TEST_SUITE("json_io") {

TEST_CASE("constants") {
  CHECK(real_constant(json(2.5)) == 2.5);
  CHECK(real_constant(json::parse(R"({"q": [1, 3]})")) == doctest::Approx(1.0 / 3.0));
  CHECK(real_constant(json::parse(R"({"pi": 1})")) == doctest::Approx(std::numbers::pi));
  CHECK(real_constant(json::parse(R"({"sqrt": 3})")) == doctest::Approx(std::sqrt(3.0)));
  CHECK(real_constant(json::parse(R"({"sqrt": [3, 4]})")) == doctest::Approx(std::sqrt(3.0) / 2.0));
  CHECK(real_constant(json::parse(R"({"q": [2, 3], "sqrt": 3})")) == doctest::Approx(2.0 / std::sqrt(3.0)));
  Complex c = complex_constant(json::parse(R"({"cis": [1, 2]})"));
  CHECK(std::abs(c - Complex(0.0, 1.0)) < 1e-16);
  c = complex_constant(json::parse(R"({"times": [2, {"cis": [1, 1]}, {"q": [1, 4]}]})"));
  CHECK(std::abs(c - Complex(-0.5, 0.0)) < 1e-15);

  auto parse = test::code(ErrorCode::Parse);
  CHECK(test::error_code([] { real_constant(json::parse(R"({"cis": [1, 2]})")); }) == parse);
  CHECK(test::error_code([] { real_constant(json::parse(R"({"q": [1, 0]})")); }) == parse);
  CHECK(test::error_code([] { real_constant(json::parse(R"({"bogus": 1})")); }) == parse);
  CHECK(test::error_code([] { real_constant(json("three")); }) == parse);
}

TEST_CASE("spec schema") {
  auto spec = spec_from_json_text(R"({"m": 1, "n": 1, "upper": [[0, 0, 1]],
                                      "lower": [[0, 0, 1], [{"q": [-1, 2]}, 0.25, {"sqrt": 2}]]})");
  CHECK(spec.m == 1);
  CHECK(spec.n == 1);
  REQUIRE(spec.q() == 2);
  CHECK(spec.lower[1].coeff == Complex(-0.5, 0.25));
  CHECK(spec.lower[1].scale == doctest::Approx(std::sqrt(2.0)));

  auto parse = test::code(ErrorCode::Parse);
  CHECK(test::error_code([] { spec_from_json_text("{"); }) == parse);
  CHECK(test::error_code([] { spec_from_json_text(R"({"n": 0, "upper": []})"); }) == parse);
  // empty rows may be left out
  CHECK(spec_from_json_text(R"({"m": 0, "n": 0, "lower": [[0, 0, 1]]})").upper.empty());
  CHECK(test::error_code([] { spec_from_json_text(R"({"m": 1, "n": 0, "upper": [], "lower": [[0, 1]]})"); }) ==
        parse);
  CHECK(test::error_code([] { spec_from_json_text(R"({"m": 1.5, "n": 0, "upper": [], "lower": []})"); }) == parse);
}

TEST_CASE("complex literals") {
  CHECK(parse_complex("1") == Complex(1.0, 0.0));
  CHECK(parse_complex("-2.5") == Complex(-2.5, 0.0));
  CHECK(parse_complex("3i") == Complex(0.0, 3.0));
  CHECK(parse_complex("-i") == Complex(0.0, -1.0));
  CHECK(parse_complex("1+i") == Complex(1.0, 1.0));
  CHECK(parse_complex("1e-3-2.5e2i") == Complex(1e-3, -250.0));
  CHECK(parse_complex("0.3-2.1i") == Complex(0.3, -2.1));
  auto parse = test::code(ErrorCode::Parse);
  for (const char* bad : {"", "1+i2", "abc", "1++2i", "2ii", "1 + 2i"}) {
    CAPTURE(bad);
    CHECK(test::error_code([&] { parse_complex(bad); }) == parse);
  }
}

TEST_CASE("writer output is stable") {
  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(std::numeric_limits<double>::infinity()) == "null");
  CHECK(format_number(2.0) == "2");

  JsonWriter w;
  w.begin_object().key("a").value(1).key("b").begin_inline_array().value(0.5).value(true).end_array();
  w.key("c").value(Complex(1.0, -2.0)).key("d").null().key("e").value("x\"y").end_object();
  auto doc = json::parse(w.str());
  CHECK(doc["a"] == 1);
  CHECK(doc["b"][1] == true);
  CHECK(doc["c"]["im"] == -2.0);
  CHECK(doc["d"].is_null());
  CHECK(doc["e"] == "x\"y");
  CHECK(w.str().find("[0.5, true]") != std::string::npos);
}

TEST_CASE("spec round trip through the writer") {
  HFunctionSpec spec{1, 1, {{{0.3, -0.2}, 0.7}}, {{0.0, 1.0}, {-1.0 / 3.0, 2.0}}};
  JsonWriter w;
  write_spec(w, spec);
  CHECK(spec_from_json_text(w.str()) == spec);
}

}
