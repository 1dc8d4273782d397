#include "hfun/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "hfun/error.hpp"

namespace hfun {
namespace {

using nlohmann::json;

double rational(const json& node, const char* what) {
  if (node.is_number()) return node.get<double>();
  if (node.is_array() && node.size() == 2 && node[0].is_number() && node[1].is_number()) {
    const double den = node[1].get<double>();
    if (den == 0.0) throw Error(ErrorCode::Parse, std::string(what) + ": zero denominator");
    return node[0].get<double>() / den;
  }
  throw Error(ErrorCode::Parse, std::string(what) + ": expected a number or [num, den]");
}

}  // namespace

Complex complex_constant(const json& node) {
  if (node.is_number()) return node.get<double>();
  if (!node.is_object()) throw Error(ErrorCode::Parse, "constant must be a number or an object");
  Complex value = 1.0;
  for (const auto& [name, item] : node.items()) {
    if (name == "q") {
      value *= rational(item, "q");
    } else if (name == "pi") {
      value *= std::pow(std::numbers::pi, rational(item, "pi"));
    } else if (name == "sqrt") {
      const double r = rational(item, "sqrt");
      if (r < 0.0) throw Error(ErrorCode::Parse, "sqrt of a negative number");
      value *= std::sqrt(r);
    } else if (name == "cis") {
      value *= std::polar(1.0, std::numbers::pi * rational(item, "cis"));
    } else if (name == "times") {
      if (!item.is_array()) throw Error(ErrorCode::Parse, "times: expected an array");
      for (const auto& factor : item) value *= complex_constant(factor);
    } else {
      throw Error(ErrorCode::Parse, "unknown constant key '" + name + "'");
    }
  }
  return value;
}

double real_constant(const json& node) {
  const Complex v = complex_constant(node);
  if (std::abs(v.imag()) > 1e-14 * std::max(1.0, std::abs(v.real()))) {
    throw Error(ErrorCode::Parse, "expected a real constant");
  }
  return v.real();
}

namespace {

std::vector<ParamPair> pairs_from_json(const json& node, const char* row) {
  if (!node.is_array()) throw Error(ErrorCode::Parse, std::string(row) + " must be an array");
  std::vector<ParamPair> out;
  for (const auto& entry : node) {
    if (!entry.is_array() || entry.size() != 3) {
      throw Error(ErrorCode::Parse, std::string(row) + " entries must be [re, im, scale]");
    }
    out.push_back({{real_constant(entry[0]), real_constant(entry[1])}, real_constant(entry[2])});
  }
  return out;
}

int int_field(const json& node, const char* name) {
  if (!node.contains(name) || !node[name].is_number_integer()) {
    throw Error(ErrorCode::Parse, std::string("missing integer field '") + name + "'");
  }
  return node[name].get<int>();
}

}  // namespace

HFunctionSpec spec_from_json(const json& node) {
  if (!node.is_object()) throw Error(ErrorCode::Parse, "spec must be a JSON object");
  HFunctionSpec spec;
  spec.m = int_field(node, "m");
  spec.n = int_field(node, "n");
  spec.upper = pairs_from_json(node.value("upper", json::array()), "upper");
  spec.lower = pairs_from_json(node.value("lower", json::array()), "lower");
  return spec;
}

HFunctionSpec spec_from_json_text(std::string_view text) {
  json node;
  try {
    node = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
  return spec_from_json(node);
}

Complex parse_complex(std::string_view text) {
  const std::string s(text);
  if (s.empty()) throw Error(ErrorCode::Parse, "empty complex literal");
  auto fail = [&] { return Error(ErrorCode::Parse, "bad complex literal '" + s + "'"); };
  // Reads one signed real from position pos; a bare sign before 'i' counts as 1.
  auto read_real = [&](std::size_t& pos, bool& imaginary) {
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    const std::size_t digits = pos;
    while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.')) ++pos;
    if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E') && pos > digits) {
      ++pos;
      if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
      const std::size_t exp_digits = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos == exp_digits) throw fail();
    }
    double v = 1.0;
    if (pos > digits) {
      try {
        std::size_t used = 0;
        v = std::stod(s.substr(digits, pos - digits), &used);
        if (used != pos - digits) throw fail();
      } catch (const std::logic_error&) {
        throw fail();
      }
    }
    if (s[start] == '-') v = -v;
    imaginary = pos < s.size() && s[pos] == 'i';
    if (imaginary) {
      ++pos;
    } else if (pos == digits) {
      throw fail();
    }
    return v;
  };
  std::size_t pos = 0;
  bool first_imag = false;
  const double first = read_real(pos, first_imag);
  if (pos == s.size()) return first_imag ? Complex{0.0, first} : Complex{first, 0.0};
  if (first_imag || (s[pos] != '+' && s[pos] != '-')) throw fail();
  bool second_imag = false;
  const double second = read_real(pos, second_imag);
  if (!second_imag || pos != s.size()) throw fail();
  return {first, second};
}

std::string format_number(double v) {
  if (!std::isfinite(v)) return "null";
  if (v == 0.0) return "0";  // also folds -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void JsonWriter::newline() {
  out_ += '\n';
  out_.append(2 * has_items_.size(), ' ');
}

void JsonWriter::before_value() {
  if (after_key_) {
    after_key_ = false;
    return;
  }
  if (has_items_.empty()) return;
  if (inline_.back()) {
    if (has_items_.back()) out_ += ", ";
    has_items_.back() = true;
    return;
  }
  if (has_items_.back()) out_ += ',';
  has_items_.back() = true;
  newline();
}

JsonWriter& JsonWriter::begin_object() {
  before_value();
  out_ += '{';
  has_items_.push_back(false);
  inline_.push_back(false);
  return *this;
}

JsonWriter& JsonWriter::end_object() {
  const bool had = has_items_.back();
  has_items_.pop_back();
  inline_.pop_back();
  if (had) newline();
  out_ += '}';
  if (has_items_.empty()) out_ += '\n';
  return *this;
}

JsonWriter& JsonWriter::begin_array() {
  before_value();
  out_ += '[';
  has_items_.push_back(false);
  inline_.push_back(false);
  return *this;
}

JsonWriter& JsonWriter::begin_inline_array() {
  before_value();
  out_ += '[';
  has_items_.push_back(false);
  inline_.push_back(true);
  return *this;
}

JsonWriter& JsonWriter::end_array() {
  const bool had = has_items_.back() && !inline_.back();
  has_items_.pop_back();
  inline_.pop_back();
  if (had) newline();
  out_ += ']';
  if (has_items_.empty()) out_ += '\n';
  return *this;
}

JsonWriter& JsonWriter::key(std::string_view name) {
  before_value();
  out_ += nlohmann::json(std::string(name)).dump();
  out_ += ": ";
  after_key_ = true;
  return *this;
}

JsonWriter& JsonWriter::value(double v) {
  before_value();
  out_ += format_number(v);
  return *this;
}

JsonWriter& JsonWriter::value(std::int64_t v) {
  before_value();
  out_ += std::to_string(v);
  return *this;
}

JsonWriter& JsonWriter::value(bool v) {
  before_value();
  out_ += v ? "true" : "false";
  return *this;
}

JsonWriter& JsonWriter::value(std::string_view v) {
  before_value();
  out_ += nlohmann::json(std::string(v)).dump();
  return *this;
}

JsonWriter& JsonWriter::null() {
  before_value();
  out_ += "null";
  return *this;
}

JsonWriter& JsonWriter::value(Complex v) {
  begin_object();
  key("re").value(v.real());
  key("im").value(v.imag());
  return end_object();
}

void write_spec(JsonWriter& w, const HFunctionSpec& spec) {
  auto row = [&](const std::vector<ParamPair>& pairs) {
    w.begin_array();
    for (const auto& pair : pairs) {
      w.begin_inline_array().value(pair.coeff.real()).value(pair.coeff.imag()).value(pair.scale).end_array();
    }
    w.end_array();
  };
  w.begin_object();
  w.key("m").value(spec.m);
  w.key("n").value(spec.n);
  w.key("upper");
  row(spec.upper);
  w.key("lower");
  row(spec.lower);
  w.end_object();
}

void write_eval_result(JsonWriter& w, const EvalResult& r) {
  w.begin_object();
  w.key("re").value(r.value.real());
  w.key("im").value(r.value.imag());
  w.key("abs_error_estimate").value(r.abs_error_estimate);
  w.key("method").value(method_name(r.method));
  w.key("work").value(r.work);
  w.end_object();
}

void write_split(JsonWriter& w, std::string_view identity, const SplitResult& split) {
  w.begin_object();
  w.key("identity").value(identity);
  w.key("source");
  write_spec(w, split.source);
  w.key("terms").begin_array();
  for (const auto& term : split.terms) {
    w.begin_object();
    w.key("weight").value(term.weight);
    w.key("phase_over_pi").value(term.phase / std::numbers::pi);
    w.key("argument_factor").value(term.argument_factor());
    w.key("spec");
    write_spec(w, term.spec);
    w.end_object();
  }
  w.end_array();
  w.end_object();
}

}  // namespace hfun
