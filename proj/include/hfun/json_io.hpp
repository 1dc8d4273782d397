#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hfun/identities.hpp"
#include "hfun/model.hpp"
#include "hfun/result.hpp"

namespace hfun {

/// Exact-ish numeric constant: a JSON number, or an object whose present keys
/// multiply together:
///   {"q": [n, d]}     n/d
///   {"pi": k}         pi^k
///   {"sqrt": [n, d]}  sqrt(n/d)   (a plain number is also accepted)
///   {"cis": [n, d]}   e^{i pi n/d}
///   {"times": [c...]} product of nested constants
/// Throws Error(Parse).
Complex complex_constant(const nlohmann::json& node);
/// Same, but the value must be real.
double real_constant(const nlohmann::json& node);

/// {"m": int, "n": int, "upper": [[re, im, scale], ...], "lower": [...]};
/// entries may be constants and empty rows may be omitted. Throws Error(Parse); does not validate.
HFunctionSpec spec_from_json(const nlohmann::json& node);
HFunctionSpec spec_from_json_text(std::string_view text);

/// "a+bi" literals: "1", "-2.5", "3i", "-i", "1e-3-2.5e2i". Throws Error(Parse).
Complex parse_complex(std::string_view text);

/// Streaming JSON writer with a fixed number format (%.17g) so that identical
/// inputs give byte-identical output. Non-finite numbers become null.
class JsonWriter {
public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  /// An array laid out on one line; it may only hold scalars.
  JsonWriter& begin_inline_array();
  JsonWriter& end_array();
  JsonWriter& key(std::string_view name);
  JsonWriter& value(double v);
  JsonWriter& value(std::int64_t v);
  JsonWriter& value(int v) { return value(static_cast<std::int64_t>(v)); }
  JsonWriter& value(bool v);
  JsonWriter& value(std::string_view v);
  JsonWriter& value(const char* v) { return value(std::string_view(v)); }
  JsonWriter& null();
  /// {"re": .., "im": ..}
  JsonWriter& value(Complex v);

  const std::string& str() const { return out_; }

private:
  void before_value();
  void newline();

  std::string out_;
  std::vector<bool> has_items_;
  std::vector<bool> inline_;
  bool after_key_ = false;
};

std::string format_number(double v);

void write_spec(JsonWriter& w, const HFunctionSpec& spec);
void write_eval_result(JsonWriter& w, const EvalResult& r);
void write_split(JsonWriter& w, std::string_view identity, const SplitResult& split);

}  // namespace hfun
