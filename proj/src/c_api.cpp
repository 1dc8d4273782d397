#include "hfun/hfun.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "hfun/catalog.hpp"
#include "hfun/error.hpp"
#include "hfun/eval.hpp"
#include "hfun/identities.hpp"
#include "hfun/json_io.hpp"
#include "hfun/mlsum.hpp"
#include "hfun/verify.hpp"

struct hfun_spec {
  hfun::HFunctionSpec spec;
};

struct hfun_report_set {
  std::vector<hfun::IdentityReport> reports;
};

namespace {

thread_local std::string last_error;

// A caller mistake detected inside guarded(): bad enum values and the like.
struct ArgumentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

hfun_status status_of(hfun::ErrorCode code) { return static_cast<hfun_status>(static_cast<int>(code) + 1); }

// Runs body, mapping exceptions to status codes and recording the message.
template <class F>
hfun_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return HFUN_OK;
  } catch (const hfun::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const ArgumentError& e) {
    last_error = std::string("ArgumentError: ") + e.what();
    return HFUN_ERR_ARGUMENT;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return HFUN_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return HFUN_ERR_INTERNAL;
  }
}

hfun_status bad_argument(const char* what) {
  last_error = std::string("ArgumentError: ") + what;
  return HFUN_ERR_ARGUMENT;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

hfun::EvalOptions to_options(const hfun_eval_options* options) {
  hfun::EvalOptions out;
  if (!options) return out;
  out.tol = options->tol;
  out.max_terms = options->max_terms;
  switch (options->method) {
    case HFUN_METHOD_AUTO: out.method = hfun::EvalMethod::Auto; break;
    case HFUN_METHOD_SERIES: out.method = hfun::EvalMethod::Series; break;
    case HFUN_METHOD_MB: out.method = hfun::EvalMethod::MellinBarnes; break;
    default: throw ArgumentError("unknown method");
  }
  if (!(out.tol > 0.0)) throw hfun::Error(hfun::ErrorCode::Parse, "tolerance must be positive");
  if (out.max_terms <= 0) throw hfun::Error(hfun::ErrorCode::Parse, "max_terms must be positive");
  return out;
}

void fill_result(const hfun::EvalResult& r, hfun_eval_result* out) {
  out->value = {r.value.real(), r.value.imag()};
  out->abs_error_estimate = r.abs_error_estimate;
  out->method = hfun::method_name(r.method).data();
  out->work = r.work;
}

void write_path(hfun::JsonWriter& w, const hfun::PathOutcome& path) {
  if (path.result) {
    hfun::write_eval_result(w, *path.result);
  } else {
    w.begin_object().key("error").value(path.error).end_object();
  }
}

}  // namespace

extern "C" {

const char* hfun_version(void) { return "0.1.0"; }

const char* hfun_last_error(void) { return last_error.c_str(); }

const char* hfun_status_name(hfun_status status) {
  switch (status) {
    case HFUN_OK: return "OK";
    case HFUN_ERR_ARGUMENT: return "ArgumentError";
    case HFUN_ERR_INTERNAL: return "InternalError";
    default: break;
  }
  const int code = static_cast<int>(status) - 1;
  if (code < 0 || code > static_cast<int>(hfun::ErrorCode::Io)) return "UnknownStatus";
  return hfun::error_name(static_cast<hfun::ErrorCode>(code)).data();
}

void hfun_eval_options_default(hfun_eval_options* options) {
  if (!options) return;
  const hfun::EvalOptions defaults;
  options->tol = defaults.tol;
  options->max_terms = defaults.max_terms;
  options->method = HFUN_METHOD_AUTO;
}

hfun_status hfun_parse_complex(const char* text, hfun_complex* out) {
  if (!text || !out) return bad_argument("null pointer");
  return guarded([&] {
    const hfun::Complex z = hfun::parse_complex(text);
    *out = {z.real(), z.imag()};
  });
}

hfun_status hfun_spec_from_json(const char* json_text, hfun_spec** out) {
  if (!json_text || !out) return bad_argument("null pointer");
  return guarded([&] {
    hfun::HFunctionSpec spec = hfun::spec_from_json_text(json_text);
    hfun::validate(spec);
    *out = new hfun_spec{std::move(spec)};
  });
}

hfun_status hfun_spec_from_file(const char* path, hfun_spec** out) {
  if (!path || !out) return bad_argument("null pointer");
  std::string text;
  const hfun_status read = guarded([&] {
    std::ifstream in(path);
    if (!in) throw hfun::Error(hfun::ErrorCode::Io, std::string("cannot open ") + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  });
  if (read != HFUN_OK) return read;
  return hfun_spec_from_json(text.c_str(), out);
}

hfun_status hfun_spec_to_json(const hfun_spec* spec, char** out) {
  if (!spec || !out) return bad_argument("null pointer");
  return guarded([&] {
    hfun::JsonWriter w;
    hfun::write_spec(w, spec->spec);
    *out = copy_string(w.str());
  });
}

void hfun_spec_free(hfun_spec* spec) { delete spec; }

hfun_status hfun_eval(const hfun_spec* spec, hfun_complex z, const hfun_eval_options* options, hfun_eval_result* out) {
  if (!spec || !out) return bad_argument("null pointer");
  return guarded([&] { fill_result(hfun::eval(spec->spec, hfun::Complex{z.re, z.im}, to_options(options)), out); });
}

hfun_status hfun_eval_polar(const hfun_spec* spec, double modulus, double phase, const hfun_eval_options* options,
                            hfun_eval_result* out) {
  if (!spec || !out) return bad_argument("null pointer");
  return guarded([&] {
    if (!(modulus >= 0.0)) throw hfun::Error(hfun::ErrorCode::Parse, "modulus must be nonnegative");
    fill_result(hfun::eval(spec->spec, hfun::Argument::polar(modulus, phase), to_options(options)), out);
  });
}

hfun_status hfun_eval_json(const hfun_spec* spec, hfun_complex z, const hfun_eval_options* options, char** out) {
  if (!spec || !out) return bad_argument("null pointer");
  return guarded([&] {
    const hfun::EvalResult r = hfun::eval(spec->spec, hfun::Complex{z.re, z.im}, to_options(options));
    hfun::JsonWriter w;
    hfun::write_eval_result(w, r);
    *out = copy_string(w.str());
  });
}

hfun_status hfun_split_json(const hfun_spec* spec, const char* identity, hfun_complex alpha, double lambda, char** out) {
  if (!spec || !identity || !out) return bad_argument("null pointer");
  return guarded([&] {
    const std::string name = identity;
    const hfun::Complex a{alpha.re, alpha.im};
    hfun::SplitResult split;
    if (name == "akr") {
      split = hfun::split_akr(spec->spec, a, lambda);
    } else if (name == "new") {
      split = hfun::split_new(spec->spec, a, lambda);
    } else if (name == "reduce-akr") {
      split = hfun::reduce_akr(spec->spec);
    } else if (name == "reduce-new") {
      split = hfun::reduce_new(spec->spec);
    } else {
      throw hfun::Error(hfun::ErrorCode::Parse, "unknown identity '" + name + "'");
    }
    hfun::JsonWriter w;
    hfun::write_split(w, name, split);
    *out = copy_string(w.str());
  });
}

hfun_status hfun_mlsum_json(double alpha, double beta, double gamma, double delta, double x, double tol, char** out) {
  if (!out) return bad_argument("null pointer");
  return guarded([&] {
    const hfun::MLSumSpec spec{alpha, beta, gamma, delta, x};
    const hfun::TripleResult t = hfun::ml_triple(spec, tol);
    hfun::JsonWriter w;
    w.begin_object();
    w.key("spec").begin_object();
    w.key("alpha").value(alpha);
    w.key("beta").value(beta);
    w.key("gamma").value(gamma);
    w.key("delta").value(delta);
    w.key("x").value(x);
    w.end_object();
    w.key("direct");
    write_path(w, t.direct);
    w.key("via_pfq");
    write_path(w, t.via_pfq);
    w.key("via_h");
    write_path(w, t.via_h);
    w.key("max_pairwise_discrepancy").value(t.max_pairwise_discrepancy);
    w.end_object();
    *out = copy_string(w.str());
  });
}

hfun_status hfun_verify(const char* suite, double threshold, const char* catalog_path, hfun_report_set** out) {
  if (!suite || !out) return bad_argument("null pointer");
  return guarded([&] {
    std::optional<hfun::Catalog> catalog;
    if (catalog_path) catalog = hfun::load_catalog(catalog_path);
    hfun::VerifyOptions options;
    options.threshold = threshold;
    options.catalog = catalog ? &*catalog : nullptr;
    auto reports = hfun::run_suite(hfun::parse_suite(suite), options);
    *out = new hfun_report_set{std::move(reports)};
  });
}

size_t hfun_report_count(const hfun_report_set* reports) { return reports ? reports->reports.size() : 0; }

int hfun_report_passed(const hfun_report_set* reports) { return reports && hfun::all_pass(reports->reports) ? 1 : 0; }

hfun_status hfun_report_json(const hfun_report_set* reports, char** out) {
  if (!reports || !out) return bad_argument("null pointer");
  return guarded([&] { *out = copy_string(hfun::reports_to_json(reports->reports)); });
}

hfun_status hfun_report_csv(const hfun_report_set* reports, char** out) {
  if (!reports || !out) return bad_argument("null pointer");
  return guarded([&] { *out = copy_string(hfun::reports_to_csv(reports->reports)); });
}

void hfun_report_free(hfun_report_set* reports) { delete reports; }

void hfun_string_free(char* s) { std::free(s); }

}  // extern "C"
