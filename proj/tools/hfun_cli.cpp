// hfun: evaluate Fox H-functions, apply splitting identities, run the
// verification suites.
#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "hfun/hfun.h"

namespace {

enum Exit { kOk = 0, kFail = 1, kUsage = 2, kEvalFailure = 3 };

struct SpecDeleter {
  void operator()(hfun_spec* s) const { hfun_spec_free(s); }
};
struct ReportDeleter {
  void operator()(hfun_report_set* r) const { hfun_report_free(r); }
};
struct StringDeleter {
  void operator()(char* s) const { hfun_string_free(s); }
};
using SpecPtr = std::unique_ptr<hfun_spec, SpecDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

void report_error(const char* context) {
  std::cerr << "hfun " << context << ": " << hfun_last_error() << "\n";
}

bool parse_method(const std::string& name, hfun_method* out) {
  if (name == "auto") *out = HFUN_METHOD_AUTO;
  else if (name == "series") *out = HFUN_METHOD_SERIES;
  else if (name == "mb") *out = HFUN_METHOD_MB;
  else return false;
  return true;
}

// HFUN_MAX_TERMS overrides the series term cap.
bool apply_env(hfun_eval_options* options) {
  const char* raw = std::getenv("HFUN_MAX_TERMS");
  if (!raw || !*raw) return true;
  errno = 0;
  char* end = nullptr;
  const long long v = std::strtoll(raw, &end, 10);
  if (errno != 0 || *end != '\0' || v <= 0) {
    std::cerr << "hfun: HFUN_MAX_TERMS must be a positive integer, got '" << raw << "'\n";
    return false;
  }
  options->max_terms = v;
  return true;
}

bool write_file(const std::string& path, const char* text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

std::string csv_path_for(const std::string& json_path) {
  const std::string ext = ".json";
  if (json_path.size() > ext.size() && json_path.compare(json_path.size() - ext.size(), ext.size(), ext) == 0) {
    return json_path.substr(0, json_path.size() - ext.size()) + ".csv";
  }
  return json_path + ".csv";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fox H-function evaluation and identity verification"};
  app.require_subcommand(1);
  app.fallthrough();

  double tol = 1e-10;
  std::string method_name = "auto";
  double threshold = 1e-7;
  std::string out_path;
  app.add_option("--tol", tol, "Relative tolerance for evaluation")->capture_default_str();
  app.add_option("--method", method_name, "series, mb or auto")
      ->check(CLI::IsMember({"series", "mb", "auto"}))
      ->capture_default_str();
  app.add_option("--threshold", threshold, "Pass threshold for verify reports")->capture_default_str();
  app.add_option("--out", out_path, "Output file (verify: JSON report, CSV written alongside)");

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate an H-function at a complex point");
  std::string spec_path;
  std::string z_text;
  eval_cmd->add_option("spec", spec_path, "HFunctionSpec JSON file")->required();
  eval_cmd->add_option("z", z_text, "Complex argument, a+bi")->required();

  auto* split_cmd = app.add_subcommand("split", "Apply a splitting identity");
  std::string identity;
  std::string alpha_text = "0";
  double lambda = 1.0;
  split_cmd->add_option("spec", spec_path, "HFunctionSpec JSON file")->required();
  split_cmd->add_option("--identity", identity, "akr, new, reduce-akr or reduce-new")
      ->required()
      ->check(CLI::IsMember({"akr", "new", "reduce-akr", "reduce-new"}));
  split_cmd->add_option("--alpha", alpha_text, "Complex alpha, a+bi")->capture_default_str();
  split_cmd->add_option("--lambda", lambda, "Positive lambda")->capture_default_str();

  auto* ml_cmd = app.add_subcommand("mlsum", "Generalized Mittag-Leffler sum, three ways");
  double ml_alpha = 0, ml_beta = 0, ml_gamma = 0, ml_delta = 0, ml_x = 0;
  ml_cmd->add_option("alpha", ml_alpha)->required();
  ml_cmd->add_option("beta", ml_beta)->required();
  ml_cmd->add_option("gamma", ml_gamma)->required();
  ml_cmd->add_option("delta", ml_delta)->required();
  ml_cmd->add_option("x", ml_x)->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  std::string suite = "all";
  std::string catalog_path;
  verify_cmd->add_option("--suite", suite, "gamma, splits, mlsum, catalog or all")
      ->check(CLI::IsMember({"gamma", "splits", "mlsum", "catalog", "all"}))
      ->capture_default_str();
  verify_cmd->add_option("--catalog", catalog_path, "Fixture catalog JSON (default: built in)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  hfun_eval_options options;
  hfun_eval_options_default(&options);
  options.tol = tol;
  parse_method(method_name, &options.method);
  if (!apply_env(&options)) return kUsage;

  auto load_spec = [&](SpecPtr& spec) {
    hfun_spec* raw = nullptr;
    if (hfun_spec_from_file(spec_path.c_str(), &raw) != HFUN_OK) {
      report_error("spec");
      return false;
    }
    spec.reset(raw);
    return true;
  };

  if (*eval_cmd) {
    SpecPtr spec;
    if (!load_spec(spec)) return kUsage;
    hfun_complex z{};
    if (hfun_parse_complex(z_text.c_str(), &z) != HFUN_OK) {
      report_error("eval");
      return kUsage;
    }
    char* json = nullptr;
    const hfun_status status = hfun_eval_json(spec.get(), z, &options, &json);
    if (status != HFUN_OK) {
      report_error("eval");
      return status == HFUN_ERR_PARSE ? kUsage : kEvalFailure;
    }
    StringPtr owned(json);
    std::cout << json;
    return kOk;
  }

  if (*split_cmd) {
    SpecPtr spec;
    if (!load_spec(spec)) return kUsage;
    hfun_complex alpha{};
    if (hfun_parse_complex(alpha_text.c_str(), &alpha) != HFUN_OK) {
      report_error("split");
      return kUsage;
    }
    char* json = nullptr;
    if (hfun_split_json(spec.get(), identity.c_str(), alpha, lambda, &json) != HFUN_OK) {
      report_error("split");
      return kUsage;
    }
    StringPtr owned(json);
    std::cout << json;
    return kOk;
  }

  if (*ml_cmd) {
    char* json = nullptr;
    const hfun_status status = hfun_mlsum_json(ml_alpha, ml_beta, ml_gamma, ml_delta, ml_x, tol, &json);
    if (status != HFUN_OK) {
      report_error("mlsum");
      return status == HFUN_ERR_INVALID_SPEC ? kUsage : kEvalFailure;
    }
    StringPtr owned(json);
    std::cout << json;
    return kOk;
  }

  // verify
  hfun_report_set* raw_reports = nullptr;
  const hfun_status status =
      hfun_verify(suite.c_str(), threshold, catalog_path.empty() ? nullptr : catalog_path.c_str(), &raw_reports);
  if (status != HFUN_OK) {
    report_error("verify");
    return kUsage;
  }
  std::unique_ptr<hfun_report_set, ReportDeleter> reports(raw_reports);
  char* csv = nullptr;
  char* json = nullptr;
  if (hfun_report_csv(reports.get(), &csv) != HFUN_OK || hfun_report_json(reports.get(), &json) != HFUN_OK) {
    report_error("verify");
    return kUsage;
  }
  StringPtr owned_csv(csv);
  StringPtr owned_json(json);
  const bool passed = hfun_report_passed(reports.get()) != 0;
  if (out_path.empty()) {
    std::cout << csv;
  } else {
    const std::string csv_path = csv_path_for(out_path);
    if (!write_file(out_path, json) || !write_file(csv_path, csv)) {
      std::cerr << "hfun verify: cannot write " << out_path << "\n";
      return kUsage;
    }
    std::cout << "wrote " << out_path << " and " << csv_path << "\n";
  }
  std::cout << (passed ? "all " : "FAILED: not all ") << hfun_report_count(reports.get()) << " reports pass\n";
  return passed ? kOk : kFail;
}
