#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hfun {

enum class ErrorCode {
  InvalidSpec,
  Pole,
  Divergent,
  NoConvergence,
  MultiplePoles,
  Domain,
  Contour,
  Decay,
  Structure,
  Unevaluable,
  Parse,
  Io,
};

std::string_view error_name(ErrorCode code) noexcept;

// Single exception type for the library; the code drives the C API status
// mapping and the CLI exit codes.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace hfun
