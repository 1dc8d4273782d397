#pragma once

#include <cstdint>
#include <string_view>

#include "hfun/special.hpp"

namespace hfun {

enum class Method { SeriesLeft, SeriesRight, MellinBarnes, Direct, Hypergeometric };

std::string_view method_name(Method method) noexcept;

struct EvalResult {
  Complex value;
  double abs_error_estimate = 0.0;
  Method method = Method::SeriesLeft;
  std::int64_t work = 1;  // series terms or quadrature nodes
};

}  // namespace hfun
