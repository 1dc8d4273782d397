#include "hfun/error.hpp"
#include "hfun/result.hpp"

namespace hfun {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::Pole: return "PoleError";
    case ErrorCode::Divergent: return "Divergent";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::MultiplePoles: return "MultiplePoles";
    case ErrorCode::Domain: return "DomainError";
    case ErrorCode::Contour: return "ContourError";
    case ErrorCode::Decay: return "DecayError";
    case ErrorCode::Structure: return "StructureError";
    case ErrorCode::Unevaluable: return "Unevaluable";
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::Io: return "IoError";
  }
  return "Unknown";
}

std::string_view method_name(Method method) noexcept {
  switch (method) {
    case Method::SeriesLeft: return "SeriesLeft";
    case Method::SeriesRight: return "SeriesRight";
    case Method::MellinBarnes: return "MellinBarnes";
    case Method::Direct: return "Direct";
    case Method::Hypergeometric: return "Hypergeometric";
  }
  return "Unknown";
}

}  // namespace hfun
