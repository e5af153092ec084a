#include "polygas/errors.hpp"

namespace polygas {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Domain: return "domain";
    case ErrorCode::Overflow: return "overflow";
    case ErrorCode::DegenerateCollision: return "degenerate_collision";
    case ErrorCode::DegenerateDirection: return "degenerate_direction";
    case ErrorCode::SingularConfiguration: return "singular_configuration";
    case ErrorCode::OutOfValidityWindow: return "out_of_validity_window";
    case ErrorCode::WindowExit: return "window_exit";
    case ErrorCode::NoSignChange: return "no_sign_change";
    case ErrorCode::UnsupportedWeight: return "unsupported_weight";
    case ErrorCode::DegenerateFit: return "degenerate_fit";
    case ErrorCode::ExponentOutOfRange: return "exponent_out_of_range";
    case ErrorCode::Parse: return "parse";
    case ErrorCode::Validation: return "validation";
    case ErrorCode::Io: return "io";
    case ErrorCode::Numerical: return "numerical";
  }
  return "unknown";
}

}  // namespace polygas
