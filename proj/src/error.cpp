#include "spinpair/error.hpp"

namespace spinpair {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidAxis: return "InvalidAxis";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NegativeEigenvalue: return "NegativeEigenvalue";
    case ErrorCode::NegativeRadicand: return "NegativeRadicand";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::NoEntanglement: return "NoEntanglement";
    case ErrorCode::NoVanishing: return "NoVanishing";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace spinpair
