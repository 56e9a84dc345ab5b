#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace spinpair {

enum class ErrorCode {
  InvalidArgument,
  InvalidAxis,
  NotHermitian,
  NoConvergence,
  NegativeEigenvalue,
  NegativeRadicand,
  Overflow,
  NoEntanglement,
  NoVanishing,
  Io,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Single exception type for the library; `code()` tells callers which
/// failure happened so the CLI can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace spinpair
