#pragma once

#include <string_view>

namespace spinpair {

/// Couplings of the two-qubit XXX chain (k_B = hbar = 1).
/// j > 0 is antiferromagnetic, j < 0 ferromagnetic.
struct ModelParams {
  double j = 0.0;   // Heisenberg exchange J
  double dx = 0.0;  // x-component of the DM vector
  double gx = 0.0;  // x-component of the KSEA tensor

  friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

void validate(const ModelParams& p);

/// Quantity an axis sweeps over. LogTemp is log10(T).
enum class Param { Temp, LogTemp, J, Dx, Gx };

std::string_view to_string(Param p) noexcept;
/// Accepts the CLI spellings temp, log_temp, j, dx, gx. Throws InvalidAxis.
Param parse_param(std::string_view name);

bool is_coupling(Param p) noexcept;

struct AxisSpec {
  Param param = Param::Dx;
  double lo = 0.0;
  double hi = 1.0;
  int steps = 2;

  /// Throws InvalidAxis when the range or step count is unusable.
  void validate() const;

  /// k-th point of a uniform grid that contains both lo and hi.
  double node(int k) const;
  /// Center of the k-th of `steps` equal cells spanning [lo, hi].
  double cell_center(int k) const;
};

/// A point in (couplings, temperature) space; sweeps override one field.
struct SamplePoint {
  ModelParams params;
  double temp = 1.0;
};

/// Overrides the field named by `param`; LogTemp sets temp = 10^value.
void assign(SamplePoint& point, Param param, double value);

}  // namespace spinpair
