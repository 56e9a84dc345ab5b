#pragma once

#include <array>
#include <string_view>

#include "spinpair/linalg.hpp"
#include "spinpair/model.hpp"
#include "spinpair/params.hpp"
#include "spinpair/thermal.hpp"

namespace spinpair {

/// S = sigma_y (x) sigma_y.
const Matrix4& spin_flip();

/// R = rho S rho* S by direct multiplication.
Matrix4 r_matrix(const Matrix4& rho);

/// R assembled from the unnormalized elements (a, b, c, d, mu, nu) and
/// scaled by 1/z^2.
Matrix4 r_matrix_from_elements(const ThermalElements& e, double z);

enum class ConcurrencePath { AnalyticEq20, OracleSpectral };

std::string_view to_string(ConcurrencePath p) noexcept;

struct ConcurrenceResult {
  std::array<double, 4> lambdas{};  // descending
  double value = 0.0;
  ConcurrencePath path = ConcurrencePath::AnalyticEq20;
};

/// max(0, 2 max(lambda) - sum(lambda))
double concurrence_from_roots(const std::array<double, 4>& lambdas);

/// Closed-form square roots of the eigenvalues of R, descending.
///
/// Each root pair is the pair of eigenvalues of a 2x2 block of R; the larger
/// one is taken straight from the closed form and the smaller one from the
/// block determinant (their product), which avoids the cancellation the
/// subtractive form suffers when a root is tiny. Throws NegativeRadicand if
/// the subtractive radicand is below -1e-10.
std::array<double, 4> analytic_roots(const ThermalElements& e, double z);

/// Square roots of the eigenvalues of rho S rho* S, descending, computed as
/// the singular values of sqrt(rho) S sqrt(rho)* S.
std::array<double, 4> wootters_roots(const SpectralFactor& factor);

/// Same, for an arbitrary density matrix (diagonalized first). Throws
/// NegativeEigenvalue if rho has an eigenvalue below -1e-10.
std::array<double, 4> wootters_roots(const Matrix4& rho);

ConcurrenceResult concurrence_analytic(const ModelParams& p, Temperature temp);
ConcurrenceResult concurrence_oracle(const ModelParams& p, Temperature temp);

/// Wootters concurrence of any two-qubit density matrix.
ConcurrenceResult concurrence_of_state(const Matrix4& rho);

/// Concurrence of the T = 0 state: the ground eigenvector, or the equal
/// mixture of the tied levels on a phase boundary.
double ground_state_concurrence(const ModelParams& p);

}  // namespace spinpair
