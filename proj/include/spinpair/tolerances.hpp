#pragma once

// Every numeric threshold used by the library lives here.

namespace spinpair::tol {

// Max |a - a^H| entry accepted by the Hermitian eigensolver (scaled by
// max(1, max|a_ij|)).
inline constexpr double kHermitian = 1e-12;

// Jacobi sweeps stop once the off-diagonal Frobenius norm drops below this
// fraction of the full Frobenius norm.
inline constexpr double kJacobiOffDiagonal = 1e-14;
inline constexpr int kJacobiMaxSweeps = 200;

// Eigenvalues and radicands in [-kClampNegative, 0) are float noise and are
// clamped to zero; anything more negative is an error.
inline constexpr double kClampNegative = 1e-10;

// Absolute slack on the ground-state case inequalities.
inline constexpr double kPhaseBoundary = 1e-12;

// Largest |beta * energy| fed to exp() without shifting.
inline constexpr double kExponentGuard = 700.0;

// Concurrence at or below this counts as zero when bracketing T_c.
inline constexpr double kZeroConcurrence = 1e-12;

}  // namespace spinpair::tol
