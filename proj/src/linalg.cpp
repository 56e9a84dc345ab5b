#include "spinpair/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "spinpair/error.hpp"
#include "spinpair/tolerances.hpp"

namespace spinpair {

Matrix4::Matrix4(std::initializer_list<Complex> entries) {
  if (entries.size() != 16) {
    throw Error(ErrorCode::InvalidArgument,
                "Matrix4 needs 16 entries, got " + std::to_string(entries.size()));
  }
  std::copy(entries.begin(), entries.end(), m_.begin());
}

Matrix4 Matrix4::identity() {
  return diagonal({1.0, 1.0, 1.0, 1.0});
}

Matrix4 Matrix4::diagonal(const std::array<double, 4>& d) {
  Matrix4 m;
  for (std::size_t i = 0; i < 4; ++i) m(i, i) = d[i];
  return m;
}

Matrix4 Matrix4::outer(const Vector4& v) {
  Matrix4 m;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) m(r, c) = v[r] * std::conj(v[c]);
  return m;
}

Matrix4& Matrix4::operator+=(const Matrix4& o) {
  for (std::size_t i = 0; i < 16; ++i) m_[i] += o.m_[i];
  return *this;
}

Matrix4& Matrix4::operator-=(const Matrix4& o) {
  for (std::size_t i = 0; i < 16; ++i) m_[i] -= o.m_[i];
  return *this;
}

Matrix4& Matrix4::operator*=(Complex s) {
  for (auto& x : m_) x *= s;
  return *this;
}

Matrix4 operator+(Matrix4 a, const Matrix4& b) { return a += b; }
Matrix4 operator-(Matrix4 a, const Matrix4& b) { return a -= b; }
Matrix4 operator*(Matrix4 a, Complex s) { return a *= s; }
Matrix4 operator*(Complex s, Matrix4 a) { return a *= s; }

Matrix4 operator*(const Matrix4& a, const Matrix4& b) {
  Matrix4 out;
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      Complex acc = 0.0;
      for (std::size_t k = 0; k < 4; ++k) acc += a(r, k) * b(k, c);
      out(r, c) = acc;
    }
  }
  return out;
}

Vector4 operator*(const Matrix4& a, const Vector4& v) {
  Vector4 out{};
  for (std::size_t r = 0; r < 4; ++r) {
    Complex acc = 0.0;
    for (std::size_t k = 0; k < 4; ++k) acc += a(r, k) * v[k];
    out[r] = acc;
  }
  return out;
}

Matrix4 mat_mul(const Matrix4& a, const Matrix4& b) { return a * b; }

Matrix4 kron(const Matrix2& a, const Matrix2& b) {
  Matrix4 out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l)
          out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return out;
}

Matrix4 conj_elementwise(const Matrix4& a) {
  Matrix4 out;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) out(r, c) = std::conj(a(r, c));
  return out;
}

Matrix4 adjoint(const Matrix4& a) {
  Matrix4 out;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) out(r, c) = std::conj(a(c, r));
  return out;
}

Complex trace(const Matrix4& a) {
  return a(0, 0) + a(1, 1) + a(2, 2) + a(3, 3);
}

double max_abs(const Matrix4& a) {
  double m = 0.0;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) m = std::max(m, std::abs(a(r, c)));
  return m;
}

double max_abs_diff(const Matrix4& a, const Matrix4& b) { return max_abs(a - b); }

double hermitian_deviation(const Matrix4& a) { return max_abs_diff(a, adjoint(a)); }

bool all_finite(const Matrix4& a) {
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c)
      if (!std::isfinite(a(r, c).real()) || !std::isfinite(a(r, c).imag()))
        return false;
  return true;
}

Complex inner(const Vector4& a, const Vector4& b) {
  Complex acc = 0.0;
  for (std::size_t i = 0; i < 4; ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

double norm(const Vector4& v) { return std::sqrt(inner(v, v).real()); }

Matrix4 HermitianEigenDecomposition::vector_matrix() const {
  Matrix4 v;
  for (std::size_t c = 0; c < 4; ++c)
    for (std::size_t r = 0; r < 4; ++r) v(r, c) = vectors[c][r];
  return v;
}

Matrix4 HermitianEigenDecomposition::reconstruct() const {
  Matrix4 out;
  for (std::size_t k = 0; k < 4; ++k) out += values[k] * Matrix4::outer(vectors[k]);
  return out;
}

namespace {

constexpr std::array<std::array<std::size_t, 2>, 6> kPairs{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

// 2x2 unitary that diagonalizes [[app, apq], [conj(apq), aqq]] when applied
// as U^H A U on rows/columns (p, q).
struct Rotation {
  Complex pp, pq, qp, qq;
};

Rotation jacobi_rotation(double app, double aqq, Complex apq) {
  const double r = std::abs(apq);
  const Complex phase = apq / r;
  const double theta = (aqq - app) / (2.0 * r);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const Complex ph = std::conj(phase);
  return {c, s, -s * ph, c * ph};
}

void rotate_columns(Matrix4& x, std::size_t p, std::size_t q, const Rotation& u) {
  for (std::size_t r = 0; r < 4; ++r) {
    const Complex xp = x(r, p);
    const Complex xq = x(r, q);
    x(r, p) = xp * u.pp + xq * u.qp;
    x(r, q) = xp * u.pq + xq * u.qq;
  }
}

void rotate_rows_adjoint(Matrix4& x, std::size_t p, std::size_t q, const Rotation& u) {
  for (std::size_t c = 0; c < 4; ++c) {
    const Complex xp = x(p, c);
    const Complex xq = x(q, c);
    x(p, c) = std::conj(u.pp) * xp + std::conj(u.qp) * xq;
    x(q, c) = std::conj(u.pq) * xp + std::conj(u.qq) * xq;
  }
}

double off_diagonal_norm(const Matrix4& a) {
  double s = 0.0;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c)
      if (r != c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

double frobenius_norm(const Matrix4& a) {
  double s = 0.0;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

}  // namespace

HermitianEigenDecomposition hermitian_eig(const Matrix4& input) {
  if (!all_finite(input)) {
    throw Error(ErrorCode::InvalidArgument, "hermitian_eig: non-finite entry");
  }
  const double dev = hermitian_deviation(input);
  if (dev > tol::kHermitian * std::max(1.0, max_abs(input))) {
    throw Error(ErrorCode::NotHermitian,
                "hermitian_eig: max |A - A^H| = " + std::to_string(dev));
  }

  // Symmetrize so the rotations act on an exactly Hermitian matrix.
  Matrix4 a = 0.5 * (input + adjoint(input));
  Matrix4 v = Matrix4::identity();
  const double threshold = tol::kJacobiOffDiagonal * frobenius_norm(a);

  int sweeps = 0;
  while (off_diagonal_norm(a) > threshold) {
    if (++sweeps > tol::kJacobiMaxSweeps) {
      throw Error(ErrorCode::NoConvergence,
                  "hermitian_eig: no convergence after " +
                      std::to_string(tol::kJacobiMaxSweeps) + " sweeps");
    }
    for (const auto& [p, q] : kPairs) {
      const Complex apq = a(p, q);
      if (apq == 0.0) continue;
      const Rotation u = jacobi_rotation(a(p, p).real(), a(q, q).real(), apq);
      rotate_columns(a, p, q, u);
      rotate_rows_adjoint(a, p, q, u);
      rotate_columns(v, p, q, u);
      a(p, q) = 0.0;
      a(q, p) = 0.0;
      a(p, p) = a(p, p).real();
      a(q, q) = a(q, q).real();
    }
  }

  std::array<std::size_t, 4> order{0, 1, 2, 3};
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });

  HermitianEigenDecomposition out;
  for (std::size_t k = 0; k < 4; ++k) {
    const std::size_t src = order[k];
    out.values[k] = a(src, src).real();
    for (std::size_t r = 0; r < 4; ++r) out.vectors[k][r] = v(r, src);
  }
  return out;
}

std::array<double, 4> singular_values(const Matrix4& input) {
  if (!all_finite(input)) {
    throw Error(ErrorCode::InvalidArgument, "singular_values: non-finite entry");
  }
  constexpr double kOrthogonality = 1e-15;
  Matrix4 w = input;

  auto column_dot = [&w](std::size_t i, std::size_t j) {
    Complex acc = 0.0;
    for (std::size_t r = 0; r < 4; ++r) acc += std::conj(w(r, i)) * w(r, j);
    return acc;
  };

  for (int sweep = 0;; ++sweep) {
    if (sweep >= tol::kJacobiMaxSweeps) {
      throw Error(ErrorCode::NoConvergence,
                  "singular_values: no convergence after " +
                      std::to_string(tol::kJacobiMaxSweeps) + " sweeps");
    }
    bool rotated = false;
    for (const auto& [i, j] : kPairs) {
      const double alpha = column_dot(i, i).real();
      const double beta = column_dot(j, j).real();
      const Complex gamma = column_dot(i, j);
      if (alpha == 0.0 || beta == 0.0) continue;
      if (std::abs(gamma) <= kOrthogonality * std::sqrt(alpha * beta)) continue;
      rotate_columns(w, i, j, jacobi_rotation(alpha, beta, gamma));
      rotated = true;
    }
    if (!rotated) break;
  }

  std::array<double, 4> sv{};
  for (std::size_t c = 0; c < 4; ++c) sv[c] = std::sqrt(column_dot(c, c).real());
  std::sort(sv.begin(), sv.end(), std::greater<>());
  return sv;
}

}  // namespace spinpair
