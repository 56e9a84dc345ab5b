#pragma once

// Dense complex linear algebra on fixed 4x4 matrices (two qubits in the
// basis |00>, |01>, |10>, |11>).

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>

namespace spinpair {

using Complex = std::complex<double>;
using Vector4 = std::array<Complex, 4>;

class Matrix2 {
 public:
  constexpr Matrix2() = default;
  constexpr Matrix2(Complex a, Complex b, Complex c, Complex d)
      : m_{a, b, c, d} {}

  constexpr Complex operator()(std::size_t r, std::size_t c) const {
    return m_[2 * r + c];
  }

 private:
  std::array<Complex, 4> m_{};
};

class Matrix4 {
 public:
  constexpr Matrix4() = default;

  /// Row-major list of 16 entries.
  Matrix4(std::initializer_list<Complex> entries);

  static Matrix4 zero() { return Matrix4{}; }
  static Matrix4 identity();
  static Matrix4 diagonal(const std::array<double, 4>& d);
  /// |v><v|
  static Matrix4 outer(const Vector4& v);

  Complex& operator()(std::size_t r, std::size_t c) { return m_[4 * r + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return m_[4 * r + c];
  }

  Matrix4& operator+=(const Matrix4& o);
  Matrix4& operator-=(const Matrix4& o);
  Matrix4& operator*=(Complex s);

  friend bool operator==(const Matrix4&, const Matrix4&) = default;

 private:
  std::array<Complex, 16> m_{};
};

Matrix4 operator+(Matrix4 a, const Matrix4& b);
Matrix4 operator-(Matrix4 a, const Matrix4& b);
Matrix4 operator*(Matrix4 a, Complex s);
Matrix4 operator*(Complex s, Matrix4 a);
Matrix4 operator*(const Matrix4& a, const Matrix4& b);
Vector4 operator*(const Matrix4& a, const Vector4& v);

Matrix4 mat_mul(const Matrix4& a, const Matrix4& b);
Matrix4 kron(const Matrix2& a, const Matrix2& b);

/// Entrywise complex conjugate, no transpose.
Matrix4 conj_elementwise(const Matrix4& a);
Matrix4 adjoint(const Matrix4& a);
Complex trace(const Matrix4& a);

double max_abs(const Matrix4& a);
double max_abs_diff(const Matrix4& a, const Matrix4& b);
double hermitian_deviation(const Matrix4& a);
bool all_finite(const Matrix4& a);

Complex inner(const Vector4& a, const Vector4& b);  // <a|b>
double norm(const Vector4& v);

/// Eigenvalues ascending; `vectors[k]` belongs to `values[k]`.
struct HermitianEigenDecomposition {
  std::array<double, 4> values{};
  std::array<Vector4, 4> vectors{};

  /// V with the eigenvectors as columns.
  Matrix4 vector_matrix() const;
  /// V diag(values) V^H
  Matrix4 reconstruct() const;
};

/// Cyclic complex Jacobi. Throws NotHermitian / NoConvergence.
HermitianEigenDecomposition hermitian_eig(const Matrix4& a);

/// Singular values, descending, by one-sided (Hestenes) Jacobi.
std::array<double, 4> singular_values(const Matrix4& a);

}  // namespace spinpair
