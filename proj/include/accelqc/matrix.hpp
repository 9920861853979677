#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>

#include "accelqc/errors.hpp"

namespace accelqc {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

template <std::size_t N>
concept SupportedDim = (N == 2 || N == 4);

/**
 * Dense square complex matrix, row-major, fixed at compile time to dimension 2 or 4.
 *
 * Two-qubit operators use the basis order |00>, |01>, |10>, |11> with subsystem A as
 * the left tensor factor. Mixing dimensions is a compile error rather than a runtime
 * check; DimensionError is raised only where shapes arrive at runtime (from_rows).
 */
template <std::size_t N>
  requires SupportedDim<N>
class Matrix {
public:
  static constexpr std::size_t dim = N;

  constexpr Matrix() = default;

  static Matrix identity() {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  static Matrix diagonal(const std::array<Complex, N>& d) {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
    return m;
  }

  static Matrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    if (rows.size() != N)
      throw DimensionError("expected " + std::to_string(N) + " rows, got " +
                           std::to_string(rows.size()));
    Matrix m;
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != N)
        throw DimensionError("row " + std::to_string(i) + " has " + std::to_string(row.size()) +
                             " entries, expected " + std::to_string(N));
      std::size_t j = 0;
      for (const auto& v : row) m(i, j++) = v;
      ++i;
    }
    return m;
  }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * N + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * N + j]; }

  [[nodiscard]] const std::array<Complex, N * N>& data() const noexcept { return data_; }

  Matrix& operator+=(const Matrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(Complex s) {
    for (auto& v : data_) v *= s;
    return *this;
  }
  Matrix& operator/=(Complex s) {
    for (auto& v : data_) v /= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, Complex s) { return a *= s; }
  friend Matrix operator*(Complex s, Matrix a) { return a *= s; }
  friend Matrix operator/(Matrix a, Complex s) { return a /= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix c;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) {
        const Complex aik = a(i, k);
        if (aik == Complex{}) continue;
        for (std::size_t j = 0; j < N; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    for (std::size_t i = 0; i < N; ++i) {
      os << (i == 0 ? "[" : " ");
      for (std::size_t j = 0; j < N; ++j) os << (j ? ", " : "") << m(i, j);
      os << (i + 1 == N ? "]" : "\n");
    }
    return os;
  }

private:
  std::array<Complex, N * N> data_{};
};

using Matrix2 = Matrix<2>;
using Matrix4 = Matrix<4>;

enum class Subsystem { A, B };

// Pauli matrices and friends.
namespace pauli {
inline Matrix2 id() { return Matrix2::identity(); }
inline Matrix2 x() { return Matrix2::from_rows({{0.0, 1.0}, {1.0, 0.0}}); }
inline Matrix2 y() { return Matrix2::from_rows({{0.0, -kI}, {kI, 0.0}}); }
inline Matrix2 z() { return Matrix2::from_rows({{1.0, 0.0}, {0.0, -1.0}}); }
}  // namespace pauli

template <std::size_t N>
Matrix<N> mat_mul(const Matrix<N>& a, const Matrix<N>& b) {
  return a * b;
}

template <std::size_t N>
Matrix<N> dagger(const Matrix<N>& a) {
  Matrix<N> out;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) out(j, i) = std::conj(a(i, j));
  return out;
}

template <std::size_t N>
Complex trace(const Matrix<N>& a) {
  Complex s{};
  for (std::size_t i = 0; i < N; ++i) s += a(i, i);
  return s;
}

/// kron(a, b)(2i+k, 2j+l) = a(i,j) * b(k,l)
inline Matrix4 kron(const Matrix2& a, const Matrix2& b) {
  Matrix4 out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return out;
}

/// Reduced 2x2 matrix of the subsystem in `keep`.
inline Matrix2 partial_trace(const Matrix4& rho, Subsystem keep) {
  Matrix2 out;
  for (std::size_t x = 0; x < 2; ++x)
    for (std::size_t y = 0; y < 2; ++y)
      for (std::size_t e = 0; e < 2; ++e) {
        if (keep == Subsystem::A)
          out(x, y) += rho(2 * x + e, 2 * y + e);
        else
          out(x, y) += rho(2 * e + x, 2 * e + y);
      }
  return out;
}

/// Transposes the indices of subsystem `on` only.
inline Matrix4 partial_transpose(const Matrix4& rho, Subsystem on) {
  Matrix4 out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t k = 0; k < 2; ++k)
      for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t l = 0; l < 2; ++l) {
          if (on == Subsystem::B)
            out(2 * i + k, 2 * j + l) = rho(2 * i + l, 2 * j + k);
          else
            out(2 * i + k, 2 * j + l) = rho(2 * j + k, 2 * i + l);
        }
  return out;
}

/// Exchanges the roles of A and B (conjugation by the SWAP gate).
inline Matrix4 swap_subsystems(const Matrix4& rho) {
  static constexpr std::array<std::size_t, 4> perm{0, 2, 1, 3};
  Matrix4 out;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) out(perm[i], perm[j]) = rho(i, j);
  return out;
}

template <std::size_t N>
double max_abs_diff(const Matrix<N>& a, const Matrix<N>& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < N * N; ++k) m = std::max(m, std::abs(a.data()[k] - b.data()[k]));
  return m;
}

/// max |a - a^dagger| over entries
template <std::size_t N>
double hermiticity_defect(const Matrix<N>& a) {
  return max_abs_diff(a, dagger(a));
}

template <std::size_t N>
Matrix<N> hermitian_part(const Matrix<N>& a) {
  return (a + dagger(a)) * 0.5;
}

template <std::size_t N>
bool all_finite(const Matrix<N>& a) {
  return std::all_of(a.data().begin(), a.data().end(),
                     [](const Complex& v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); });
}

}  // namespace accelqc
