#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>

#include "accelqc/errors.hpp"
#include "accelqc/matrix.hpp"

namespace accelqc {

inline constexpr double kHermitianTolerance = 1e-10;

template <std::size_t N>
struct Spectrum {
  std::array<double, N> eigenvalues{};  // ascending

  [[nodiscard]] double min() const { return eigenvalues.front(); }
  [[nodiscard]] double max() const { return eigenvalues.back(); }
  [[nodiscard]] double sum() const { return std::accumulate(eigenvalues.begin(), eigenvalues.end(), 0.0); }
};

namespace detail {

template <std::size_t N>
double off_diagonal_norm(const Matrix<N>& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

template <std::size_t N>
double frobenius_norm(const Matrix<N>& a) {
  double s = 0.0;
  for (const auto& v : a.data()) s += std::norm(v);
  return std::sqrt(s);
}

// One complex Jacobi rotation annihilating a(p,q). The rotation is a phase on column q
// (making a(p,q) real) followed by the classic real symmetric rotation.
template <std::size_t N>
void jacobi_rotate(Matrix<N>& a, std::size_t p, std::size_t q) {
  const Complex g = a(p, q);
  const double mag = std::abs(g);
  if (mag == 0.0) return;
  const Complex phase = std::conj(g) / mag;  // e^{-i arg g}

  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = (aqq - app) / (2.0 * mag);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const Complex v_pp = c;
  const Complex v_pq = s;
  const Complex v_qp = -s * phase;
  const Complex v_qq = c * phase;

  for (std::size_t k = 0; k < N; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * v_pp + akq * v_qp;
    a(k, q) = akp * v_pq + akq * v_qq;
  }
  for (std::size_t k = 0; k < N; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(v_pp) * apk + std::conj(v_qp) * aqk;
    a(q, k) = std::conj(v_pq) * apk + std::conj(v_qq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
}

}  // namespace detail

/**
 * Eigenvalues of a Hermitian matrix by cyclic complex Jacobi rotations.
 *
 * Inputs whose max elementwise |A - A^dagger| exceeds 1e-10 are rejected; anything inside
 * that tolerance is replaced by its Hermitian part first. Sweeps stop once the
 * off-diagonal Frobenius norm drops below 1e-13 (relative to the matrix norm when that
 * exceeds one); 100 sweeps without convergence raise ConvergenceError.
 */
template <std::size_t N>
Spectrum<N> hermitian_eigenvalues(const Matrix<N>& input) {
  constexpr int kMaxSweeps = 100;
  constexpr double kOffDiagonalTolerance = 1e-13;

  if (!all_finite(input)) throw NotHermitianError("matrix has non-finite entries");
  const double defect = hermiticity_defect(input);
  if (!(defect <= kHermitianTolerance))
    throw NotHermitianError("matrix is not Hermitian (max |A - A^dagger| = " + std::to_string(defect) + ")");

  Matrix<N> a = hermitian_part(input);
  const double tol = kOffDiagonalTolerance * std::max(1.0, detail::frobenius_norm(a));

  int sweep = 0;
  while (detail::off_diagonal_norm(a) >= tol) {
    if (++sweep > kMaxSweeps) throw ConvergenceError("Jacobi eigensolver did not converge in 100 sweeps");
    for (std::size_t p = 0; p + 1 < N; ++p)
      for (std::size_t q = p + 1; q < N; ++q) detail::jacobi_rotate(a, p, q);
  }

  Spectrum<N> out;
  for (std::size_t i = 0; i < N; ++i) out.eigenvalues[i] = a(i, i).real();
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
  return out;
}

}  // namespace accelqc
