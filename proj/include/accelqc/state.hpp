#pragma once

#include <cmath>
#include <string>

#include "accelqc/errors.hpp"
#include "accelqc/matrix.hpp"
#include "accelqc/spectrum.hpp"

namespace accelqc {

/// Validated two-qubit density matrix: finite, Hermitian and unit-trace within 1e-10,
/// smallest eigenvalue >= -1e-9.
class TwoQubitState {
public:
  static constexpr double kTraceTolerance = 1e-10;
  static constexpr double kPositivityTolerance = 1e-9;

  explicit TwoQubitState(const Matrix4& rho) : rho_(rho) {
    if (!all_finite(rho)) throw InvalidStateError("density matrix has non-finite entries");
    const double defect = hermiticity_defect(rho);
    if (defect > kHermitianTolerance)
      throw InvalidStateError("density matrix is not Hermitian (defect " + std::to_string(defect) + ")");
    const Complex tr = trace(rho);
    if (std::abs(tr - Complex{1.0}) > kTraceTolerance)
      throw InvalidStateError("density matrix trace is " + std::to_string(tr.real()) + " + " +
                              std::to_string(tr.imag()) + "i, expected 1");
    const double lowest = hermitian_eigenvalues(rho).min();
    if (lowest < -kPositivityTolerance)
      throw InvalidStateError("density matrix has negative eigenvalue " + std::to_string(lowest));
  }

  [[nodiscard]] const Matrix4& matrix() const noexcept { return rho_; }
  [[nodiscard]] Complex operator()(std::size_t i, std::size_t j) const { return rho_(i, j); }

  friend bool operator==(const TwoQubitState&, const TwoQubitState&) = default;

private:
  Matrix4 rho_;
};

inline TwoQubitState maximally_mixed() { return TwoQubitState(Matrix4::identity() * 0.25); }

/// |v><v| for a normalized amplitude vector in the |00>,|01>,|10>,|11> basis.
inline TwoQubitState pure_state(const std::array<Complex, 4>& amplitudes) {
  Matrix4 m;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = amplitudes[i] * std::conj(amplitudes[j]);
  return TwoQubitState(m);
}

}  // namespace accelqc
