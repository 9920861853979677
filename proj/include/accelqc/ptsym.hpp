#pragma once

#include <cmath>
#include <numbers>
#include <string>

#include "accelqc/errors.hpp"
#include "accelqc/matrix.hpp"
#include "accelqc/state.hpp"

namespace accelqc {

/// PT-symmetric local operation: non-Hermiticity angle alpha (|alpha| < pi/2) and
/// dimensionless interaction time t >= 0.
struct PTParams {
  double alpha = 0.0;
  double t = 0.0;
};

enum class PTTarget { OnA, OnB, OnBoth };

// Closest approach to the exceptional point before sec(alpha) is treated as overflow.
inline constexpr double kExceptionalPointGuard = 1e-6;
inline constexpr double kSingularTraceThreshold = 1e-12;

inline void check_alpha(double alpha) {
  if (!(std::abs(alpha) < std::numbers::pi / 2.0))
    throw DomainError("PT strength alpha = " + std::to_string(alpha) + " must satisfy |alpha| < pi/2");
}

inline void check_pt_params(const PTParams& p) {
  check_alpha(p.alpha);
  if (std::abs(p.alpha) > std::numbers::pi / 2.0 - kExceptionalPointGuard)
    throw OverflowError("PT strength alpha = " + std::to_string(p.alpha) +
                        " is too close to pi/2; sec(alpha) overflows");
  if (!std::isfinite(p.t) || p.t < 0.0)
    throw DomainError("interaction time t = " + std::to_string(p.t) + " must be finite and >= 0");
}

/// H = [[i sin a, 1], [1, -i sin a]]
inline Matrix2 h_pt(double alpha) {
  check_alpha(alpha);
  const double s = std::sin(alpha);
  return Matrix2::from_rows({{kI * s, 1.0}, {1.0, -kI * s}});
}

/**
 * exp(-i H t) in closed form. Since H^2 = cos^2(a) I, the exponential is
 * sec(a) [[cos(a - a1), -i sin a1], [-i sin a1, cos(a + a1)]] with a1 = t cos(a).
 */
inline Matrix2 u_pt(const PTParams& p) {
  check_pt_params(p);
  if (p.t == 0.0) return Matrix2::identity();
  const double a = p.alpha;
  const double a1 = p.t * std::cos(a);
  const double sec = 1.0 / std::cos(a);
  return Matrix2::from_rows({{sec * std::cos(a - a1), -kI * (sec * std::sin(a1))},
                             {-kI * (sec * std::sin(a1)), sec * std::cos(a + a1)}});
}

inline Matrix4 pt_operator(const PTParams& p, PTTarget target) {
  const Matrix2 u = u_pt(p);
  switch (target) {
    case PTTarget::OnA:
      return kron(u, pauli::id());
    case PTTarget::OnB:
      return kron(pauli::id(), u);
    case PTTarget::OnBoth:
      return kron(u, u);
  }
  throw DomainError("unknown PT target");
}

/// rho -> M rho M^dagger / Tr(M rho M^dagger), M the local PT operator on the chosen qubits.
inline TwoQubitState evolve(const TwoQubitState& state, const PTParams& p, PTTarget target) {
  const Matrix4 m = pt_operator(p, target);
  const Matrix4 numerator = m * state.matrix() * dagger(m);
  const double norm = trace(numerator).real();
  if (!std::isfinite(norm)) throw OverflowError("PT evolution overflowed");
  if (norm <= kSingularTraceThreshold)
    throw SingularEvolutionError("PT evolution normalization trace " + std::to_string(norm) + " <= 1e-12");
  return TwoQubitState(numerator / norm);
}

}  // namespace accelqc
