#pragma once

#include <cmath>
#include <numbers>
#include <string>

#include "accelqc/errors.hpp"
#include "accelqc/matrix.hpp"
#include "accelqc/state.hpp"

namespace accelqc {

inline constexpr double kMaxAcceleration = std::numbers::pi / 4.0;

enum class Scenario { None, FirstOnly, Both };

struct AccelerationSpec {
  double r = 0.0;  // acceleration parameter, radians, in [0, pi/4]
  Scenario scenario = Scenario::None;
};

/// Single-mode Unruh channel for one qubit. Region II of the Rindler decomposition is
/// traced out, which leaves K0 = diag(cos r, 1) and K1 = sin r |1><0|.
struct KrausPair {
  Matrix2 k0;
  Matrix2 k1;
};

inline void check_acceleration(double r) {
  if (!(r >= 0.0 && r <= kMaxAcceleration))
    throw DomainError("acceleration r = " + std::to_string(r) + " outside [0, pi/4]");
}

/// (|00> + |11>)/sqrt(2)
inline TwoQubitState bell_phi_plus() {
  Matrix4 m;
  m(0, 0) = m(0, 3) = m(3, 0) = m(3, 3) = 0.5;
  return TwoQubitState(m);
}

inline KrausPair unruh_kraus(double r) {
  check_acceleration(r);
  KrausPair k;
  k.k0(0, 0) = std::cos(r);
  k.k0(1, 1) = 1.0;
  k.k1(1, 0) = std::sin(r);
  return k;
}

inline TwoQubitState apply_channel(const TwoQubitState& state, const KrausPair& kraus, Subsystem target) {
  const auto lift = [target](const Matrix2& k) {
    return target == Subsystem::A ? kron(k, pauli::id()) : kron(pauli::id(), k);
  };
  const Matrix4 m0 = lift(kraus.k0);
  const Matrix4 m1 = lift(kraus.k1);
  const Matrix4& rho = state.matrix();
  return TwoQubitState(m0 * rho * dagger(m0) + m1 * rho * dagger(m1));
}

inline TwoQubitState accelerate(const TwoQubitState& state, const AccelerationSpec& spec) {
  check_acceleration(spec.r);
  switch (spec.scenario) {
    case Scenario::None:
      return state;
    case Scenario::FirstOnly:
      return apply_channel(state, unruh_kraus(spec.r), Subsystem::A);
    case Scenario::Both: {
      const KrausPair k = unruh_kraus(spec.r);
      return apply_channel(apply_channel(state, k, Subsystem::A), k, Subsystem::B);
    }
  }
  throw DomainError("unknown acceleration scenario");
}

}  // namespace accelqc
