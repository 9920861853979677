#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>

#include "accelqc/matrix.hpp"
#include "accelqc/spectrum.hpp"
#include "accelqc/state.hpp"

namespace accelqc {

enum class PauliAxis { X, Y, Z };

inline constexpr std::array<PauliAxis, 3> kPauliAxes{PauliAxis::X, PauliAxis::Y, PauliAxis::Z};

/// Critical values for the l1-norm NAQC criterion on two qubits.
struct NaqcConstants {
  static constexpr double c_m = std::numbers::sqrt3 * std::numbers::sqrt2;  // sqrt(6)
  static constexpr double c_max = 3.0;
};

inline constexpr double kOutcomeProbabilityThreshold = 1e-12;

struct MeasurementOutcome {
  double probability = 0.0;
  std::optional<Matrix2> conditioned_state;  // empty when probability < 1e-12
};

inline Matrix2 pauli_matrix(PauliAxis axis) {
  switch (axis) {
    case PauliAxis::X:
      return pauli::x();
    case PauliAxis::Y:
      return pauli::y();
    case PauliAxis::Z:
      return pauli::z();
  }
  return pauli::z();
}

/// Columns are the +1 and -1 eigenvectors of the Pauli operator.
inline Matrix2 pauli_eigenbasis(PauliAxis axis) {
  const double h = std::numbers::sqrt2 / 2.0;
  switch (axis) {
    case PauliAxis::X:
      return Matrix2::from_rows({{h, h}, {h, -h}});
    case PauliAxis::Y:
      return Matrix2::from_rows({{h, h}, {kI * h, -kI * h}});
    case PauliAxis::Z:
      return Matrix2::identity();
  }
  return Matrix2::identity();
}

/// (I + (-1)^bit sigma) / 2
inline Matrix2 pauli_projector(PauliAxis axis, int bit) {
  const double sign = bit == 0 ? 1.0 : -1.0;
  return (Matrix2::identity() + pauli_matrix(axis) * sign) * 0.5;
}

/// Negativity from the partial transpose on B: max(0, -2 lambda_min).
inline double negativity(const TwoQubitState& state) {
  const auto spectrum = hermitian_eigenvalues(partial_transpose(state.matrix(), Subsystem::B));
  return std::max(0.0, -2.0 * spectrum.min());
}

/// l1-norm coherence of a qubit state in the eigenbasis of the given Pauli operator.
inline double l1_coherence(const Matrix2& rho, PauliAxis basis) {
  const Matrix2 v = pauli_eigenbasis(basis);
  const Matrix2 rotated = dagger(v) * rho * v;
  return std::abs(rotated(0, 1)) + std::abs(rotated(1, 0));
}

/// Projective Pauli measurement on qubit A with outcome `bit`; returns the outcome
/// probability and the normalized state left on B.
inline MeasurementOutcome measure_on_a(const TwoQubitState& state, PauliAxis axis, int bit) {
  const Matrix4 proj = kron(pauli_projector(axis, bit), pauli::id());
  const Matrix4 post = proj * state.matrix() * dagger(proj);
  MeasurementOutcome out;
  out.probability = std::clamp(trace(post).real(), 0.0, 1.0);
  if (out.probability < kOutcomeProbabilityThreshold) return out;
  out.conditioned_state = hermitian_part(partial_trace(post, Subsystem::B) / out.probability);
  return out;
}

/**
 * Average steered coherence of one party, summed over the three Pauli measurements on
 * the other party, both outcomes, and the two complementary bases:
 * 1/2 sum_{i != j, a} p(a|i) C_l1^{sigma_j}(rho_{cond}). Zero-probability outcomes
 * contribute nothing.
 */
inline double naqc_sum(const TwoQubitState& state, Subsystem measured = Subsystem::A) {
  const TwoQubitState oriented =
      measured == Subsystem::A ? state : TwoQubitState(swap_subsystems(state.matrix()));
  double total = 0.0;
  for (const PauliAxis i : kPauliAxes)
    for (const int bit : {0, 1}) {
      const MeasurementOutcome m = measure_on_a(oriented, i, bit);
      if (!m.conditioned_state) continue;
      for (const PauliAxis j : kPauliAxes)
        if (j != i) total += m.probability * l1_coherence(*m.conditioned_state, j);
    }
  return 0.5 * total;
}

/// Normalized NAQC degree in [0, 1].
inline double naqc(const TwoQubitState& state, Subsystem measured = Subsystem::A) {
  const double excess = naqc_sum(state, measured) - NaqcConstants::c_m;
  return std::max(0.0, excess / (NaqcConstants::c_max - NaqcConstants::c_m));
}

}  // namespace accelqc
