#include <gtest/gtest.h>

#include <random>

#include "accelqc/measures.hpp"
#include "accelqc/ptsym.hpp"
#include "accelqc/unruh.hpp"
#include "oracles.hpp"

using namespace accelqc;
using std::numbers::pi;

namespace {

std::vector<double> r_grid(int n = 50) {
  std::vector<double> g;
  for (int i = 0; i < n; ++i) g.push_back(kMaxAcceleration * i / (n - 1));
  return g;
}

Matrix2 plus_state() { return Matrix2::from_rows({{0.5, 0.5}, {0.5, 0.5}}); }

TwoQubitState ket00() { return pure_state({1.0, 0.0, 0.0, 0.0}); }

}  // namespace

TEST(Measures, NegativityAnchors) {
  EXPECT_NEAR(negativity(bell_phi_plus()), 1.0, 1e-10);
  EXPECT_NEAR(negativity(maximally_mixed()), 0.0, 1e-15);
  EXPECT_NEAR(negativity(accelerate(bell_phi_plus(), {pi / 4, Scenario::FirstOnly})), 0.5, 1e-12);
}

TEST(Measures, NegativityMatchesClosedForm) {
  for (const double r : r_grid()) {
    const double n = negativity(accelerate(bell_phi_plus(), {r, Scenario::FirstOnly}));
    EXPECT_NEAR(n, oracle::negativity_first_accelerated(r), 1e-9);
  }
}

TEST(Measures, NegativitySameFromEitherTranspose) {
  std::mt19937_64 rng(21);
  for (int n = 0; n < 200; ++n) {
    const Matrix4 rho = oracle::random_density(rng, 1 + static_cast<std::size_t>(n % 4));
    const auto via_b = hermitian_eigenvalues(partial_transpose(rho, Subsystem::B));
    const auto via_a = hermitian_eigenvalues(partial_transpose(rho, Subsystem::A));
    for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(via_a.eigenvalues[i], via_b.eigenvalues[i], 1e-10);
  }
}

TEST(Measures, NegativityInvariantUnderLocalPhase) {
  std::mt19937_64 rng(22);
  const Matrix4 zb = kron(pauli::id(), pauli::z());
  for (int n = 0; n < 200; ++n) {
    const TwoQubitState s(oracle::random_density(rng));
    const TwoQubitState rotated(zb * s.matrix() * zb);
    EXPECT_NEAR(negativity(s), negativity(rotated), 1e-10);
  }
}

TEST(Measures, L1Coherence) {
  EXPECT_NEAR(l1_coherence(plus_state(), PauliAxis::Z), 1.0, 1e-15);
  EXPECT_NEAR(l1_coherence(plus_state(), PauliAxis::X), 0.0, 1e-15);
  EXPECT_NEAR(l1_coherence(plus_state(), PauliAxis::Y), 1.0, 1e-15);
  for (const PauliAxis axis : kPauliAxes) EXPECT_NEAR(l1_coherence(Matrix2::identity() * 0.5, axis), 0.0, 1e-15);
}

TEST(Measures, L1CoherenceMatchesBlochFormula) {
  // C in the sigma_j basis = norm of the Bloch components orthogonal to j.
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int n = 0; n < 200; ++n) {
    std::array<double, 3> v{u(rng), u(rng), u(rng)};
    const double len = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    if (len > 1.0)
      for (double& x : v) x /= len;
    const Matrix2 rho = (Matrix2::identity() + pauli::x() * v[0] + pauli::y() * v[1] + pauli::z() * v[2]) * 0.5;
    EXPECT_NEAR(l1_coherence(rho, PauliAxis::X), std::hypot(v[1], v[2]), 1e-14);
    EXPECT_NEAR(l1_coherence(rho, PauliAxis::Y), std::hypot(v[0], v[2]), 1e-14);
    EXPECT_NEAR(l1_coherence(rho, PauliAxis::Z), std::hypot(v[0], v[1]), 1e-14);
  }
}

TEST(Measures, MeasureOnA) {
  const MeasurementOutcome z0 = measure_on_a(bell_phi_plus(), PauliAxis::Z, 0);
  EXPECT_NEAR(z0.probability, 0.5, 1e-15);
  ASSERT_TRUE(z0.conditioned_state);
  EXPECT_LT(max_abs_diff(*z0.conditioned_state, Matrix2::diagonal({1.0, 0.0})), 1e-15);

  const MeasurementOutcome x0 = measure_on_a(bell_phi_plus(), PauliAxis::X, 0);
  EXPECT_NEAR(x0.probability, 0.5, 1e-15);
  ASSERT_TRUE(x0.conditioned_state);
  EXPECT_LT(max_abs_diff(*x0.conditioned_state, plus_state()), 1e-15);

  const MeasurementOutcome z1 = measure_on_a(ket00(), PauliAxis::Z, 1);
  EXPECT_EQ(z1.probability, 0.0);
  EXPECT_FALSE(z1.conditioned_state);
}

TEST(Measures, ConditionedStatesAreNormalized) {
  std::mt19937_64 rng(31);
  for (int n = 0; n < 100; ++n) {
    const TwoQubitState s(oracle::random_density(rng));
    for (const PauliAxis axis : kPauliAxes) {
      double total = 0.0;
      for (const int bit : {0, 1}) {
        const MeasurementOutcome m = measure_on_a(s, axis, bit);
        EXPECT_GE(m.probability, 0.0);
        EXPECT_LE(m.probability, 1.0);
        total += m.probability;
        ASSERT_TRUE(m.conditioned_state);
        EXPECT_NEAR(trace(*m.conditioned_state).real(), 1.0, 1e-12);
      }
      EXPECT_NEAR(total, 1.0, 1e-12);
    }
  }
}

TEST(Measures, NaqcSumAnchors) {
  EXPECT_NEAR(naqc_sum(bell_phi_plus()), 3.0, 1e-12);
  EXPECT_NEAR(naqc_sum(maximally_mixed()), 0.0, 1e-15);
  // Brute force over the six projectors: sigma_x and sigma_y on A each give 1, sigma_z gives 2.
  EXPECT_NEAR(oracle::naqc_sum_bloch(ket00().matrix()), 2.0, 1e-15);
  EXPECT_NEAR(naqc_sum(ket00()), 2.0, 1e-12);
}

TEST(Measures, NaqcSumMatchesBlochOracle) {
  std::mt19937_64 rng(77);
  for (int n = 0; n < 1000; ++n) {
    const TwoQubitState s(oracle::random_density(rng, 1 + static_cast<std::size_t>(n % 4)));
    EXPECT_NEAR(naqc_sum(s), oracle::naqc_sum_bloch(s.matrix()), 1e-12);
  }
  for (const double r : r_grid(20))
    for (const Scenario sc : {Scenario::FirstOnly, Scenario::Both}) {
      const TwoQubitState s = accelerate(bell_phi_plus(), {r, sc});
      EXPECT_NEAR(naqc_sum(s), oracle::naqc_sum_bloch(s.matrix()), 1e-12);
    }
}

TEST(Measures, Ranges) {
  std::mt19937_64 rng(1000);
  for (int n = 0; n < 1000; ++n) {
    const TwoQubitState s(oracle::random_density(rng, 1 + static_cast<std::size_t>(n % 4)));
    const double neg = negativity(s), sum = naqc_sum(s), deg = naqc(s);
    EXPECT_GE(neg, 0.0);
    EXPECT_LE(neg, 1.0 + 1e-12);
    EXPECT_GE(sum, 0.0);
    EXPECT_LE(sum, 3.0 + 1e-12);
    EXPECT_GE(deg, 0.0);
    EXPECT_LE(deg, 1.0 + 1e-12);
  }
}

TEST(Measures, NaqcSumRelabelingSymmetry) {
  // Outcome a is read as 1 - a everywhere; the total must not change.
  std::mt19937_64 rng(55);
  for (int n = 0; n < 100; ++n) {
    const TwoQubitState s(oracle::random_density(rng));
    double relabeled = 0.0;
    for (const PauliAxis i : kPauliAxes)
      for (const int bit : {1, 0}) {
        const MeasurementOutcome m = measure_on_a(s, i, 1 - bit);
        if (!m.conditioned_state) continue;
        for (const PauliAxis j : kPauliAxes)
          if (j != i) relabeled += m.probability * l1_coherence(*m.conditioned_state, j);
      }
    EXPECT_NEAR(naqc_sum(s), 0.5 * relabeled, 1e-12);
  }
}

TEST(Measures, NaqcDegree) {
  EXPECT_NEAR(naqc(bell_phi_plus()), 1.0, 1e-10);
  EXPECT_EQ(naqc(maximally_mixed()), 0.0);
  EXPECT_EQ(naqc(accelerate(bell_phi_plus(), {0.6, Scenario::Both})), 0.0);
  EXPECT_NEAR(NaqcConstants::c_m, std::sqrt(6.0), 1e-15);
}

TEST(Measures, MeasuredPartySwap) {
  std::mt19937_64 rng(66);
  for (int n = 0; n < 50; ++n) {
    const TwoQubitState s(oracle::random_density(rng));
    const TwoQubitState swapped(swap_subsystems(s.matrix()));
    EXPECT_NEAR(naqc_sum(s, Subsystem::B), naqc_sum(swapped, Subsystem::A), 1e-14);
  }
  // The accelerated-A state is not symmetric: steering from the accelerated side differs.
  const TwoQubitState first = accelerate(bell_phi_plus(), {0.5, Scenario::FirstOnly});
  EXPECT_GT(std::abs(naqc_sum(first, Subsystem::A) - naqc_sum(first, Subsystem::B)), 1e-3);
}

TEST(Measures, MonotoneAndOrderedWithoutPt) {
  double prev_first = 2.0, prev_both = 2.0;
  for (const double r : r_grid()) {
    const double first = negativity(accelerate(bell_phi_plus(), {r, Scenario::FirstOnly}));
    const double both = negativity(accelerate(bell_phi_plus(), {r, Scenario::Both}));
    EXPECT_LE(first, prev_first + 1e-12);
    EXPECT_LE(both, prev_both + 1e-12);
    EXPECT_LE(both, first + 1e-12);
    prev_first = first;
    prev_both = both;
  }
}
