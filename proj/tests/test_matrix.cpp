#include <gtest/gtest.h>

#include <concepts>
#include <random>

#include "accelqc/matrix.hpp"
#include "accelqc/ptsym.hpp"
#include "accelqc/unruh.hpp"
#include "oracles.hpp"

using namespace accelqc;

namespace {

Matrix4 bell() { return bell_phi_plus().matrix(); }

}  // namespace

TEST(Matrix, MultiplicationIdentities) {
  EXPECT_EQ(Matrix2::identity() * Matrix2::identity(), Matrix2::identity());
  EXPECT_EQ(pauli::x() * pauli::x(), Matrix2::identity());
  // sigma_x sigma_y = i sigma_z, multiplied out by hand
  EXPECT_EQ(mat_mul(pauli::x(), pauli::y()), kI * pauli::z());
}

TEST(Matrix, MixedDimensionsDoNotCompile) {
  static_assert(!std::invocable<decltype([](const auto& a, const auto& b) -> decltype(a * b) { return a * b; }),
                                const Matrix2&, const Matrix4&>);
  static_assert(std::invocable<decltype([](const auto& a, const auto& b) -> decltype(a * b) { return a * b; }),
                               const Matrix2&, const Matrix2&>);
}

TEST(Matrix, FromRowsRejectsWrongShape) {
  EXPECT_THROW(Matrix2::from_rows({{1.0, 0.0}}), DimensionError);
  EXPECT_THROW(Matrix2::from_rows({{1.0, 0.0}, {0.0, 1.0, 2.0}}), DimensionError);
  EXPECT_THROW(Matrix4::from_rows({{1.0, 0.0}, {0.0, 1.0}}), DimensionError);
}

TEST(Matrix, Dagger) {
  EXPECT_EQ(dagger(pauli::y()), pauli::y());
  EXPECT_EQ(dagger(kI * Matrix2::identity()), -kI * Matrix2::identity());

  std::mt19937_64 rng(7);
  std::normal_distribution<double> g;
  for (int n = 0; n < 50; ++n) {
    Matrix4 a;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) a(i, j) = {g(rng), g(rng)};
    EXPECT_EQ(dagger(dagger(a)), a);
  }
}

TEST(Matrix, PtOperatorIsNotUnitary) {
  const Matrix2 u = u_pt({std::numbers::pi / 4, 1.0});
  EXPECT_GT(max_abs_diff(dagger(u) * u, Matrix2::identity()), 0.1);
}

TEST(Matrix, Kron) {
  EXPECT_EQ(kron(Matrix2::identity(), Matrix2::identity()), Matrix4::identity());
  EXPECT_EQ(kron(pauli::z(), Matrix2::identity()), Matrix4::diagonal({1.0, 1.0, -1.0, -1.0}));

  // sigma_x (x) sigma_x |00> = |11>
  const Matrix4 xx = kron(pauli::x(), pauli::x());
  const std::array<Complex, 4> ket00{1.0, 0.0, 0.0, 0.0};
  std::array<Complex, 4> out{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) out[i] += xx(i, j) * ket00[j];
  EXPECT_EQ(out, (std::array<Complex, 4>{0.0, 0.0, 0.0, 1.0}));
}

TEST(Matrix, KronOrderingContract) {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> g;
  for (int n = 0; n < 20; ++n) {
    Matrix2 a, b;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        a(i, j) = {g(rng), g(rng)};
        b(i, j) = {g(rng), g(rng)};
      }
    const Matrix4 k = kron(a, b);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t p = 0; p < 2; ++p)
          for (std::size_t q = 0; q < 2; ++q) EXPECT_EQ(k(2 * i + p, 2 * j + q), a(i, j) * b(p, q));
  }
}

TEST(Matrix, Trace) {
  EXPECT_EQ(trace(Matrix4::identity()), Complex(4.0));
  EXPECT_EQ(trace(pauli::x()), Complex(0.0));
  EXPECT_NEAR(std::abs(trace(bell()) - 1.0), 0.0, 1e-15);
}

TEST(Matrix, PartialTrace) {
  const Matrix2 rho_a = Matrix2::from_rows({{0.7, Complex(0.1, 0.2)}, {Complex(0.1, -0.2), 0.3}});
  const Matrix2 rho_b = Matrix2::from_rows({{0.4, 0.25}, {0.25, 0.6}}) * 2.0;  // trace 2
  EXPECT_LT(max_abs_diff(partial_trace(kron(rho_a, rho_b), Subsystem::A), rho_a * trace(rho_b)), 1e-15);
  EXPECT_LT(max_abs_diff(partial_trace(kron(rho_a, rho_b), Subsystem::B), rho_b * trace(rho_a)), 1e-15);

  EXPECT_LT(max_abs_diff(partial_trace(bell(), Subsystem::B), Matrix2::identity() * 0.5), 1e-15);

  // Accelerated-A state at r = pi/6 (printed placement): the diagonal blocks sum to
  // diag(cos^2/2 + sin^2/2, 1/2) = I/2.
  const double r = std::numbers::pi / 6;
  Matrix4 m;
  m(0, 0) = std::pow(std::cos(r), 2) / 2;
  m(0, 3) = m(3, 0) = std::cos(r) / 2;
  m(1, 1) = std::pow(std::sin(r), 2) / 2;
  m(3, 3) = 0.5;
  EXPECT_LT(max_abs_diff(partial_trace(m, Subsystem::A), Matrix2::identity() * 0.5), 1e-15);
}

TEST(Matrix, PartialTranspose) {
  const Matrix4 mixed = Matrix4::identity() * 0.25;
  EXPECT_EQ(partial_transpose(mixed, Subsystem::B), mixed);

  const Matrix4 pt = partial_transpose(bell(), Subsystem::B);
  EXPECT_EQ(pt(0, 3), Complex(0.0));
  EXPECT_EQ(pt(3, 0), Complex(0.0));
  EXPECT_EQ(pt(1, 2), Complex(0.5));
  EXPECT_EQ(pt(2, 1), Complex(0.5));
  EXPECT_EQ(pt(0, 0), Complex(0.5));
  EXPECT_EQ(pt(3, 3), Complex(0.5));
}

TEST(Matrix, PartialTransposeInvolutionAndTrace) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  for (int n = 0; n < 200; ++n) {
    Matrix4 a;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) a(i, j) = {g(rng), g(rng)};
    for (const Subsystem s : {Subsystem::A, Subsystem::B}) {
      EXPECT_EQ(partial_transpose(partial_transpose(a, s), s), a);
      EXPECT_NEAR(std::abs(trace(partial_transpose(a, s)) - trace(a)), 0.0, 1e-14);
    }
    // Transposing both sides is the full transpose.
    const Matrix4 both = partial_transpose(partial_transpose(a, Subsystem::A), Subsystem::B);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(both(i, j), a(j, i));
  }
}

TEST(Matrix, SwapSubsystems) {
  const Matrix2 a = Matrix2::from_rows({{0.7, 0.1}, {0.1, 0.3}});
  const Matrix2 b = Matrix2::from_rows({{0.2, kI * 0.1}, {-kI * 0.1, 0.8}});
  EXPECT_EQ(swap_subsystems(kron(a, b)), kron(b, a));
}
