#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "rgagrover/gates.hpp"
#include "rgagrover/reduced.hpp"

using namespace rgagrover;
using std::numbers::pi;

namespace {

void expect_mat_near(const Mat2& m, std::initializer_list<cplx> want, double tol) {
  int i = 0;
  for (cplx w : want) {
    EXPECT_NEAR(std::abs(m.a[static_cast<std::size_t>(i)] - w), 0.0, tol) << "entry " << i;
    ++i;
  }
}

}  // namespace

TEST(Gates, HExpCount) {
  GateSequence s{{{Generator::HProj, 1.0}, {Generator::Psi0Proj, 2.0}, {Generator::HProj, 3.0}}};
  EXPECT_EQ(s.size(), 3u);
  EXPECT_EQ(s.h_exp_count(), 2u);
  EXPECT_EQ(to_string(Generator::HProj), "H");
  EXPECT_EQ(to_string(Generator::Psi0Proj), "PSI0");
}

TEST(Reduced, EPsi0AtPi) {
  // I - 2Ψ0 with Ψ0 = [[1/4, 3/4], [1/4, 3/4]].
  expect_mat_near(e_psi0(pi, 0.25), {0.5, -1.5, -0.5, -0.5}, 1e-15);
}

TEST(Reduced, EHIsDiagonalPhase) {
  expect_mat_near(e_h(pi / 2), {cplx{0, 1}, 0.0, 0.0, 1.0}, 1e-15);
  expect_mat_near(e_h(0.0), {1.0, 0.0, 0.0, 1.0}, 0.0);
}

TEST(Reduced, Psi0IsIdempotent) {
  const Mat2 p = psi0_matrix(0.3);
  EXPECT_LT(max_abs_diff(p * p, p), 1e-15);
}

TEST(Reduced, TransferMatrixOrder) {
  // Leftmost gate is the leftmost factor.
  const GateSequence s{{{Generator::HProj, 0.7}, {Generator::Psi0Proj, -1.1}}};
  const Mat2 want = e_h(0.7) * e_psi0(-1.1, 0.2);
  EXPECT_LT(max_abs_diff(transfer_matrix(s, 0.2), want), 1e-15);
  EXPECT_EQ(max_abs_diff(transfer_matrix(GateSequence{}, 0.2), Mat2::identity()), 0.0);
}

TEST(Reduced, InitialState) {
  const PlaneState s = PlaneState::initial(1.0 / 64.0);
  EXPECT_DOUBLE_EQ(s.q(), 0.015625);
  EXPECT_DOUBLE_EQ(s.weighted_norm(), 1.0);
  const GradCoords g = grad_coords(s);
  EXPECT_DOUBLE_EQ(g.x, 1.0);
  EXPECT_DOUBLE_EQ(g.y, 0.0);
}

TEST(Reduced, GradientCoordinatesAtTarget) {
  // (α, β) = (1/sqrt(q0), 0) is the target state.
  const double q0 = 0.25;
  const PlaneState t{cplx{2.0}, cplx{0.0}, q0};
  EXPECT_DOUBLE_EQ(t.q(), 1.0);
  const GradCoords g = grad_coords(t);
  EXPECT_EQ(g.x, 0.0);
  EXPECT_EQ(g.y, 0.0);
}

TEST(Reduced, GradNormFormula) {
  EXPECT_NEAR(grad_norm(0.5), std::sqrt(0.5), 1e-16);
  EXPECT_EQ(grad_norm(0.0), 0.0);
  EXPECT_EQ(grad_norm(1.0), 0.0);
  EXPECT_THROW(grad_norm(1.1), std::invalid_argument);
  EXPECT_THROW(grad_norm(-0.1), std::invalid_argument);
}

TEST(Reduced, PlaneStepPreservesNorm) {
  const double q0 = 0.1;
  PlaneState s = PlaneState::initial(q0);
  const Mat2 m = e_h(0.4) * e_psi0(1.3, q0) * e_h(-2.0);
  for (int i = 0; i < 1000; ++i) s = plane_step(s, m);
  EXPECT_NEAR(s.weighted_norm(), 1.0, 1e-12);
}

TEST(Reduced, PlaneStepRejectsDrift) {
  Mat2 m;
  m(0, 0) = 1.01;
  EXPECT_THROW(plane_step(PlaneState::initial(0.5), m), NormalizationDrift);
}

TEST(Reduced, GroverIterationFromUniformAtNFour) {
  // (I - 2ψ0)(I - 2H) maps |ψ0⟩ onto the marked item for N = 4, M = 1.
  const double q0 = 0.25;
  const PlaneState s = plane_step(PlaneState::initial(q0), e_psi0(pi, q0) * e_h(pi));
  EXPECT_NEAR(s.q(), 1.0, 1e-15);
}
