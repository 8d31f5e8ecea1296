#include "rgagrover/reduced.hpp"

#include <algorithm>
#include <cmath>

namespace rgagrover {

namespace {
constexpr double kDriftLimit = 1e-8;
constexpr double kUnitSlack = 1e-12;
}  // namespace

Mat2 operator*(const Mat2& l, const Mat2& r) {
  Mat2 out;
  out(0, 0) = l(0, 0) * r(0, 0) + l(0, 1) * r(1, 0);
  out(0, 1) = l(0, 0) * r(0, 1) + l(0, 1) * r(1, 1);
  out(1, 0) = l(1, 0) * r(0, 0) + l(1, 1) * r(1, 0);
  out(1, 1) = l(1, 0) * r(0, 1) + l(1, 1) * r(1, 1);
  return out;
}

double max_abs_diff(const Mat2& l, const Mat2& r) {
  double d = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    d = std::max(d, std::abs(l.a[i] - r.a[i]));
  }
  return d;
}

Mat2 e_h(double theta) {
  Mat2 m;
  m(0, 0) = std::polar(1.0, theta);
  return m;
}

Mat2 psi0_matrix(double q0) {
  Mat2 m;
  m(0, 0) = q0;
  m(0, 1) = 1.0 - q0;
  m(1, 0) = q0;
  m(1, 1) = 1.0 - q0;
  return m;
}

Mat2 e_psi0(double theta, double q0) {
  const cplx f = std::polar(1.0, theta) - 1.0;
  Mat2 m;
  m(0, 0) = 1.0 + f * q0;
  m(0, 1) = f * (1.0 - q0);
  m(1, 0) = f * q0;
  m(1, 1) = 1.0 + f * (1.0 - q0);
  return m;
}

Mat2 transfer_matrix(const GateSequence& gates, double q0) {
  Mat2 m;
  for (const Gate& g : gates.gates) {
    m = m * (g.generator == Generator::HProj ? e_h(g.angle) : e_psi0(g.angle, q0));
  }
  return m;
}

PlaneState plane_step(const PlaneState& state, const Mat2& m) {
  PlaneState next{m(0, 0) * state.alpha + m(0, 1) * state.beta,
                  m(1, 0) * state.alpha + m(1, 1) * state.beta, state.q0};
  const double drift = std::abs(next.weighted_norm() - 1.0);
  if (!(drift <= kDriftLimit)) {
    throw NormalizationDrift("weighted norm drifted by " + std::to_string(drift) +
                             " after a plane step");
  }
  return next;
}

GradCoords grad_coords(const PlaneState& state) {
  const cplx z = state.z();
  return {z.real(), z.imag()};
}

double grad_norm(double q) {
  if (!(q >= -kUnitSlack && q <= 1.0 + kUnitSlack)) {
    throw std::invalid_argument("cost value q = " + std::to_string(q) + " outside [0, 1]");
  }
  q = std::clamp(q, 0.0, 1.0);
  return std::sqrt(2.0 * q * (1.0 - q));
}

}  // namespace rgagrover
