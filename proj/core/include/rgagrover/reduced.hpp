#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <string>

#include "rgagrover/gates.hpp"

namespace rgagrover {

using cplx = std::complex<double>;

/// Row-major 2x2 complex matrix acting on Grover-plane coordinates (alpha, beta).
struct Mat2 {
  std::array<cplx, 4> a{cplx{1.0}, cplx{0.0}, cplx{0.0}, cplx{1.0}};

  static Mat2 identity() { return {}; }

  cplx operator()(int row, int col) const { return a[static_cast<std::size_t>(2 * row + col)]; }
  cplx& operator()(int row, int col) { return a[static_cast<std::size_t>(2 * row + col)]; }

  friend Mat2 operator*(const Mat2& l, const Mat2& r);
};

/// Max-abs entrywise distance; used by tests and zero-step checks.
double max_abs_diff(const Mat2& l, const Mat2& r);

/// State |ψ⟩ = α u + β v in the orthogonal but unnormalized basis
/// u = H|ψ0⟩, v = (I - H)|ψ0⟩ with ||u||² = q0 and ||v||² = 1 - q0.
struct PlaneState {
  cplx alpha{1.0};
  cplx beta{1.0};
  double q0 = 0.5;

  /// |ψ0⟩ itself: (α, β) = (1, 1).
  static PlaneState initial(double q0) { return PlaneState{cplx{1.0}, cplx{1.0}, q0}; }

  double q() const { return q0 * std::norm(alpha); }
  cplx z() const { return alpha * std::conj(beta); }
  double weighted_norm() const { return q0 * std::norm(alpha) + (1.0 - q0) * std::norm(beta); }
};

struct GradCoords {
  double x = 0.0;
  double y = 0.0;
};

/// Raised by plane_step when the weighted norm drifts by more than 1e-8.
class NormalizationDrift : public std::runtime_error {
 public:
  explicit NormalizationDrift(const std::string& what) : std::runtime_error(what) {}
};

/// diag(e^{iθ}, 1)
Mat2 e_h(double theta);

/// [[q0, 1-q0], [q0, 1-q0]], the matrix of ψ0 in the {u, v} basis.
Mat2 psi0_matrix(double q0);

/// I + (e^{iθ} - 1) Ψ0
Mat2 e_psi0(double theta, double q0);

/// Ordered product of the gate matrices; the leftmost gate is the leftmost factor.
Mat2 transfer_matrix(const GateSequence& gates, double q0);

/// (α, β) <- m (α, β). Never renormalizes; throws NormalizationDrift instead.
PlaneState plane_step(const PlaneState& state, const Mat2& m);

GradCoords grad_coords(const PlaneState& state);

/// sqrt(2 q (1 - q)). Throws std::invalid_argument for q outside [0, 1] beyond 1e-12.
double grad_norm(double q);

}  // namespace rgagrover
