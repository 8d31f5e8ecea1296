#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>

#include "rgagrover/gates.hpp"
#include "rgagrover/instance.hpp"
#include "rgagrover/reduced.hpp"

namespace rgagrover {

// Small-n dense matrix oracle. Everything here is O(N^2) or O(N^3) and exists to
// check the reduced and statevector engines against the matrix definitions.

inline constexpr int kDenseCap = 10;

using DenseOp = Eigen::MatrixXcd;
using DenseKet = Eigen::VectorXcd;

struct DenseOperators {
  DenseOp H;     // diagonal projector onto the marked set
  DenseOp psi0;  // |ψ0⟩⟨ψ0|
  DenseOp X0;    // [H, ψ0]
  DenseOp Y0;    // i [H, X0]
  DenseKet psi0_ket;
  double q0 = 0.0;
  double c0 = 0.0;
  std::uint64_t first_marked = 0;
};

/// Throws std::length_error above `max_qubits` and std::invalid_argument without a marked set.
DenseOperators build_operators(const GroverInstance& inst, int max_qubits = kDenseCap);

/// Re Tr(A† B), the real Frobenius inner product.
double frob_inner(const DenseOp& a, const DenseOp& b);

/// ||U† U - I||_F
double unitarity_defect(const DenseOp& u);

/// e^{iθP} = I + (e^{iθ} - 1) P for P ∈ {H, ψ0}.
DenseOp dense_gate(const Gate& gate, const DenseOperators& ops);

/// Ordered product of dense gates (operator order).
DenseOp dense_sequence(const GateSequence& gates, const DenseOperators& ops);

/// dense_sequence(gates) * u in O(len * N^2).
DenseOp left_apply(const GateSequence& gates, DenseOp u, const DenseOperators& ops);

/// f(U) = Tr(H U ψ0 U†)
double cost(const DenseOp& u, const DenseOperators& ops);

/// ∇f(U) = 2 H U ψ0 (Euclidean gradient, defined for any complex matrix).
DenseOp euclid_grad(const DenseOp& u, const DenseOperators& ops);

/// Skew-Hermitian part of the Riemannian gradient, [H, U ψ0 U†].
/// Throws std::invalid_argument when U is not unitary to 1e-8.
DenseOp riemannian_grad(const DenseOp& u, const DenseOperators& ops);

/// [H, |ψ⟩⟨ψ|] for a state vector.
DenseOp riemannian_grad_ket(const DenseKet& psi, const DenseOperators& ops);

/// Coordinates of G in the basis {X0, Y0}: x = ⟨X0, G⟩ / c0², y = ⟨Y0, G⟩ / c0².
/// Throws std::domain_error when G has a component off span{X0, Y0} above 1e-8.
GradCoords decompose_in_plane(const DenseOp& g, const DenseOperators& ops);

GradCoords grad_coords_dense(const DenseOp& u, const DenseOperators& ops);

/// Coordinates of [H, |ψ⟩⟨ψ|] for a state ψ = U|ψ0⟩; skips the O(N^3) unitarity check.
GradCoords grad_coords_dense_ket(const DenseKet& psi, const DenseOperators& ops);

/// Norm of the component of G outside span_R{X0, Y0}.
double plane_residual(const DenseOp& g, const DenseOperators& ops);

/// U <- e^{t [H, ψ_U]} U, the exponential-map update, via the closed form
/// e^{tG} = I + sin(tλ)/λ G + (1 - cos(tλ))/λ² G² with λ² = ||G||²_F / 2.
DenseOp exp_map_step(const DenseOp& u, double t, const DenseOperators& ops);

/// Applies 1..max_gates random HProj/Psi0Proj gates with angles uniform in (-π, π] to I.
DenseOp random_reachable(const DenseOperators& ops, std::mt19937_64& rng, int max_gates = 20);

struct EuclidLipschitzAudit {
  int samples = 0;
  double max_ratio = 0.0;    // over random complex pairs
  double tight_ratio = 0.0;  // for U1 - U2 = e_marked ⟨ψ0|
};

/// Audits ||∇f(U1) - ∇f(U2)||_F <= 2 ||U1 - U2||_F on random complex Gaussian pairs.
EuclidLipschitzAudit check_euclid_lipschitz(const GroverInstance& inst, int samples,
                                            std::uint64_t seed);

}  // namespace rgagrover
