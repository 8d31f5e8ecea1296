#pragma once

#include <complex>
#include <vector>

#include "rgagrover/gates.hpp"
#include "rgagrover/instance.hpp"
#include "rgagrover/reduced.hpp"

namespace rgagrover {

inline constexpr int kDefaultStatevectorCap = 26;

/// Dense amplitude vector over the N computational basis states.
struct FullState {
  std::vector<cplx> amplitudes;

  std::size_t size() const { return amplitudes.size(); }
  double norm_squared() const;
};

/// |ψ0⟩ = N^{-1/2} Σ|x⟩. Throws std::length_error above `max_qubits`.
FullState uniform_state(const GroverInstance& inst, int max_qubits = kDefaultStatevectorCap);

/// |ψ*⟩ = M^{-1/2} Σ_{x∈S}|x⟩.
FullState target_state(const GroverInstance& inst, int max_qubits = kDefaultStatevectorCap);

/// e^{iθ H}: phase e^{iθ} on every marked amplitude, O(M).
void apply_h_exp(FullState& state, double theta, const GroverInstance& inst);

/// e^{iθ ψ0} = I + (e^{iθ} - 1)|ψ0⟩⟨ψ0|, O(N).
void apply_psi0_exp(FullState& state, double theta);

/// Applies a fragment given in operator order, so the rightmost gate acts first.
void apply_gates(FullState& state, const GateSequence& gates, const GroverInstance& inst);

/// Applies one gate.
void apply_gate(FullState& state, const Gate& gate, const GroverInstance& inst);

/// Σ_{x∈S} |ψ_x|².
double success_prob(const FullState& state, const GroverInstance& inst);

/// ⟨a|b⟩
cplx inner(const FullState& a, const FullState& b);

/// Norm of the component of `state` outside span{|ψ0⟩, H|ψ0⟩}.
double plane_residual(const FullState& state, const GroverInstance& inst);

/// Coordinates (α, β) of the projection of `state` onto the Grover plane in the
/// unnormalized {H|ψ0⟩, (I-H)|ψ0⟩} basis, computed from the amplitudes in O(N).
PlaneState plane_coords(const FullState& state, const GroverInstance& inst);

}  // namespace rgagrover
