#include "rgagrover/statevector.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rgagrover {

namespace {

void check_cap(const GroverInstance& inst, int max_qubits) {
  if (inst.n > max_qubits) {
    throw std::length_error("statevector simulation capped at n = " + std::to_string(max_qubits) +
                            " qubits, got n = " + std::to_string(inst.n));
  }
}

const std::vector<std::uint64_t>& require_marked(const GroverInstance& inst) {
  if (!inst.marked) {
    throw std::invalid_argument("statevector simulation needs an explicit marked set");
  }
  return *inst.marked;
}

// Σ over marked and over all amplitudes, with the scale 1/sqrt(N) applied.
struct PlaneSums {
  cplx marked;
  cplx total;
};

PlaneSums plane_sums(const FullState& state, const GroverInstance& inst) {
  const auto& marked = require_marked(inst);
  const double s = 1.0 / std::sqrt(static_cast<double>(state.size()));
  cplx total{0.0};
  for (const cplx& a : state.amplitudes) total += a;
  cplx in_marked{0.0};
  for (std::uint64_t i : marked) in_marked += state.amplitudes[i];
  return {in_marked * s, total * s};
}

}  // namespace

double FullState::norm_squared() const {
  double acc = 0.0;
  for (const cplx& a : amplitudes) acc += std::norm(a);
  return acc;
}

FullState uniform_state(const GroverInstance& inst, int max_qubits) {
  check_cap(inst, max_qubits);
  const double a = 1.0 / std::sqrt(static_cast<double>(inst.N));
  return FullState{std::vector<cplx>(static_cast<std::size_t>(inst.N), cplx{a})};
}

FullState target_state(const GroverInstance& inst, int max_qubits) {
  check_cap(inst, max_qubits);
  const auto& marked = require_marked(inst);
  FullState out{std::vector<cplx>(static_cast<std::size_t>(inst.N), cplx{0.0})};
  const double a = 1.0 / std::sqrt(static_cast<double>(inst.M));
  for (std::uint64_t i : marked) out.amplitudes[i] = a;
  return out;
}

void apply_h_exp(FullState& state, double theta, const GroverInstance& inst) {
  const auto& marked = require_marked(inst);
  const cplx phase = std::polar(1.0, theta);
  for (std::uint64_t i : marked) state.amplitudes[i] *= phase;
}

void apply_psi0_exp(FullState& state, double theta) {
  const double s = 1.0 / std::sqrt(static_cast<double>(state.size()));
  cplx c{0.0};
  for (const cplx& a : state.amplitudes) c += a;
  c *= s;  // ⟨ψ0|ψ⟩
  const cplx shift = (std::polar(1.0, theta) - 1.0) * c * s;
  for (cplx& a : state.amplitudes) a += shift;
}

void apply_gate(FullState& state, const Gate& gate, const GroverInstance& inst) {
  if (gate.generator == Generator::HProj) {
    apply_h_exp(state, gate.angle, inst);
  } else {
    apply_psi0_exp(state, gate.angle);
  }
}

void apply_gates(FullState& state, const GateSequence& gates, const GroverInstance& inst) {
  for (auto it = gates.gates.rbegin(); it != gates.gates.rend(); ++it) {
    apply_gate(state, *it, inst);
  }
}

double success_prob(const FullState& state, const GroverInstance& inst) {
  const auto& marked = require_marked(inst);
  double p = 0.0;
  for (std::uint64_t i : marked) p += std::norm(state.amplitudes[i]);
  return p;
}

cplx inner(const FullState& a, const FullState& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("inner product of states with different dimensions");
  }
  cplx acc{0.0};
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a.amplitudes[i]) * b.amplitudes[i];
  return acc;
}

PlaneState plane_coords(const FullState& state, const GroverInstance& inst) {
  const PlaneSums sums = plane_sums(state, inst);
  // ⟨u|ψ⟩ = α ||u||² and ⟨v|ψ⟩ = β ||v||² for the orthogonal basis u, v.
  const double q0 = inst.q0;
  return PlaneState{sums.marked / q0, (sums.total - sums.marked) / (1.0 - q0), q0};
}

double plane_residual(const FullState& state, const GroverInstance& inst) {
  // Explicit residual ψ - (α u + β v); u and v are s = N^{-1/2} on marked and
  // unmarked entries respectively. Subtracting norms instead would lose half the digits.
  const PlaneState p = plane_coords(state, inst);
  const auto& marked = *inst.marked;
  const double s = 1.0 / std::sqrt(static_cast<double>(state.size()));
  const cplx on_marked = p.alpha * s;
  const cplx off_marked = p.beta * s;
  double acc = 0.0;
  std::size_t next = 0;
  for (std::size_t j = 0; j < state.size(); ++j) {
    const bool is_marked = next < marked.size() && marked[next] == j;
    if (is_marked) ++next;
    acc += std::norm(state.amplitudes[j] - (is_marked ? on_marked : off_marked));
  }
  return std::sqrt(acc);
}

}  // namespace rgagrover
