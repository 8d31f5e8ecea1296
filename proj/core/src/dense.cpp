#include "rgagrover/dense.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace rgagrover {

namespace {

constexpr double kUnitaryTol = 1e-8;
constexpr double kPlaneTol = 1e-8;

const cplx kI{0.0, 1.0};

DenseOp commutator(const DenseOp& a, const DenseOp& b) { return a * b - b * a; }

}  // namespace

DenseOperators build_operators(const GroverInstance& inst, int max_qubits) {
  if (inst.n > max_qubits) {
    throw std::length_error("dense oracle capped at n = " + std::to_string(max_qubits) +
                            " qubits, got n = " + std::to_string(inst.n));
  }
  if (!inst.marked) {
    throw std::invalid_argument("dense oracle needs an explicit marked set");
  }
  const auto N = static_cast<Eigen::Index>(inst.N);
  DenseOperators ops;
  ops.H = DenseOp::Zero(N, N);
  for (std::uint64_t i : *inst.marked) {
    ops.H(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = 1.0;
  }
  ops.psi0_ket = DenseKet::Constant(N, cplx{1.0 / std::sqrt(static_cast<double>(N))});
  ops.psi0 = ops.psi0_ket * ops.psi0_ket.adjoint();
  ops.X0 = commutator(ops.H, ops.psi0);
  ops.Y0 = kI * commutator(ops.H, ops.X0);
  ops.q0 = inst.q0;
  ops.c0 = constants(inst).c0;
  ops.first_marked = inst.marked->front();
  return ops;
}

double frob_inner(const DenseOp& a, const DenseOp& b) {
  return (a.conjugate().cwiseProduct(b)).sum().real();
}

double unitarity_defect(const DenseOp& u) {
  return (u.adjoint() * u - DenseOp::Identity(u.rows(), u.cols())).norm();
}

DenseOp dense_gate(const Gate& gate, const DenseOperators& ops) {
  const DenseOp& p = gate.generator == Generator::HProj ? ops.H : ops.psi0;
  const cplx f = std::polar(1.0, gate.angle) - 1.0;
  return DenseOp::Identity(p.rows(), p.cols()) + f * p;
}

DenseOp dense_sequence(const GateSequence& gates, const DenseOperators& ops) {
  const auto N = ops.H.rows();
  return left_apply(gates, DenseOp::Identity(N, N), ops);
}

DenseOp left_apply(const GateSequence& gates, DenseOp u, const DenseOperators& ops) {
  // H is a diagonal 0/1 projector and ψ0 is rank one, so each factor costs O(N^2)
  // instead of a full matrix product. The rightmost gate is applied first.
  for (auto it = gates.gates.rbegin(); it != gates.gates.rend(); ++it) {
    const cplx f = std::polar(1.0, it->angle) - 1.0;
    if (it->generator == Generator::HProj) {
      for (Eigen::Index i = 0; i < u.rows(); ++i) {
        if (ops.H(i, i) != 0.0) u.row(i) *= (1.0 + f);
      }
    } else {
      const Eigen::RowVectorXcd row = ops.psi0_ket.adjoint() * u;
      u.noalias() += f * ops.psi0_ket * row;
    }
  }
  return u;
}

double cost(const DenseOp& u, const DenseOperators& ops) {
  const DenseKet psi = u * ops.psi0_ket;
  return psi.dot(ops.H * psi).real();
}

DenseOp euclid_grad(const DenseOp& u, const DenseOperators& ops) {
  return 2.0 * ops.H * u * ops.psi0;
}

DenseOp riemannian_grad(const DenseOp& u, const DenseOperators& ops) {
  const double defect = unitarity_defect(u);
  if (!(defect <= kUnitaryTol)) {
    throw std::invalid_argument("riemannian_grad needs a unitary input (defect " +
                                std::to_string(defect) + ")");
  }
  return riemannian_grad_ket(u * ops.psi0_ket, ops);
}

DenseOp riemannian_grad_ket(const DenseKet& psi, const DenseOperators& ops) {
  // [H, ρ]_ij = (h_i - h_j) ρ_ij for diagonal H.
  const Eigen::VectorXd h = ops.H.diagonal().real();
  DenseOp g = psi * psi.adjoint();
  for (Eigen::Index j = 0; j < g.cols(); ++j) {
    g.col(j).array() *= (h.array() - h(j));
  }
  return g;
}

double plane_residual(const DenseOp& g, const DenseOperators& ops) {
  const double c2 = ops.c0 * ops.c0;
  const double x = frob_inner(ops.X0, g) / c2;
  const double y = frob_inner(ops.Y0, g) / c2;
  return (g - x * ops.X0 - y * ops.Y0).norm();
}

GradCoords decompose_in_plane(const DenseOp& g, const DenseOperators& ops) {
  const double c2 = ops.c0 * ops.c0;
  const GradCoords out{frob_inner(ops.X0, g) / c2, frob_inner(ops.Y0, g) / c2};
  const double residual = (g - out.x * ops.X0 - out.y * ops.Y0).norm();
  if (!(residual <= kPlaneTol)) {
    throw std::domain_error("gradient has a component of norm " + std::to_string(residual) +
                            " outside span{X0, Y0}; U is not reachable");
  }
  return out;
}

GradCoords grad_coords_dense(const DenseOp& u, const DenseOperators& ops) {
  return decompose_in_plane(riemannian_grad(u, ops), ops);
}

GradCoords grad_coords_dense_ket(const DenseKet& psi, const DenseOperators& ops) {
  return decompose_in_plane(riemannian_grad_ket(psi, ops), ops);
}

DenseOp exp_map_step(const DenseOp& u, double t, const DenseOperators& ops) {
  const DenseOp g = riemannian_grad(u, ops);
  const double lambda = g.norm() / std::sqrt(2.0);
  if (lambda == 0.0 || t == 0.0) {
    return u;
  }
  const auto N = u.rows();
  const DenseOp e = DenseOp::Identity(N, N) + (std::sin(t * lambda) / lambda) * g +
                    ((1.0 - std::cos(t * lambda)) / (lambda * lambda)) * (g * g);
  DenseOp out = e * u;
  const double defect = unitarity_defect(out);
  if (!(defect <= 1e-10)) {
    throw std::runtime_error("exponential-map update lost unitarity (defect " +
                             std::to_string(defect) + ")");
  }
  return out;
}

DenseOp random_reachable(const DenseOperators& ops, std::mt19937_64& rng, int max_gates) {
  std::uniform_int_distribution<int> count(1, max_gates);
  std::uniform_int_distribution<int> which(0, 1);
  // (-π, π]: mirror a draw from [-π, π) about zero.
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  const int k = count(rng);
  GateSequence seq;
  for (int i = 0; i < k; ++i) {
    const Generator g = which(rng) == 0 ? Generator::HProj : Generator::Psi0Proj;
    seq.gates.push_back({g, -angle(rng)});
  }
  return dense_sequence(seq, ops);
}

EuclidLipschitzAudit check_euclid_lipschitz(const GroverInstance& inst, int samples,
                                            std::uint64_t seed) {
  const DenseOperators ops = build_operators(inst);
  const auto N = ops.H.rows();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  auto random_matrix = [&] {
    DenseOp m(N, N);
    for (Eigen::Index i = 0; i < N; ++i)
      for (Eigen::Index j = 0; j < N; ++j) m(i, j) = cplx{gauss(rng), gauss(rng)};
    return m;
  };

  EuclidLipschitzAudit audit;
  audit.samples = samples;
  for (int s = 0; s < samples; ++s) {
    const DenseOp u1 = random_matrix();
    const DenseOp u2 = random_matrix();
    const double ratio = (euclid_grad(u1, ops) - euclid_grad(u2, ops)).norm() / (u1 - u2).norm();
    audit.max_ratio = std::max(audit.max_ratio, ratio);
  }

  DenseKet v = DenseKet::Zero(N);
  v(static_cast<Eigen::Index>(ops.first_marked)) = 1.0;
  const DenseOp u2 = random_matrix();
  const DenseOp u1 = u2 + v * ops.psi0_ket.adjoint();
  audit.tight_ratio = (euclid_grad(u1, ops) - euclid_grad(u2, ops)).norm() / (u1 - u2).norm();
  return audit;
}

}  // namespace rgagrover
