#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rgagrover/instance.hpp"
#include "rgagrover/optimizer.hpp"
#include "rgagrover/retraction.hpp"

namespace rgagrover {

/// Outcome of one numerical check. passed == (max_violation <= tolerance).
struct CheckReport {
  std::string name;
  int samples = 0;
  double max_violation = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string details;
  std::uint64_t seed = 0;
};

CheckReport make_report(std::string name, int samples, double max_violation, double tolerance,
                        std::string details = {}, std::uint64_t seed = 0);

/// "PASS name samples=.. max_violation=.. tolerance=.. details"
std::string format_report(const CheckReport& report);

inline constexpr double kOracleTol = 1e-10;
inline constexpr double kInequalitySlack = 1e-12;

// Oracle equivalence.

/// Runs the reduced, statevector and (for n <= 8) dense engines side by side for
/// `iters` steps. Each engine derives its own gradient coordinates; only the step
/// size t_k is taken from the reduced engine. The violation is the largest discrepancy
/// in q_k (statevector, dense) and in the dense (x_k, y_k); the statevector (x_k, y_k)
/// discrepancy goes into the details. Stops early once |1 - q| < 1e-13.
CheckReport verify_reduced_vs_full(const GroverInstance& inst, RetractionKind kind,
                                   const StepPolicy& policy, int iters, double tol = kOracleTol);

/// Largest distance of a statevector iterate from the Grover plane along the same run.
CheckReport verify_plane_confinement(const GroverInstance& inst, RetractionKind kind,
                                     const StepPolicy& policy, int iters, double tol = kOracleTol);

/// Fixed-step statevector runs for each seed's marked set; q_k must agree across seeds.
CheckReport verify_marked_set_invariance(int n, std::uint64_t M, std::span<const std::uint64_t> seeds,
                                         int iters = 50, double tol = kOracleTol);

// Retractions.

/// transfer_matrix(retraction_gates(kind, 0, x, y)) == I for random (x, y), plus the
/// dense product at n = 3.
CheckReport verify_zero_step(RetractionKind kind, int samples, std::uint64_t seed,
                             double tol = 1e-12);

/// Finite differences d(h) = ||(V(h) U - U)/h - η̃ U||_F at h = 1e-2, 1e-3, 1e-4 on random
/// reachable U (dense, 2 <= n <= 5) and unit (x, y). Returns two reports: the largest
/// d(1e-4) against 1e-3, and the shortfall 1 - order against 0.1.
std::vector<CheckReport> verify_retraction_first_order(RetractionKind kind, int samples,
                                                       std::uint64_t seed);

// Geometry.

/// ||X0|| = ||Y0|| = c0 and ⟨X0, Y0⟩ = 0.
CheckReport verify_xy_norms(const GroverInstance& inst, double tol = 1e-12);

/// ||[H, ψ_U]||_F = sqrt(2 q (1 - q)) and the off-plane residual on random reachable U.
CheckReport verify_grad_norm_identity(const GroverInstance& inst, int samples, std::uint64_t seed,
                                      double tol = kOracleTol);

/// Five-factor bounds ||Γ - I|| <= ||η̃|| and ||Γ - I - η̃|| <= ||η̃||² / (4 c0) over random
/// instances and directions, and the limit ratios at ||η̃|| = 1e-3 within 5%. Returns the
/// inequality report and the ratio report.
std::vector<CheckReport> verify_tight_bounds(int samples, std::uint64_t seed);

/// |f(R_U(η)) - f(U) - ⟨grad f(U), η⟩| <= (L_Rie / 2) ||η||² with R_U the five-factor
/// retraction, for random instances, reachable U and ||η̃|| <= 1.
CheckReport verify_pullback_lipschitz(int samples, std::uint64_t seed, double slack = kOracleTol);

/// Random complex pairs with ratio <= 2, and the tight pair at ratio 2 to 1e-12.
std::vector<CheckReport> verify_euclid_lipschitz(const GroverInstance& inst, int samples,
                                                 std::uint64_t seed);

// Convergence theory on recorded trajectories.

/// q_{k+1} >= q_k - slack.
CheckReport check_monotone(const Trajectory& traj, double slack = kInequalitySlack);

/// q_{k+1} >= q_k + q_k (1 - q_k) / L_Rie - slack.
CheckReport check_ascent_recurrence(const Trajectory& traj, double slack = kInequalitySlack);

/// grad_norm² >= 1 - q_k - slack on records with q_k >= 1/2.
CheckReport check_pl_inequality(const Trajectory& traj, double slack = kInequalitySlack);

/// Converged with T <= ceil(6 L_Rie ln(1/ε)).
CheckReport check_best_complexity(const Trajectory& traj);

/// min gradNorm over the first ceil(2 L_Rie / ε²) records is <= ε.
CheckReport check_baseline_complexity(const Trajectory& grad_run, double slack = kInequalitySlack);

int best_complexity_bound(double l_rie, double epsilon);
std::int64_t baseline_complexity_bound(double l_rie, double epsilon);

/// (a) monotone and (b) ascent recurrence for fixed-step runs, (c) PL for every run,
/// (d) best-complexity when ε <= q0, and (e) the baseline bound when ε >= 1e-2 via a
/// separate GradNorm run of the same kind.
std::vector<CheckReport> verify_inequality_suite(const GroverInstance& inst,
                                                 std::span<const Trajectory> trajectories);

/// Corrupted copies of a valid trajectory, one per inequality check. Every report must fail.
std::vector<CheckReport> negative_control_suite();

// Named suites for the command line.

/// reduced-vs-full, retraction, geometry, inequalities, invariance, negative-control.
std::vector<std::string> suite_names();

/// Throws std::invalid_argument for an unknown name. "all" runs every suite except
/// negative-control.
std::vector<CheckReport> run_suite(std::string_view name, std::uint64_t seed);

}  // namespace rgagrover
