#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rgagrover/instance.hpp"
#include "rgagrover/reduced.hpp"
#include "rgagrover/retraction.hpp"

namespace rgagrover {

/// t_k = 1 / L_Rie for every iteration.
struct FixedInverseLipschitz {};

/// t_k = argmax_{t >= 0} q(R_{U_k}(t grad f(U_k))), searched on [0, window_periods * 4π / R]
/// with R = sqrt(x² + y²): a uniform grid of `grid_points` samples, then golden-section
/// refinement of the best bracket.
struct ExactLineSearch {
  int grid_points = 2048;
  int refine_iters = 60;
  double window_periods = 4.0;
};

using StepPolicy = std::variant<FixedInverseLipschitz, ExactLineSearch>;

/// "fixed" or "els"
std::string_view policy_name(const StepPolicy& policy);
StepPolicy parse_policy(std::string_view text);

/// Throws std::invalid_argument when grid_points < 16, refine_iters < 10 or window_periods < 1.
void validate(const ExactLineSearch& params);

/// CostGap stops on |1 - q_k| < ε, GradNorm on ||grad f(U_k)||_F <= ε.
enum class Criterion { CostGap, GradNorm };

std::string_view to_string(Criterion c);
Criterion parse_criterion(std::string_view text);

/// State k of a run. Record 0 is the initial state; the last record is the state
/// the run stopped at and carries t = 0.
struct IterationRecord {
  int k = 0;
  double q = 0.0;
  double grad_norm = 0.0;
  double x = 0.0;
  double y = 0.0;
  double t = 0.0;                // step taken from this state
  std::int64_t h_exp_calls = 0;  // cumulative calls spent to reach this state
};

struct Trajectory {
  std::string method;  // "r5-fixed", "r6-els", ... or "classic" for the fixed-angle baseline
  int n = 0;
  std::uint64_t N = 0;
  std::uint64_t M = 0;
  double q0 = 0.0;
  double l_rie = 0.0;
  RetractionKind kind = RetractionKind::FiveFactor;
  StepPolicy policy = FixedInverseLipschitz{};
  double epsilon = 0.0;
  Criterion criterion = Criterion::CostGap;
  std::vector<IterationRecord> records;
  bool converged = false;
  std::int64_t total_h_exp_calls = 0;

  /// Number of retraction steps taken (T).
  int iterations() const { return records.empty() ? 0 : static_cast<int>(records.size()) - 1; }
  const IterationRecord& final_record() const { return records.back(); }
};

double fixed_step(const DerivedConstants& consts);

/// Method label used in CSV output, e.g. "r5-fixed" or "r8-els".
std::string method_label(RetractionKind kind, const StepPolicy& policy);

/// Default iteration cap: 10 * ceil(6 L_Rie ln(1/ε)), at least 100.
int default_max_iter(const DerivedConstants& consts, double epsilon);

/// Success probability after one retraction step of length t from `state`.
double q_after_step(const PlaneState& state, RetractionKind kind, double t);

/// Throws std::invalid_argument when the gradient coordinates of `state` are both zero.
double exact_line_search(const PlaneState& state, RetractionKind kind, const ExactLineSearch& params);

/// Riemannian gradient ascent with a Grover-compatible retraction, simulated exactly in
/// the Grover plane from U_0 = I. Non-convergence within max_iter is reported through
/// Trajectory::converged, not thrown.
Trajectory rga_run(const GroverInstance& inst, RetractionKind kind, const StepPolicy& policy,
                   double epsilon, Criterion criterion = Criterion::CostGap,
                   std::optional<int> max_iter = std::nullopt);

/// The gate fragments a trajectory appended, one per step, in iteration order.
std::vector<GateSequence> trajectory_gates(const Trajectory& traj);

}  // namespace rgagrover
