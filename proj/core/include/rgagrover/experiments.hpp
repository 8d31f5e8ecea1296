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

/// A retraction paired with a step policy, labelled as in the sweep CSV ("r5-fixed", ...).
struct Method {
  RetractionKind kind = RetractionKind::FiveFactor;
  StepPolicy policy = FixedInverseLipschitz{};

  std::string label() const { return method_label(kind, policy); }
};

/// r5-fixed, r5-els, r6-els, r8-els
std::vector<Method> all_methods();

/// "all" or a comma-separated list of labels. Throws std::invalid_argument when the
/// list is empty or names an unknown method.
std::vector<Method> parse_methods(std::string_view text);

struct SweepRow {
  std::string method;
  RetractionKind kind = RetractionKind::FiveFactor;
  std::string policy;
  int n = 0;
  std::uint64_t N = 0;
  double sqrt_N = 0.0;
  double epsilon = 0.0;
  int iterations = 0;
  std::int64_t h_exp_calls = 0;  // iterations * h_exp_multiplier(kind)
  double runtime_seconds = 0.0;
  bool converged = false;
};

struct FitResult {
  std::string method;
  std::string x_variable;
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};

/// Ordinary least squares y = slope * x + intercept. r2 is 1 when the total
/// variance of ys is zero. Throws std::invalid_argument when fewer than two distinct
/// x values are given or the sizes differ.
FitResult fit_line(std::span<const double> xs, std::span<const double> ys);

/// One reduced-dynamics run with M = 1. `timing` off writes runtime_seconds = 0.
SweepRow run_row(const Method& method, int n, double epsilon, bool timing = true);

/// Rows for every (n, method), sorted by (method, n, epsilon).
std::vector<SweepRow> sweep_n(int n_min, int n_max, double epsilon, std::span<const Method> methods,
                              bool timing = true);

/// Rows for every (epsilon, method), sorted by (method, n, epsilon).
std::vector<SweepRow> sweep_eps(int n, std::span<const double> eps_list,
                                std::span<const Method> methods, bool timing = true);

/// 1e-2, 1e-3, ..., 1e-12
std::vector<double> default_eps_list();

/// Per method: h_exp_calls against sqrt_N over rows with n >= n_min_fit.
std::vector<FitResult> fit_sweep_n(std::span<const SweepRow> rows, int n_min_fit = 8);

/// Per method: h_exp_calls against log10(1/epsilon).
std::vector<FitResult> fit_sweep_eps(std::span<const SweepRow> rows);

/// Five-factor, fixed step, M = 1, CostGap.
Trajectory run_trajectory_experiment(int n = 6, double epsilon = 1e-4);

/// Fixed-angle Grover: iterates [Psi0Proj:π][HProj:π] in the reduced dynamics for
/// `iterations` steps, one H-exp call per step. Labelled "classic".
Trajectory classic_grover_baseline(const GroverInstance& inst, int iterations);

}  // namespace rgagrover
