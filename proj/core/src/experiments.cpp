#include "rgagrover/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <tuple>

namespace rgagrover {

std::vector<Method> all_methods() {
  return {
      {RetractionKind::FiveFactor, FixedInverseLipschitz{}},
      {RetractionKind::FiveFactor, ExactLineSearch{}},
      {RetractionKind::SixFactor, ExactLineSearch{}},
      {RetractionKind::EightFactor, ExactLineSearch{}},
  };
}

std::vector<Method> parse_methods(std::string_view text) {
  if (text == "all") return all_methods();
  std::vector<Method> out;
  const std::vector<Method> known = all_methods();
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    const std::string_view item = text.substr(pos, end - pos);
    if (!item.empty()) {
      auto it = std::find_if(known.begin(), known.end(),
                             [&](const Method& m) { return m.label() == item; });
      if (it == known.end()) {
        throw std::invalid_argument("unknown method '" + std::string(item) +
                                    "' (expected r5-fixed, r5-els, r6-els, r8-els or all)");
      }
      out.push_back(*it);
    }
    pos = end + 1;
  }
  if (out.empty()) {
    throw std::invalid_argument("method list is empty");
  }
  return out;
}

FitResult fit_line(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    throw std::invalid_argument("fit_line: xs and ys differ in length");
  }
  const double n = static_cast<double>(xs.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  if (xs.size() < 2 || sxx == 0.0) {
    throw std::invalid_argument("fit_line needs at least two distinct x values");
  }
  FitResult fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (fit.slope * xs[i] + fit.intercept);
    ss_res += r * r;
  }
  fit.r2 = syy == 0.0 ? 1.0 : std::clamp(1.0 - ss_res / syy, 0.0, 1.0);
  return fit;
}

SweepRow run_row(const Method& method, int n, double epsilon, bool timing) {
  const GroverInstance inst = make_instance(n, 1);
  const auto start = std::chrono::steady_clock::now();
  const Trajectory traj = rga_run(inst, method.kind, method.policy, epsilon);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

  SweepRow row;
  row.method = method.label();
  row.kind = method.kind;
  row.policy = std::string(policy_name(method.policy));
  row.n = n;
  row.N = inst.N;
  row.sqrt_N = std::sqrt(static_cast<double>(inst.N));
  row.epsilon = epsilon;
  row.iterations = traj.iterations();
  row.h_exp_calls = traj.total_h_exp_calls;
  row.runtime_seconds = timing ? elapsed.count() : 0.0;
  row.converged = traj.converged;
  return row;
}

namespace {

void sort_rows(std::vector<SweepRow>& rows) {
  std::sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
    return std::tie(a.method, a.n, a.epsilon) < std::tie(b.method, b.n, b.epsilon);
  });
}

template <typename XOf>
std::vector<FitResult> fit_by_method(std::span<const SweepRow> rows, const std::string& x_name,
                                     XOf x_of, int n_min) {
  std::map<std::string, std::pair<std::vector<double>, std::vector<double>>> groups;
  for (const SweepRow& r : rows) {
    if (r.n < n_min) continue;
    auto& [xs, ys] = groups[r.method];
    xs.push_back(x_of(r));
    ys.push_back(static_cast<double>(r.h_exp_calls));
  }
  std::vector<FitResult> out;
  for (const auto& [method, data] : groups) {
    FitResult fit = fit_line(data.first, data.second);
    fit.method = method;
    fit.x_variable = x_name;
    out.push_back(fit);
  }
  return out;
}

}  // namespace

std::vector<SweepRow> sweep_n(int n_min, int n_max, double epsilon, std::span<const Method> methods,
                              bool timing) {
  if (n_min < 1 || n_max < n_min) {
    throw std::invalid_argument("sweep_n needs 1 <= n_min <= n_max");
  }
  if (methods.empty()) {
    throw std::invalid_argument("method list is empty");
  }
  std::vector<SweepRow> rows;
  for (const Method& m : methods) {
    for (int n = n_min; n <= n_max; ++n) rows.push_back(run_row(m, n, epsilon, timing));
  }
  sort_rows(rows);
  return rows;
}

std::vector<SweepRow> sweep_eps(int n, std::span<const double> eps_list,
                                std::span<const Method> methods, bool timing) {
  if (eps_list.empty()) {
    throw std::invalid_argument("epsilon list is empty");
  }
  if (methods.empty()) {
    throw std::invalid_argument("method list is empty");
  }
  std::vector<SweepRow> rows;
  for (const Method& m : methods) {
    for (double eps : eps_list) rows.push_back(run_row(m, n, eps, timing));
  }
  sort_rows(rows);
  return rows;
}

std::vector<double> default_eps_list() {
  std::vector<double> out;
  for (int d = 2; d <= 12; ++d) out.push_back(std::pow(10.0, -d));
  return out;
}

std::vector<FitResult> fit_sweep_n(std::span<const SweepRow> rows, int n_min_fit) {
  return fit_by_method(rows, "sqrt_N", [](const SweepRow& r) { return r.sqrt_N; }, n_min_fit);
}

std::vector<FitResult> fit_sweep_eps(std::span<const SweepRow> rows) {
  return fit_by_method(
      rows, "log10_inv_epsilon", [](const SweepRow& r) { return std::log10(1.0 / r.epsilon); }, 0);
}

Trajectory run_trajectory_experiment(int n, double epsilon) {
  return rga_run(make_instance(n, 1), RetractionKind::FiveFactor, FixedInverseLipschitz{}, epsilon);
}

Trajectory classic_grover_baseline(const GroverInstance& inst, int iterations) {
  if (iterations < 0) {
    throw std::invalid_argument("iteration count must be >= 0");
  }
  const GateSequence pair{{{Generator::Psi0Proj, std::numbers::pi}, {Generator::HProj, std::numbers::pi}}};
  const Mat2 step = transfer_matrix(pair, inst.q0);

  Trajectory traj;
  traj.method = "classic";
  traj.n = inst.n;
  traj.N = inst.N;
  traj.M = inst.M;
  traj.q0 = inst.q0;
  traj.l_rie = constants(inst).l_rie;

  PlaneState state = PlaneState::initial(inst.q0);
  for (int k = 0; k <= iterations; ++k) {
    IterationRecord rec;
    rec.k = k;
    rec.q = std::clamp(state.q(), 0.0, 1.0);
    rec.grad_norm = grad_norm(rec.q);
    const GradCoords g = grad_coords(state);
    rec.x = g.x;
    rec.y = g.y;
    rec.h_exp_calls = k;
    traj.records.push_back(rec);
    if (k < iterations) state = plane_step(state, step);
  }
  traj.total_h_exp_calls = iterations;
  return traj;
}

}  // namespace rgagrover
