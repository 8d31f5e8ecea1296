#include "rgagrover/optimizer.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rgagrover {

std::string_view policy_name(const StepPolicy& policy) {
  return std::holds_alternative<FixedInverseLipschitz>(policy) ? "fixed" : "els";
}

StepPolicy parse_policy(std::string_view text) {
  if (text == "fixed") return FixedInverseLipschitz{};
  if (text == "els") return ExactLineSearch{};
  throw std::invalid_argument("unknown step policy '" + std::string(text) +
                              "' (expected fixed or els)");
}

void validate(const ExactLineSearch& params) {
  if (params.grid_points < 16) {
    throw std::invalid_argument("line search needs at least 16 grid points");
  }
  if (params.refine_iters < 10) {
    throw std::invalid_argument("line search needs at least 10 refinement iterations");
  }
  if (!(params.window_periods >= 1.0) || !std::isfinite(params.window_periods)) {
    throw std::invalid_argument("line search window must span at least one period");
  }
}

std::string_view to_string(Criterion c) { return c == Criterion::CostGap ? "cost" : "grad"; }

Criterion parse_criterion(std::string_view text) {
  if (text == "cost") return Criterion::CostGap;
  if (text == "grad") return Criterion::GradNorm;
  throw std::invalid_argument("unknown criterion '" + std::string(text) +
                              "' (expected cost or grad)");
}

std::string method_label(RetractionKind kind, const StepPolicy& policy) {
  return "r" + std::string(to_string(kind)) + "-" + std::string(policy_name(policy));
}

double fixed_step(const DerivedConstants& consts) { return 1.0 / consts.l_rie; }

int default_max_iter(const DerivedConstants& consts, double epsilon) {
  const double bound = std::ceil(6.0 * consts.l_rie * std::log(1.0 / epsilon));
  const double cap = 10.0 * bound;
  if (!(cap >= 100.0)) return 100;
  if (cap > 1e9) return 1'000'000'000;
  return static_cast<int>(cap);
}

double q_after_step(const PlaneState& state, RetractionKind kind, double t) {
  const GradCoords g = grad_coords(state);
  return plane_step(state, transfer_matrix(retraction_gates(kind, t, g.x, g.y), state.q0)).q();
}

double exact_line_search(const PlaneState& state, RetractionKind kind, const ExactLineSearch& params) {
  validate(params);
  const GradCoords g = grad_coords(state);
  const double r = std::hypot(g.x, g.y);
  if (r == 0.0) {
    throw std::invalid_argument("exact line search called at a zero gradient");
  }
  const double hi = params.window_periods * 4.0 * std::numbers::pi / r;
  const int n = params.grid_points;
  const double h = hi / (n - 1);
  auto q_of = [&](double t) { return q_after_step(state, kind, t); };

  int best = 0;
  double best_q = q_of(0.0);
  for (int i = 1; i < n; ++i) {
    const double v = q_of(h * i);
    if (v > best_q) {
      best_q = v;
      best = i;
    }
  }
  double best_t = h * best;

  // Golden-section maximization on the bracket around the best grid point.
  double lo = h * std::max(best - 1, 0);
  double up = h * std::min(best + 1, n - 1);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = up - inv_phi * (up - lo);
  double d = lo + inv_phi * (up - lo);
  double fc = q_of(c);
  double fd = q_of(d);
  for (int it = 0; it < params.refine_iters; ++it) {
    if (fc >= fd) {
      up = d;
      d = c;
      fd = fc;
      c = up - inv_phi * (up - lo);
      fc = q_of(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (up - lo);
      fd = q_of(d);
    }
  }
  // Ties go to the smaller step.
  const double cand_t[2] = {std::min(c, d), std::max(c, d)};
  const double cand_q[2] = {c < d ? fc : fd, c < d ? fd : fc};
  for (int i = 0; i < 2; ++i) {
    if (cand_q[i] > best_q || (cand_q[i] == best_q && cand_t[i] < best_t)) {
      best_q = cand_q[i];
      best_t = cand_t[i];
    }
  }
  return best_t;
}

namespace {

bool satisfied(Criterion criterion, double q, double gn, double epsilon) {
  return criterion == Criterion::CostGap ? std::abs(1.0 - q) < epsilon : gn <= epsilon;
}

}  // namespace

Trajectory rga_run(const GroverInstance& inst, RetractionKind kind, const StepPolicy& policy,
                   double epsilon, Criterion criterion, std::optional<int> max_iter) {
  if (!(epsilon > 0.0)) {
    throw std::invalid_argument("tolerance epsilon must be > 0");
  }
  if (max_iter && *max_iter < 1) {
    throw std::invalid_argument("max_iter must be >= 1");
  }
  if (const auto* els = std::get_if<ExactLineSearch>(&policy)) {
    validate(*els);
  }

  const DerivedConstants consts = constants(inst);
  const int cap = max_iter.value_or(default_max_iter(consts, epsilon));
  const int mult = h_exp_multiplier(kind);

  Trajectory traj;
  traj.method = method_label(kind, policy);
  traj.n = inst.n;
  traj.N = inst.N;
  traj.M = inst.M;
  traj.q0 = inst.q0;
  traj.l_rie = consts.l_rie;
  traj.kind = kind;
  traj.policy = policy;
  traj.epsilon = epsilon;
  traj.criterion = criterion;

  PlaneState state = PlaneState::initial(inst.q0);
  for (int k = 0;; ++k) {
    IterationRecord rec;
    rec.k = k;
    rec.q = state.q();
    rec.grad_norm = grad_norm(rec.q);
    const GradCoords g = grad_coords(state);
    rec.x = g.x;
    rec.y = g.y;
    rec.h_exp_calls = static_cast<std::int64_t>(k) * mult;

    if (satisfied(criterion, rec.q, rec.grad_norm, epsilon)) {
      traj.converged = true;
      traj.records.push_back(rec);
      break;
    }
    if (k >= cap || (g.x == 0.0 && g.y == 0.0)) {
      traj.records.push_back(rec);
      break;
    }
    rec.t = std::holds_alternative<FixedInverseLipschitz>(policy)
                ? fixed_step(consts)
                : exact_line_search(state, kind, std::get<ExactLineSearch>(policy));
    traj.records.push_back(rec);
    state = plane_step(state, transfer_matrix(retraction_gates(kind, rec.t, g.x, g.y), inst.q0));
  }
  traj.total_h_exp_calls = traj.final_record().h_exp_calls;
  return traj;
}

std::vector<GateSequence> trajectory_gates(const Trajectory& traj) {
  std::vector<GateSequence> out;
  if (traj.records.empty()) return out;
  out.reserve(traj.records.size() - 1);
  for (std::size_t i = 0; i + 1 < traj.records.size(); ++i) {
    const auto& r = traj.records[i];
    out.push_back(retraction_gates(traj.kind, r.t, r.x, r.y));
  }
  return out;
}

}  // namespace rgagrover
