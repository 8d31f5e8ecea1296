#include "rgagrover/verification.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "rgagrover/dense.hpp"
#include "rgagrover/experiments.hpp"
#include "rgagrover/statevector.hpp"

namespace rgagrover {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kStopGap = 1e-13;
constexpr int kDenseCoordCap = 8;

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(3) << std::scientific << v;
  return os.str();
}

std::string describe(const GroverInstance& inst, RetractionKind kind, const StepPolicy& policy) {
  std::ostringstream os;
  os << "n=" << inst.n << " M=" << inst.M << " " << method_label(kind, policy);
  return os.str();
}

double choose_step(const PlaneState& state, RetractionKind kind, const StepPolicy& policy,
                   const DerivedConstants& consts) {
  if (const auto* els = std::get_if<ExactLineSearch>(&policy)) {
    return exact_line_search(state, kind, *els);
  }
  return fixed_step(consts);
}

struct Lockstep {
  int steps = 0;
  double q_diff = 0.0;
  double full_coord_diff = 0.0;
  double dense_coord_diff = 0.0;
  double plane_residual = 0.0;
  bool dense = false;
  std::string failure;
};

Lockstep lockstep(const GroverInstance& inst, RetractionKind kind, const StepPolicy& policy,
                  int iters) {
  if (iters < 0) {
    throw std::invalid_argument("iteration count must be >= 0");
  }
  const DerivedConstants consts = constants(inst);
  Lockstep out;
  out.dense = inst.n <= kDenseCoordCap;

  PlaneState reduced = PlaneState::initial(inst.q0);
  FullState full = uniform_state(inst);
  std::optional<DenseOperators> ops;
  DenseOp u;
  if (out.dense) {
    ops = build_operators(inst);
    u = DenseOp::Identity(ops->H.rows(), ops->H.cols());
  }

  for (int k = 0;; ++k) {
    const double q = reduced.q();
    const GradCoords g = grad_coords(reduced);

    out.q_diff = std::max(out.q_diff, std::abs(q - success_prob(full, inst)));
    const GradCoords gf = grad_coords(plane_coords(full, inst));
    out.full_coord_diff =
        std::max({out.full_coord_diff, std::abs(g.x - gf.x), std::abs(g.y - gf.y)});
    out.plane_residual = std::max(out.plane_residual, plane_residual(full, inst));

    GradCoords gd;
    if (ops) {
      try {
        gd = grad_coords_dense_ket(u * ops->psi0_ket, *ops);
        out.dense_coord_diff =
            std::max({out.dense_coord_diff, std::abs(g.x - gd.x), std::abs(g.y - gd.y),
                      std::abs(q - cost(u, *ops))});
      } catch (const std::exception& e) {
        out.dense_coord_diff = kInf;
        out.failure = e.what();
        return out;
      }
    }

    if (k == iters || std::abs(1.0 - q) < kStopGap || (g.x == 0.0 && g.y == 0.0)) {
      if (ops) out.dense_coord_diff = std::max(out.dense_coord_diff, unitarity_defect(u));
      return out;
    }
    const double t = choose_step(reduced, kind, policy, consts);
    reduced = plane_step(reduced, transfer_matrix(retraction_gates(kind, t, g.x, g.y), inst.q0));
    apply_gates(full, retraction_gates(kind, t, gf.x, gf.y), inst);
    if (ops) {
      u = left_apply(retraction_gates(kind, t, gd.x, gd.y), std::move(u), *ops);
    }
    ++out.steps;
  }
}

double ols_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  return fit_line(xs, ys).slope;
}

GroverInstance random_small_instance(std::mt19937_64& rng, int n_lo, int n_hi) {
  std::uniform_int_distribution<int> pick_n(n_lo, n_hi);
  const int n = pick_n(rng);
  const std::uint64_t N = std::uint64_t{1} << n;
  std::uniform_int_distribution<std::uint64_t> pick_m(1, N - 1);
  const std::uint64_t M = pick_m(rng);
  return make_instance(n, M, std::nullopt, rng());
}

}  // namespace

CheckReport make_report(std::string name, int samples, double max_violation, double tolerance,
                        std::string details, std::uint64_t seed) {
  CheckReport r;
  r.name = std::move(name);
  r.samples = samples;
  r.max_violation = max_violation;
  r.tolerance = tolerance;
  r.passed = max_violation <= tolerance;
  r.details = std::move(details);
  r.seed = seed;
  return r;
}

std::string format_report(const CheckReport& report) {
  std::ostringstream os;
  os << (report.passed ? "PASS " : "FAIL ") << report.name << " samples=" << report.samples
     << " max_violation=" << fmt(report.max_violation) << " tolerance=" << fmt(report.tolerance);
  if (!report.details.empty()) os << "  " << report.details;
  return os.str();
}

CheckReport verify_reduced_vs_full(const GroverInstance& inst, RetractionKind kind,
                                   const StepPolicy& policy, int iters, double tol) {
  const Lockstep s = lockstep(inst, kind, policy, iters);
  // xy_full is reported but not gated: extracting (x, y) from amplitudes divides by
  // 2 q0 (1 - q0) and loses digits at large N.
  const double worst = std::max(s.q_diff, s.dense_coord_diff);
  std::ostringstream os;
  os << describe(inst, kind, policy) << " steps=" << s.steps << " q=" << fmt(s.q_diff)
     << " xy_full=" << fmt(s.full_coord_diff);
  if (s.dense) os << " xy_dense=" << fmt(s.dense_coord_diff);
  if (!s.failure.empty()) os << " (" << s.failure << ")";
  return make_report("reduced-vs-full", s.steps + 1, worst, tol, os.str());
}

CheckReport verify_plane_confinement(const GroverInstance& inst, RetractionKind kind,
                                     const StepPolicy& policy, int iters, double tol) {
  const Lockstep s = lockstep(inst, kind, policy, iters);
  return make_report("plane-confinement", s.steps + 1, s.plane_residual, tol,
                     describe(inst, kind, policy));
}

CheckReport verify_marked_set_invariance(int n, std::uint64_t M,
                                         std::span<const std::uint64_t> seeds, int iters,
                                         double tol) {
  if (seeds.size() < 2) {
    throw std::invalid_argument("marked-set invariance needs at least two seeds");
  }
  std::vector<std::vector<double>> runs;
  for (std::uint64_t seed : seeds) {
    const GroverInstance inst = make_instance(n, M, std::nullopt, seed);
    const double t = fixed_step(constants(inst));
    FullState full = uniform_state(inst);
    std::vector<double> qs;
    for (int k = 0;; ++k) {
      qs.push_back(success_prob(full, inst));
      if (k == iters) break;
      const GradCoords g = grad_coords(plane_coords(full, inst));
      apply_gates(full, retraction_gates(RetractionKind::FiveFactor, t, g.x, g.y), inst);
    }
    runs.push_back(std::move(qs));
  }
  double worst = 0.0;
  for (std::size_t r = 1; r < runs.size(); ++r) {
    for (std::size_t k = 0; k < runs[0].size(); ++k) {
      worst = std::max(worst, std::abs(runs[r][k] - runs[0][k]));
    }
  }
  std::ostringstream os;
  os << "n=" << n << " M=" << M << " sets=" << seeds.size() << " iters=" << iters;
  return make_report("marked-set-invariance", static_cast<int>(seeds.size()), worst, tol, os.str(),
                     seeds.front());
}

CheckReport verify_zero_step(RetractionKind kind, int samples, std::uint64_t seed, double tol) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> unit(0.01, 0.99);
  const GroverInstance dense_inst = make_instance(3, 1, std::vector<std::uint64_t>{5});
  const DenseOperators ops = build_operators(dense_inst);
  const DenseOp eye = DenseOp::Identity(ops.H.rows(), ops.H.cols());

  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    const double x = 3.0 * gauss(rng);
    const double y = 3.0 * gauss(rng);
    const GateSequence gates = retraction_gates(kind, 0.0, x, y);
    worst = std::max(worst, max_abs_diff(transfer_matrix(gates, unit(rng)), Mat2::identity()));
    worst = std::max(worst, (dense_sequence(gates, ops) - eye).norm());
  }
  return make_report(std::string("zero-step-identity/") + std::string(to_string(kind)), samples,
                     worst, tol, {}, seed);
}

std::vector<CheckReport> verify_retraction_first_order(RetractionKind kind, int samples,
                                                       std::uint64_t seed) {
  const std::vector<double> hs{1e-2, 1e-3, 1e-4};
  std::vector<double> log_h;
  for (double h : hs) log_h.push_back(std::log10(h));

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  double worst_d = 0.0;
  double worst_shortfall = 0.0;
  double min_order = kInf;
  for (int s = 0; s < samples; ++s) {
    const GroverInstance inst = random_small_instance(rng, 2, 5);
    const DenseOperators ops = build_operators(inst);
    const DenseOp u = random_reachable(ops, rng);
    const double th = angle(rng);
    const double x = std::cos(th);
    const double y = std::sin(th);
    const DenseOp eta = (x * ops.X0 + y * ops.Y0) * u;

    std::vector<double> log_d;
    double d_first = 0.0;
    double d_last = 0.0;
    for (double h : hs) {
      const DenseOp v = dense_sequence(retraction_gates(kind, h, x, y), ops);
      const double d = ((v * u - u) / h - eta).norm();
      if (h == hs.front()) d_first = d;
      d_last = d;
      log_d.push_back(std::log10(std::max(d, 1e-300)));
    }
    worst_d = std::max(worst_d, d_last);
    // A curve that is exact to roundoff has no measurable order; count it as passing.
    const double order = d_first < 1e-13 ? 1.0 : ols_slope(log_h, log_d);
    min_order = std::min(min_order, order);
    worst_shortfall = std::max(worst_shortfall, 1.0 - order);
  }
  const std::string tag = std::string(to_string(kind));
  return {
      make_report("first-order-d(1e-4)/" + tag, samples, worst_d, 1e-3, {}, seed),
      make_report("first-order-order/" + tag, samples, worst_shortfall, 0.1,
                  "min order " + fmt(min_order), seed),
  };
}

CheckReport verify_xy_norms(const GroverInstance& inst, double tol) {
  const DenseOperators ops = build_operators(inst, kDenseCoordCap);
  const double worst = std::max({std::abs(ops.X0.norm() - ops.c0), std::abs(ops.Y0.norm() - ops.c0),
                                 std::abs(frob_inner(ops.X0, ops.Y0))});
  std::ostringstream os;
  os << "n=" << inst.n << " M=" << inst.M << " c0=" << fmt(ops.c0);
  return make_report("xy-norms", 1, worst, tol, os.str());
}

CheckReport verify_grad_norm_identity(const GroverInstance& inst, int samples, std::uint64_t seed,
                                      double tol) {
  const DenseOperators ops = build_operators(inst);
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    const DenseOp u = random_reachable(ops, rng);
    const DenseOp g = riemannian_grad(u, ops);
    const double q = cost(u, ops);
    worst = std::max({worst, std::abs(g.norm() - std::sqrt(2.0 * q * (1.0 - q))),
                      plane_residual(g, ops)});
  }
  std::ostringstream os;
  os << "n=" << inst.n << " M=" << inst.M;
  return make_report("grad-norm-identity", samples, worst, tol, os.str(), seed);
}

std::vector<CheckReport> verify_tight_bounds(int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> log_mag(-3.0, 1.0);
  double worst_bound = 0.0;
  double worst_ratio = 0.0;
  for (int s = 0; s < samples; ++s) {
    const GroverInstance inst = random_small_instance(rng, 2, 5);
    const DenseOperators ops = build_operators(inst);
    const DenseOp eye = DenseOp::Identity(ops.H.rows(), ops.H.cols());
    const double th = angle(rng);

    auto measure = [&](double mag) {
      const double x = std::cos(th) * mag / ops.c0;
      const double y = std::sin(th) * mag / ops.c0;
      const DenseOp eta = x * ops.X0 + y * ops.Y0;
      const DenseOp gamma =
          dense_sequence(retraction_gates(RetractionKind::FiveFactor, 1.0, x, y), ops);
      return std::pair{(gamma - eye).norm(), (gamma - eye - eta).norm()};
    };

    const double mag = std::pow(10.0, log_mag(rng));
    const auto [first, second] = measure(mag);
    const double second_rhs = mag * mag / (4.0 * ops.c0);
    worst_bound = std::max({worst_bound, first - mag - kInequalitySlack * std::max(1.0, mag),
                            second - second_rhs - kInequalitySlack * std::max(1.0, second_rhs)});

    const double small = 1e-3;
    const auto [f0, s0] = measure(small);
    worst_ratio = std::max({worst_ratio, std::abs(f0 / small - 1.0),
                            std::abs(s0 * 4.0 * ops.c0 / (small * small) - 1.0)});
  }
  return {
      make_report("tight-bounds", samples, std::max(worst_bound, 0.0), 0.0, {}, seed),
      make_report("tight-bounds-limit-ratio", samples, worst_ratio, 0.05, "|eta|=1e-3", seed),
  };
}

CheckReport verify_pullback_lipschitz(int samples, std::uint64_t seed, double slack) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> mag_dist(0.0, 1.0);
  double worst = -kInf;
  for (int s = 0; s < samples; ++s) {
    const GroverInstance inst = random_small_instance(rng, 2, 5);
    const DenseOperators ops = build_operators(inst);
    const double l_rie = constants(inst).l_rie;
    const DenseOp u = random_reachable(ops, rng);
    const double th = angle(rng);
    const double mag = mag_dist(rng);
    const double x = std::cos(th) * mag / ops.c0;
    const double y = std::sin(th) * mag / ops.c0;
    const DenseOp eta = x * ops.X0 + y * ops.Y0;
    const DenseOp moved =
        dense_sequence(retraction_gates(RetractionKind::FiveFactor, 1.0, x, y), ops) * u;
    const double lhs =
        std::abs(cost(moved, ops) - cost(u, ops) - frob_inner(riemannian_grad(u, ops), eta));
    worst = std::max(worst, lhs - 0.5 * l_rie * mag * mag);
  }
  return make_report("pullback-lipschitz", samples, std::max(worst, 0.0), slack,
                     "largest lhs - rhs " + fmt(worst), seed);
}

std::vector<CheckReport> verify_euclid_lipschitz(const GroverInstance& inst, int samples,
                                                 std::uint64_t seed) {
  const EuclidLipschitzAudit audit = check_euclid_lipschitz(inst, samples, seed);
  return {
      make_report("euclid-lipschitz", samples, std::max(audit.max_ratio - 2.0, 0.0), 1e-10,
                  "max ratio " + fmt(audit.max_ratio), seed),
      make_report("euclid-lipschitz-tight", 1, std::abs(audit.tight_ratio - 2.0), 1e-12, {}, seed),
  };
}

int best_complexity_bound(double l_rie, double epsilon) {
  return static_cast<int>(std::ceil(6.0 * l_rie * std::log(1.0 / epsilon)));
}

std::int64_t baseline_complexity_bound(double l_rie, double epsilon) {
  return static_cast<std::int64_t>(std::ceil(2.0 * l_rie / (epsilon * epsilon)));
}

namespace {

std::string traj_tag(const Trajectory& traj) {
  std::ostringstream os;
  os << traj.method << " n=" << traj.n << " eps=" << std::setprecision(3) << traj.epsilon;
  return os.str();
}

}  // namespace

CheckReport check_monotone(const Trajectory& traj, double slack) {
  double worst = 0.0;
  for (std::size_t k = 1; k < traj.records.size(); ++k) {
    worst = std::max(worst, traj.records[k - 1].q - traj.records[k].q);
  }
  return make_report("monotone", traj.iterations(), worst, slack, traj_tag(traj));
}

CheckReport check_ascent_recurrence(const Trajectory& traj, double slack) {
  double worst = 0.0;
  int violations = 0;
  for (std::size_t k = 1; k < traj.records.size(); ++k) {
    const double q = traj.records[k - 1].q;
    const double gap = q + q * (1.0 - q) / traj.l_rie - traj.records[k].q;
    if (gap > slack) ++violations;
    worst = std::max(worst, gap);
  }
  return make_report("ascent-recurrence", traj.iterations(), worst, slack,
                     traj_tag(traj) + " violations=" + std::to_string(violations));
}

CheckReport check_pl_inequality(const Trajectory& traj, double slack) {
  double worst = 0.0;
  int used = 0;
  for (const auto& r : traj.records) {
    if (r.q < 0.5) continue;
    ++used;
    worst = std::max(worst, (1.0 - r.q) - r.grad_norm * r.grad_norm);
  }
  return make_report("pl-inequality", used, worst, slack, traj_tag(traj));
}

CheckReport check_best_complexity(const Trajectory& traj) {
  const int bound = best_complexity_bound(traj.l_rie, traj.epsilon);
  const double excess = traj.converged ? std::max(0, traj.iterations() - bound) : kInf;
  return make_report("best-complexity", 1, excess, 0.0,
                     traj_tag(traj) + " T=" + std::to_string(traj.iterations()) +
                         " bound=" + std::to_string(bound));
}

CheckReport check_baseline_complexity(const Trajectory& grad_run, double slack) {
  const std::int64_t bound = baseline_complexity_bound(grad_run.l_rie, grad_run.epsilon);
  double min_gn = kInf;
  for (const auto& r : grad_run.records) {
    if (r.k > bound) break;
    min_gn = std::min(min_gn, r.grad_norm);
  }
  return make_report("baseline-complexity", grad_run.iterations(),
                     std::max(min_gn - grad_run.epsilon, 0.0), slack,
                     traj_tag(grad_run) + " bound=" + std::to_string(bound));
}

std::vector<CheckReport> verify_inequality_suite(const GroverInstance& inst,
                                                 std::span<const Trajectory> trajectories) {
  std::vector<CheckReport> out;
  for (const Trajectory& traj : trajectories) {
    const bool fixed = std::holds_alternative<FixedInverseLipschitz>(traj.policy);
    if (fixed) {
      out.push_back(check_monotone(traj));
      out.push_back(check_ascent_recurrence(traj));
    }
    out.push_back(check_pl_inequality(traj));
    if (fixed && traj.criterion == Criterion::CostGap && traj.epsilon <= inst.q0) {
      out.push_back(check_best_complexity(traj));
    }
    if (fixed && traj.epsilon >= 1e-2) {
      const auto cap = baseline_complexity_bound(traj.l_rie, traj.epsilon);
      const Trajectory grad_run =
          rga_run(inst, traj.kind, FixedInverseLipschitz{}, traj.epsilon, Criterion::GradNorm,
                  static_cast<int>(std::min<std::int64_t>(cap, 1'000'000'000)));
      out.push_back(check_baseline_complexity(grad_run));
    }
  }
  return out;
}

std::vector<CheckReport> negative_control_suite() {
  const GroverInstance inst = make_instance(6, 1);
  const Trajectory good = rga_run(inst, RetractionKind::FiveFactor, FixedInverseLipschitz{}, 1e-2);
  std::vector<CheckReport> out;

  Trajectory swapped = good;
  std::swap(swapped.records[3].q, swapped.records[4].q);
  out.push_back(check_monotone(swapped));

  Trajectory stalled = good;
  stalled.records[5].q = stalled.records[4].q;
  out.push_back(check_ascent_recurrence(stalled));

  Trajectory flat = good;
  for (auto& r : flat.records) {
    if (r.q >= 0.5) r.grad_norm *= 0.5;
  }
  out.push_back(check_pl_inequality(flat));

  Trajectory slow = good;
  const int bound = best_complexity_bound(slow.l_rie, slow.epsilon);
  while (slow.iterations() <= bound) slow.records.insert(slow.records.begin(), slow.records.front());
  out.push_back(check_best_complexity(slow));

  Trajectory stuck = rga_run(inst, RetractionKind::FiveFactor, FixedInverseLipschitz{}, 1e-2,
                             Criterion::GradNorm);
  for (auto& r : stuck.records) r.grad_norm = std::max(r.grad_norm, 2.0 * stuck.epsilon);
  out.push_back(check_baseline_complexity(stuck));

  for (auto& r : out) r.name = "negative-control/" + r.name;
  return out;
}

std::vector<std::string> suite_names() {
  return {"reduced-vs-full", "retraction", "geometry", "inequalities", "invariance",
          "negative-control"};
}

namespace {

constexpr RetractionKind kKinds[] = {RetractionKind::FiveFactor, RetractionKind::SixFactor,
                                     RetractionKind::EightFactor};

std::vector<CheckReport> suite_reduced_vs_full(std::uint64_t seed) {
  std::vector<CheckReport> out;
  const StepPolicy policies[] = {FixedInverseLipschitz{}, ExactLineSearch{}};
  for (int n = 2; n <= 10; ++n) {
    for (std::uint64_t M : {std::uint64_t{1}, std::uint64_t{3}}) {
      if (M >= (std::uint64_t{1} << n)) continue;
      const GroverInstance inst = make_instance(n, M, std::nullopt, seed + 131 * n + M);
      for (RetractionKind kind : kKinds) {
        for (const StepPolicy& policy : policies) {
          out.push_back(verify_reduced_vs_full(inst, kind, policy, 50));
        }
      }
    }
  }
  return out;
}

std::vector<CheckReport> suite_retraction(std::uint64_t seed) {
  std::vector<CheckReport> out;
  for (RetractionKind kind : kKinds) {
    out.push_back(verify_zero_step(kind, 100, seed));
    for (auto& r : verify_retraction_first_order(kind, 100, seed)) out.push_back(std::move(r));
  }
  return out;
}

std::vector<CheckReport> suite_geometry(std::uint64_t seed) {
  std::vector<CheckReport> out;
  for (int n = 2; n <= 8; ++n) {
    out.push_back(verify_xy_norms(make_instance(n, 1, std::nullopt, seed + n)));
  }
  out.push_back(verify_xy_norms(make_instance(5, 7, std::nullopt, seed)));
  out.push_back(verify_grad_norm_identity(make_instance(4, 3, std::nullopt, seed), 200, seed));
  for (auto& r : verify_tight_bounds(1000, seed)) out.push_back(std::move(r));
  out.push_back(verify_pullback_lipschitz(1000, seed));
  for (auto& r : verify_euclid_lipschitz(make_instance(3, 1, std::nullopt, seed), 1000, seed)) {
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<CheckReport> suite_inequalities() {
  std::vector<CheckReport> out;
  auto run_for = [&](int n, const std::vector<double>& eps_list) {
    const GroverInstance inst = make_instance(n, 1);
    std::vector<Trajectory> trajs;
    for (double eps : eps_list) {
      for (RetractionKind kind : kKinds) {
        trajs.push_back(rga_run(inst, kind, FixedInverseLipschitz{}, eps));
      }
    }
    for (auto& r : verify_inequality_suite(inst, trajs)) out.push_back(std::move(r));
  };
  run_for(2, {1e-6});
  run_for(6, {1e-2, 1e-4});
  run_for(15, {1e-2, 1e-12});
  return out;
}

std::vector<CheckReport> suite_invariance(std::uint64_t seed) {
  std::vector<CheckReport> out;
  const std::vector<std::uint64_t> seeds{seed, seed + 1, seed + 2, seed + 3, seed + 4};
  out.push_back(verify_marked_set_invariance(5, 1, seeds));
  out.push_back(verify_marked_set_invariance(5, 3, std::span(seeds).first(3)));
  out.push_back(verify_marked_set_invariance(5, 31, std::span(seeds).first(3)));
  out.push_back(verify_marked_set_invariance(10, 3, seeds));
  for (RetractionKind kind : kKinds) {
    out.push_back(verify_plane_confinement(make_instance(10, 1, std::nullopt, seed), kind,
                                           FixedInverseLipschitz{}, 100));
    out.push_back(verify_plane_confinement(make_instance(12, 5, std::nullopt, seed), kind,
                                           ExactLineSearch{}, 50));
  }
  return out;
}

}  // namespace

std::vector<CheckReport> run_suite(std::string_view name, std::uint64_t seed) {
  if (name == "reduced-vs-full") return suite_reduced_vs_full(seed);
  if (name == "retraction") return suite_retraction(seed);
  if (name == "geometry") return suite_geometry(seed);
  if (name == "inequalities") return suite_inequalities();
  if (name == "invariance") return suite_invariance(seed);
  if (name == "negative-control") return negative_control_suite();
  if (name == "all") {
    std::vector<CheckReport> out;
    for (const std::string& s : suite_names()) {
      if (s == "negative-control") continue;
      for (auto& r : run_suite(s, seed)) out.push_back(std::move(r));
    }
    return out;
  }
  throw std::invalid_argument("unknown verification suite '" + std::string(name) + "'");
}

}  // namespace rgagrover
