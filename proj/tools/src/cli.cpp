#include "rgagrover/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rgagrover/experiments.hpp"
#include "rgagrover/io.hpp"
#include "rgagrover/optimizer.hpp"
#include "rgagrover/verification.hpp"

namespace rgagrover::cli {

namespace {

namespace fs = std::filesystem;

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    if (end > pos) out.push_back(text.substr(pos, end - pos));
    pos = end + 1;
  }
  return out;
}

template <typename T, typename Parse>
T parse_whole(const std::string& s, Parse parse, const char* what) {
  std::size_t used = 0;
  T v{};
  try {
    v = parse(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) {
    throw std::invalid_argument(std::string("invalid ") + what + " '" + s + "'");
  }
  return v;
}

std::vector<std::uint64_t> parse_indices(const std::string& text) {
  if (!text.empty() && text.front() == '-') {
    throw std::invalid_argument("marked indices must be non-negative");
  }
  std::vector<std::uint64_t> out;
  for (const std::string& item : split_csv(text)) {
    if (item.front() == '-') throw std::invalid_argument("marked indices must be non-negative");
    out.push_back(parse_whole<std::uint64_t>(
        item, [](const std::string& s, std::size_t* p) { return std::stoull(s, p); },
        "marked index"));
  }
  if (out.empty()) throw std::invalid_argument("--marked given but empty");
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> parse_eps_list(const std::string& text) {
  std::vector<double> out;
  for (const std::string& item : split_csv(text)) {
    const double v = parse_whole<double>(
        item, [](const std::string& s, std::size_t* p) { return std::stod(s, p); }, "epsilon");
    if (!(v > 0.0 && v < 1.0)) throw std::invalid_argument("epsilon must lie in (0, 1)");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("epsilon list is empty");
  return out;
}

std::ofstream open_output(const fs::path& path) {
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
  }
  std::ofstream os(path);
  if (!os) throw std::invalid_argument("cannot write '" + path.string() + "'");
  return os;
}

fs::path prepare_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (!fs::is_directory(dir)) {
    throw std::invalid_argument("cannot create output directory '" + dir + "'");
  }
  return fs::path(dir);
}

struct RunOptions {
  int n = 0;
  std::optional<std::uint64_t> m;
  std::string marked;
  std::string retraction = "5";
  std::string policy = "fixed";
  double eps = 1e-4;
  std::string criterion = "cost";
  std::optional<int> max_iter;
  std::string out;
  std::optional<std::uint64_t> seed;
  int grid_points = ExactLineSearch{}.grid_points;
  int refine_iters = ExactLineSearch{}.refine_iters;
  double window_periods = ExactLineSearch{}.window_periods;
};

void add_run_flags(CLI::App* cmd, RunOptions& o) {
  cmd->add_option("--n", o.n, "Number of qubits")->required();
  cmd->add_option("--m", o.m, "Number of marked items (default 1, or the size of --marked)");
  cmd->add_option("--marked", o.marked, "Comma-separated marked indices");
  cmd->add_option("--retraction", o.retraction, "Retraction: 5, 6 or 8")->capture_default_str();
  cmd->add_option("--policy", o.policy, "Step policy: fixed or els")->capture_default_str();
  cmd->add_option("--eps", o.eps, "Termination tolerance")->capture_default_str();
  cmd->add_option("--criterion", o.criterion, "cost (|1-q|<eps) or grad (||grad||<=eps)")
      ->capture_default_str();
  cmd->add_option("--max-iter", o.max_iter, "Iteration cap");
  cmd->add_option("--seed", o.seed, "Seed for sampling the marked set");
  cmd->add_option("--grid-points", o.grid_points, "Line-search grid size")->capture_default_str();
  cmd->add_option("--refine-iters", o.refine_iters, "Golden-section iterations")
      ->capture_default_str();
  cmd->add_option("--window-periods", o.window_periods, "Line-search window in units of 4pi/R")
      ->capture_default_str();
}

GroverInstance instance_from(const RunOptions& o, bool need_marked) {
  std::optional<std::vector<std::uint64_t>> marked;
  if (!o.marked.empty()) marked = parse_indices(o.marked);
  const std::uint64_t m = o.m.value_or(marked ? marked->size() : 1);
  std::optional<std::uint64_t> seed = o.seed;
  if (need_marked && !marked && !seed) seed = 0;
  return make_instance(o.n, m, std::move(marked), seed);
}

StepPolicy policy_from(const RunOptions& o) {
  StepPolicy policy = parse_policy(o.policy);
  if (auto* els = std::get_if<ExactLineSearch>(&policy)) {
    els->grid_points = o.grid_points;
    els->refine_iters = o.refine_iters;
    els->window_periods = o.window_periods;
  }
  return policy;
}

Trajectory run_from(const RunOptions& o, const GroverInstance& inst) {
  if (!(o.eps > 0.0 && o.eps < 1.0)) throw std::invalid_argument("--eps must lie in (0, 1)");
  return rga_run(inst, parse_retraction(o.retraction), policy_from(o), o.eps,
                 parse_criterion(o.criterion), o.max_iter);
}

void print_summary(std::ostream& out, const Trajectory& traj) {
  out << "converged=" << (traj.converged ? "true" : "false") << " T=" << traj.iterations()
      << " h_exp_calls=" << traj.total_h_exp_calls
      << " final_q=" << format_double(traj.final_record().q) << '\n';
}

int cmd_run(const RunOptions& o, std::ostream& out) {
  const GroverInstance inst = instance_from(o, false);
  const Trajectory traj = run_from(o, inst);
  if (!o.out.empty()) {
    std::ofstream os = open_output(o.out);
    write_trajectory_csv(os, traj);
  }
  print_summary(out, traj);
  return traj.converged ? kExitOk : kExitNotConverged;
}

int cmd_export(const RunOptions& o, std::ostream& out) {
  const GroverInstance inst = instance_from(o, true);
  const Trajectory traj = run_from(o, inst);
  const CircuitExport circuit = make_circuit_export(inst, traj);
  std::ofstream os = open_output(o.out);
  os << to_json(circuit).dump(2) << '\n';
  print_summary(out, traj);
  out << "gates=" << circuit.gates.size() << " written to " << o.out << '\n';
  return traj.converged ? kExitOk : kExitNotConverged;
}

struct SweepOptions {
  int n_min = 2;
  int n_max = 25;
  int n = 15;
  double eps = 1e-4;
  std::string eps_list;
  std::string methods = "all";
  std::string out;
  bool no_timing = false;
};

void print_rows(std::ostream& out, const std::vector<SweepRow>& rows,
                const std::vector<FitResult>& fits) {
  for (const SweepRow& r : rows) {
    out << r.method << " n=" << r.n << " eps=" << format_double(r.epsilon) << " T=" << r.iterations
        << " h_exp_calls=" << r.h_exp_calls << (r.converged ? "" : " (not converged)") << '\n';
  }
  for (const FitResult& f : fits) {
    out << "fit " << f.method << " vs " << f.x_variable << ": slope=" << format_double(f.slope)
        << " intercept=" << format_double(f.intercept) << " r2=" << format_double(f.r2) << '\n';
  }
}

int write_sweep(const SweepOptions& o, const std::string& stem, const std::vector<SweepRow>& rows,
                const std::vector<FitResult>& fits, std::ostream& out) {
  const fs::path dir = prepare_dir(o.out);
  {
    std::ofstream os = open_output(dir / ("sweep_" + stem + ".csv"));
    write_sweep_csv(os, rows);
  }
  {
    std::ofstream os = open_output(dir / ("fits_" + stem + ".csv"));
    write_fits_csv(os, fits);
  }
  print_rows(out, rows, fits);
  const bool all_converged =
      std::all_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.converged; });
  return all_converged ? kExitOk : kExitNotConverged;
}

int cmd_sweep_n(const SweepOptions& o, std::ostream& out) {
  const std::vector<Method> methods = parse_methods(o.methods);
  if (!(o.eps > 0.0 && o.eps < 1.0)) throw std::invalid_argument("--eps must lie in (0, 1)");
  prepare_dir(o.out);
  const std::vector<SweepRow> rows = sweep_n(o.n_min, o.n_max, o.eps, methods, !o.no_timing);
  const int fit_from = std::max(8, o.n_min);
  std::vector<FitResult> fits;
  if (o.n_max > fit_from) fits = fit_sweep_n(rows, fit_from);
  return write_sweep(o, "n", rows, fits, out);
}

int cmd_sweep_eps(const SweepOptions& o, std::ostream& out) {
  const std::vector<Method> methods = parse_methods(o.methods);
  const std::vector<double> eps =
      o.eps_list.empty() ? default_eps_list() : parse_eps_list(o.eps_list);
  if (o.n < 1 || o.n > kMaxQubits) throw std::invalid_argument("--n out of range");
  prepare_dir(o.out);
  const std::vector<SweepRow> rows = sweep_eps(o.n, eps, methods, !o.no_timing);
  std::vector<FitResult> fits;
  if (eps.size() >= 2) fits = fit_sweep_eps(rows);
  return write_sweep(o, "eps", rows, fits, out);
}

struct VerifyOptions {
  std::string suite = "all";
  std::uint64_t seed = 20240601;
  std::string json;
};

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  const std::vector<CheckReport> reports = run_suite(o.suite, o.seed);
  int failed = 0;
  for (const CheckReport& r : reports) {
    out << format_report(r) << '\n';
    if (!r.passed) ++failed;
  }
  out << reports.size() - failed << "/" << reports.size() << " checks passed\n";
  if (!o.json.empty()) {
    std::ofstream os = open_output(o.json);
    os << reports_to_json(reports).dump(2) << '\n';
  }
  return failed == 0 ? kExitOk : kExitNotConverged;
}

struct ReplayOptions {
  std::string in;
  int max_qubits = kDefaultStatevectorCap;
  double tol = 1e-10;
};

int cmd_replay(const ReplayOptions& o, std::ostream& out) {
  std::ifstream is(o.in);
  if (!is) throw std::invalid_argument("cannot read '" + o.in + "'");
  nlohmann::json j;
  try {
    is >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed circuit JSON: ") + e.what());
  }
  const CircuitExport circuit = circuit_from_json(j);
  const double q = replay_circuit(circuit, o.max_qubits);
  const double diff = std::abs(q - circuit.expected_final_q);
  out << "replayed_q=" << format_double(q)
      << " expected_final_q=" << format_double(circuit.expected_final_q)
      << " abs_diff=" << format_double(diff) << '\n';
  return diff <= o.tol ? kExitOk : kExitNotConverged;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Riemannian gradient ascent for Grover search"};
  app.name("rga_grover");
  app.require_subcommand(1);

  RunOptions run_opts;
  auto* run = app.add_subcommand("run", "Run RGA on one instance and print a summary");
  add_run_flags(run, run_opts);
  run->add_option("--out", run_opts.out, "Trajectory CSV path");

  RunOptions export_opts;
  auto* exp = app.add_subcommand("export-circuit", "Run RGA and write the circuit as JSON");
  add_run_flags(exp, export_opts);
  exp->add_option("--out", export_opts.out, "Circuit JSON path")->required();

  SweepOptions sn;
  auto* sweep_n_cmd = app.add_subcommand("sweep-n", "Sweep the qubit count at fixed epsilon");
  sweep_n_cmd->add_option("--n-min", sn.n_min)->capture_default_str();
  sweep_n_cmd->add_option("--n-max", sn.n_max)->capture_default_str();
  sweep_n_cmd->add_option("--eps", sn.eps)->capture_default_str();
  sweep_n_cmd->add_option("--methods", sn.methods, "all or r5-fixed,r5-els,r6-els,r8-els")
      ->capture_default_str();
  sweep_n_cmd->add_option("--out", sn.out, "Output directory")->required();
  sweep_n_cmd->add_flag("--no-timing", sn.no_timing, "Write runtime_seconds as 0");

  SweepOptions se;
  auto* sweep_eps_cmd = app.add_subcommand("sweep-eps", "Sweep epsilon at fixed qubit count");
  sweep_eps_cmd->add_option("--n", se.n)->capture_default_str();
  sweep_eps_cmd->add_option("--eps-list", se.eps_list, "Comma-separated tolerances");
  sweep_eps_cmd->add_option("--methods", se.methods)->capture_default_str();
  sweep_eps_cmd->add_option("--out", se.out, "Output directory")->required();
  sweep_eps_cmd->add_flag("--no-timing", se.no_timing, "Write runtime_seconds as 0");

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", vo.suite, "Suite name or all")->capture_default_str();
  verify->add_option("--seed", vo.seed)->capture_default_str();
  verify->add_option("--json", vo.json, "Write the reports as JSON");

  ReplayOptions ro;
  auto* replay = app.add_subcommand("replay-circuit", "Replay a circuit JSON on the statevector");
  replay->add_option("--in", ro.in, "Circuit JSON path")->required();
  replay->add_option("--max-qubits", ro.max_qubits)->capture_default_str();
  replay->add_option("--tol", ro.tol)->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*run) return cmd_run(run_opts, out);
    if (*exp) return cmd_export(export_opts, out);
    if (*sweep_n_cmd) return cmd_sweep_n(sn, out);
    if (*sweep_eps_cmd) return cmd_sweep_eps(se, out);
    if (*verify) return cmd_verify(vo, out);
    if (*replay) return cmd_replay(ro, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace rgagrover::cli
