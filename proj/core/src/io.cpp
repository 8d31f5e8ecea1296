#include "rgagrover/io.hpp"

#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace rgagrover {

std::string format_double(double v) {
  std::ostringstream os;
  os << std::setprecision(std::numeric_limits<double>::max_digits10) << v;
  return os.str();
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
  os << kTrajectoryHeader << '\n';
  for (const IterationRecord& r : traj.records) {
    os << r.k << ',' << format_double(r.q) << ',' << format_double(r.grad_norm) << ','
       << format_double(r.x) << ',' << format_double(r.y) << ',' << format_double(r.t) << ','
       << r.h_exp_calls << '\n';
  }
}

void write_sweep_csv(std::ostream& os, std::span<const SweepRow> rows) {
  os << kSweepHeader << '\n';
  for (const SweepRow& r : rows) {
    os << r.method << ',' << to_string(r.kind) << ',' << r.policy << ',' << r.n << ',' << r.N << ','
       << format_double(r.sqrt_N) << ',' << format_double(r.epsilon) << ',' << r.iterations << ','
       << r.h_exp_calls << ',' << format_double(r.runtime_seconds) << '\n';
  }
}

void write_fits_csv(std::ostream& os, std::span<const FitResult> fits) {
  os << kFitsHeader << '\n';
  for (const FitResult& f : fits) {
    os << f.method << ',' << f.x_variable << ',' << format_double(f.slope) << ','
       << format_double(f.intercept) << ',' << format_double(f.r2) << '\n';
  }
}

CircuitExport make_circuit_export(const GroverInstance& inst, const Trajectory& traj) {
  if (!inst.marked) {
    throw std::invalid_argument("circuit export needs an explicit marked set");
  }
  CircuitExport c;
  c.n = inst.n;
  c.M = inst.M;
  c.q0 = inst.q0;
  c.kind = traj.kind;
  c.policy = std::string(policy_name(traj.policy));
  c.epsilon = traj.epsilon;
  c.seed = inst.seed;
  c.marked = *inst.marked;
  c.h_exp_multiplier = h_exp_multiplier(traj.kind);
  c.iterations = traj.iterations();
  for (const GateSequence& block : trajectory_gates(traj)) {
    c.gates.insert(c.gates.end(), block.gates.rbegin(), block.gates.rend());
  }
  c.expected_final_q = traj.final_record().q;
  return c;
}

nlohmann::json to_json(const CircuitExport& c) {
  nlohmann::json gates = nlohmann::json::array();
  for (const Gate& g : c.gates) {
    gates.push_back({{"generator", to_string(g.generator)}, {"angle", g.angle}});
  }
  nlohmann::json meta = {
      {"n", c.n},
      {"M", c.M},
      {"q0", c.q0},
      {"kind", to_string(c.kind)},
      {"policy", c.policy},
      {"epsilon", c.epsilon},
      {"seed", c.seed ? nlohmann::json(*c.seed) : nlohmann::json(nullptr)},
      {"marked", c.marked},
      {"h_exp_multiplier", c.h_exp_multiplier},
      {"iterations", c.iterations},
      {"gate_order", "application"},
  };
  return {{"metadata", meta}, {"gates", gates}, {"expected_final_q", c.expected_final_q}};
}

CircuitExport circuit_from_json(const nlohmann::json& j) {
  try {
    const auto& meta = j.at("metadata");
    CircuitExport c;
    c.n = meta.at("n").get<int>();
    c.M = meta.at("M").get<std::uint64_t>();
    c.q0 = meta.at("q0").get<double>();
    c.kind = parse_retraction(meta.at("kind").get<std::string>());
    c.policy = meta.at("policy").get<std::string>();
    c.epsilon = meta.at("epsilon").get<double>();
    if (meta.contains("seed") && !meta.at("seed").is_null()) {
      c.seed = meta.at("seed").get<std::uint64_t>();
    }
    c.marked = meta.at("marked").get<std::vector<std::uint64_t>>();
    c.h_exp_multiplier = meta.at("h_exp_multiplier").get<int>();
    c.iterations = meta.at("iterations").get<int>();
    for (const auto& g : j.at("gates")) {
      const std::string gen = g.at("generator").get<std::string>();
      if (gen != "H" && gen != "PSI0") {
        throw std::invalid_argument("unknown generator '" + gen + "'");
      }
      c.gates.push_back({gen == "H" ? Generator::HProj : Generator::Psi0Proj,
                         g.at("angle").get<double>()});
    }
    c.expected_final_q = j.at("expected_final_q").get<double>();
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed circuit JSON: ") + e.what());
  }
}

double replay_circuit(const CircuitExport& c, int max_qubits) {
  const GroverInstance inst = make_instance(c.n, c.M, c.marked);
  FullState state = uniform_state(inst, max_qubits);
  for (const Gate& g : c.gates) apply_gate(state, g, inst);
  return success_prob(state, inst);
}

nlohmann::json reports_to_json(std::span<const CheckReport> reports) {
  nlohmann::json out = nlohmann::json::array();
  for (const CheckReport& r : reports) {
    out.push_back({{"check", r.name},
                   {"samples", r.samples},
                   {"max_violation", r.max_violation},
                   {"tolerance", r.tolerance},
                   {"passed", r.passed}});
  }
  return out;
}

}  // namespace rgagrover
