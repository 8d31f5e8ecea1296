#pragma once

#include <cstdint>
#include <iosfwd>
#include <nlohmann/json.hpp>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rgagrover/experiments.hpp"
#include "rgagrover/gates.hpp"
#include "rgagrover/optimizer.hpp"
#include "rgagrover/statevector.hpp"
#include "rgagrover/verification.hpp"

namespace rgagrover {

inline constexpr const char* kTrajectoryHeader = "k,q,grad_norm,x,y,t,h_exp_calls";
inline constexpr const char* kSweepHeader =
    "method,retraction,policy,n,N,sqrt_N,epsilon,iterations,h_exp_calls,runtime_seconds";
inline constexpr const char* kFitsHeader = "method,x_variable,slope,intercept,r2";

/// 17 significant digits, enough to round-trip a double.
std::string format_double(double v);

void write_trajectory_csv(std::ostream& os, const Trajectory& traj);
void write_sweep_csv(std::ostream& os, std::span<const SweepRow> rows);
void write_fits_csv(std::ostream& os, std::span<const FitResult> fits);

/// A complete RGA circuit. `gates` are listed in application order: gates[0] acts
/// on |ψ0⟩ first. Each retraction block appears reversed from its operator-order form.
struct CircuitExport {
  int n = 0;
  std::uint64_t M = 0;
  double q0 = 0.0;
  RetractionKind kind = RetractionKind::FiveFactor;
  std::string policy;
  double epsilon = 0.0;
  std::optional<std::uint64_t> seed;
  std::vector<std::uint64_t> marked;
  int h_exp_multiplier = 0;
  int iterations = 0;
  std::vector<Gate> gates;
  double expected_final_q = 0.0;
};

/// Throws std::invalid_argument when `inst` has no marked set.
CircuitExport make_circuit_export(const GroverInstance& inst, const Trajectory& traj);

nlohmann::json to_json(const CircuitExport& circuit);

/// Throws std::invalid_argument on missing or malformed fields.
CircuitExport circuit_from_json(const nlohmann::json& j);

/// Success probability after applying the circuit to |ψ0⟩ with the statevector engine.
double replay_circuit(const CircuitExport& circuit, int max_qubits = kDefaultStatevectorCap);

/// [{check, samples, max_violation, tolerance, passed}, ...]
nlohmann::json reports_to_json(std::span<const CheckReport> reports);

}  // namespace rgagrover
