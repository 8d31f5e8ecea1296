#include <gtest/gtest.h>

#include <sstream>
#include <string>

#include "rgagrover/io.hpp"

using namespace rgagrover;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST(Io, FormatDoubleRoundTrips) {
  for (double v : {0.1, 1.0 / 3.0, 1e-300, 0.015625, 123456.789}) {
    EXPECT_EQ(std::stod(format_double(v)), v);
  }
}

TEST(Io, TrajectoryCsv) {
  const Trajectory tr =
      rga_run(make_instance(4, 1), RetractionKind::FiveFactor, FixedInverseLipschitz{}, 1e-3);
  std::ostringstream os;
  write_trajectory_csv(os, tr);
  const auto lines = lines_of(os.str());
  ASSERT_EQ(lines.size(), tr.records.size() + 1);
  EXPECT_EQ(lines[0], kTrajectoryHeader);
  EXPECT_EQ(lines[1].rfind("0,0.0625,", 0), 0u) << lines[1];
}

TEST(Io, SweepAndFitCsv) {
  const auto methods = parse_methods("r6-els");
  const auto rows = sweep_n(2, 3, 1e-3, methods, false);
  std::ostringstream os;
  write_sweep_csv(os, rows);
  const auto lines = lines_of(os.str());
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[0], kSweepHeader);
  EXPECT_EQ(lines[1].rfind("r6-els,6,els,2,4,2,", 0), 0u) << lines[1];

  std::ostringstream fs;
  const std::vector<FitResult> fits{{"r6-els", "sqrt_N", 1.5, -2.0, 0.5}};
  write_fits_csv(fs, fits);
  EXPECT_EQ(fs.str(), std::string(kFitsHeader) + "\nr6-els,sqrt_N,1.5,-2,0.5\n");
}

TEST(Io, CircuitJsonRoundTrip) {
  const GroverInstance inst = make_instance(6, 2, std::nullopt, 42);
  const Trajectory tr = rga_run(inst, RetractionKind::FiveFactor, FixedInverseLipschitz{}, 1e-3);
  const CircuitExport c = make_circuit_export(inst, tr);
  EXPECT_EQ(c.gates.size(), 5u * static_cast<std::size_t>(tr.iterations()));
  EXPECT_EQ(c.h_exp_multiplier, 2);
  EXPECT_EQ(c.seed, std::optional<std::uint64_t>{42});

  const nlohmann::json j = to_json(c);
  const CircuitExport back = circuit_from_json(nlohmann::json::parse(j.dump()));
  EXPECT_EQ(back.gates, c.gates);
  EXPECT_EQ(back.marked, c.marked);
  EXPECT_EQ(back.expected_final_q, c.expected_final_q);
  EXPECT_EQ(back.kind, c.kind);
  EXPECT_EQ(to_json(back), j);
  EXPECT_NEAR(replay_circuit(back), tr.final_record().q, 1e-10);
}

TEST(Io, CircuitIsInApplicationOrder) {
  const GroverInstance inst = make_instance(3, 1, std::vector<std::uint64_t>{4});
  const Trajectory tr = rga_run(inst, RetractionKind::EightFactor, ExactLineSearch{}, 1e-6);
  const CircuitExport c = make_circuit_export(inst, tr);
  const GateSequence first = trajectory_gates(tr).front();
  ASSERT_GE(c.gates.size(), first.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    EXPECT_EQ(c.gates[i], first.gates[first.size() - 1 - i]) << i;
  }
}

TEST(Io, RejectsMalformedCircuits) {
  EXPECT_THROW(make_circuit_export(make_instance(3, 1),
                                   rga_run(make_instance(3, 1), RetractionKind::FiveFactor,
                                           FixedInverseLipschitz{}, 1e-2)),
               std::invalid_argument);
  EXPECT_THROW(circuit_from_json(nlohmann::json::object()), std::invalid_argument);
  const GroverInstance inst = make_instance(3, 1, std::vector<std::uint64_t>{1});
  nlohmann::json j = to_json(make_circuit_export(
      inst, rga_run(inst, RetractionKind::FiveFactor, FixedInverseLipschitz{}, 1e-2)));
  j["gates"][0]["generator"] = "Z";
  EXPECT_THROW(circuit_from_json(j), std::invalid_argument);
}

TEST(Io, ReportsJson) {
  const std::vector<CheckReport> reports{make_report("a", 2, 0.0, 1.0),
                                         make_report("b", 1, 3.0, 1.0)};
  const nlohmann::json j = reports_to_json(reports);
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[0]["check"], "a");
  EXPECT_EQ(j[0]["passed"], true);
  EXPECT_EQ(j[1]["passed"], false);
  EXPECT_EQ(j[1]["samples"], 1);
}
