#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "rgagrover/experiments.hpp"

using namespace rgagrover;

TEST(Fit, ExactLine) {
  const std::vector<double> xs{1, 2, 3, 4};
  const std::vector<double> ys{5, 7, 9, 11};
  const FitResult f = fit_line(xs, ys);
  EXPECT_NEAR(f.slope, 2.0, 1e-14);
  EXPECT_NEAR(f.intercept, 3.0, 1e-14);
  EXPECT_NEAR(f.r2, 1.0, 1e-14);
}

TEST(Fit, ConstantAndNoisyData) {
  const std::vector<double> xs{0, 1, 2, 3};
  const std::vector<double> flat{4, 4, 4, 4};
  const FitResult f = fit_line(xs, flat);
  EXPECT_EQ(f.slope, 0.0);
  EXPECT_EQ(f.r2, 1.0);
  // sxx = 5, sxy = syy = 4.5
  const std::vector<double> noisy{0, 1.5, 1.5, 3};
  const FitResult g = fit_line(xs, noisy);
  EXPECT_NEAR(g.slope, 0.9, 1e-14);
  EXPECT_NEAR(g.intercept, 0.15, 1e-14);
  EXPECT_NEAR(g.r2, 0.9, 1e-14);
}

TEST(Fit, DegenerateInputs) {
  const std::vector<double> same{1, 1, 1};
  const std::vector<double> ys{1, 2, 3};
  EXPECT_THROW(fit_line(same, ys), std::invalid_argument);
  const std::vector<double> shorter{1, 2};
  EXPECT_THROW(fit_line(shorter, ys), std::invalid_argument);
}

TEST(Methods, Parse) {
  EXPECT_EQ(parse_methods("all").size(), 4u);
  const auto two = parse_methods("r8-els,r5-fixed");
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0].label(), "r8-els");
  EXPECT_EQ(two[1].label(), "r5-fixed");
  EXPECT_THROW(parse_methods(""), std::invalid_argument);
  EXPECT_THROW(parse_methods("r7-els"), std::invalid_argument);
  std::vector<std::string> labels;
  for (const auto& m : all_methods()) labels.push_back(m.label());
  EXPECT_EQ(labels, (std::vector<std::string>{"r5-fixed", "r5-els", "r6-els", "r8-els"}));
}

TEST(Experiments, TrajectoryShape) {
  const Trajectory tr = run_trajectory_experiment();
  ASSERT_TRUE(tr.converged);
  EXPECT_DOUBLE_EQ(tr.records.front().q, 0.015625);
  EXPECT_GE(tr.final_record().q, 0.9999);
  double peak = 0.0;
  for (const auto& r : tr.records) peak = std::max(peak, r.grad_norm);
  EXPECT_LE(peak, std::sqrt(0.5) + 1e-15);
  EXPECT_GT(peak, 0.7);
}

TEST(Experiments, ClassicBaseline) {
  const Trajectory two = classic_grover_baseline(make_instance(2, 1), 1);
  EXPECT_EQ(two.method, "classic");
  EXPECT_NEAR(two.final_record().q, 1.0, 1e-15);
  EXPECT_EQ(two.final_record().h_exp_calls, 1);

  const Trajectory ten = classic_grover_baseline(make_instance(10, 1), 50);
  auto best = std::max_element(ten.records.begin(), ten.records.end(),
                               [](const auto& a, const auto& b) { return a.q < b.q; });
  EXPECT_GE(best->q, 0.999);
  // round(π/4 · sqrt(1024) - 1/2) = 25
  EXPECT_EQ(best->k, 25);
  EXPECT_LT(ten.final_record().q, best->q - 0.1);
}

TEST(Experiments, SweepRowsSortedAndConsistent) {
  const auto methods = all_methods();
  const auto rows = sweep_n(2, 5, 1e-4, methods, false);
  ASSERT_EQ(rows.size(), 16u);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_TRUE(rows[i - 1].method < rows[i].method ||
                (rows[i - 1].method == rows[i].method && rows[i - 1].n < rows[i].n));
  }
  for (const auto& r : rows) {
    EXPECT_TRUE(r.converged);
    EXPECT_GE(r.iterations, 1);
    EXPECT_EQ(r.h_exp_calls, r.iterations * h_exp_multiplier(r.kind));
    EXPECT_EQ(r.runtime_seconds, 0.0);
    EXPECT_DOUBLE_EQ(r.sqrt_N, std::sqrt(static_cast<double>(r.N)));
  }
  const auto fits = fit_sweep_n(rows, 2);
  EXPECT_EQ(fits.size(), 4u);
  for (const auto& f : fits) EXPECT_EQ(f.x_variable, "sqrt_N");
}

TEST(Experiments, EpsSweepGrowsWithPrecision) {
  const std::vector<double> eps{1e-2, 1e-6, 1e-10};
  const std::vector<Method> m{Method{RetractionKind::SixFactor, ExactLineSearch{}}};
  const auto rows = sweep_eps(8, eps, m, false);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_LT(rows[0].epsilon, rows[1].epsilon);
  EXPECT_GE(rows[0].iterations, rows[2].iterations);
  const auto fits = fit_sweep_eps(rows);
  ASSERT_EQ(fits.size(), 1u);
  EXPECT_EQ(fits[0].x_variable, "log10_inv_epsilon");
  EXPECT_GE(fits[0].slope, 0.0);
  EXPECT_EQ(default_eps_list().size(), 11u);
}

TEST(Experiments, IterationCountIndependentOfMarkedSet) {
  const GroverInstance a = make_instance(9, 1, std::vector<std::uint64_t>{0});
  const GroverInstance b = make_instance(9, 1, std::vector<std::uint64_t>{511});
  for (const auto& m : all_methods()) {
    EXPECT_EQ(rga_run(a, m.kind, m.policy, 1e-6).iterations(),
              rga_run(b, m.kind, m.policy, 1e-6).iterations());
  }
}
