#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <stdexcept>

#include "rgagrover/instance.hpp"

using namespace rgagrover;

TEST(Instance, BasicFields) {
  const GroverInstance inst = make_instance(4, 3);
  EXPECT_EQ(inst.N, 16u);
  EXPECT_EQ(inst.M, 3u);
  EXPECT_DOUBLE_EQ(inst.q0, 3.0 / 16.0);
  EXPECT_FALSE(inst.has_marked());
}

TEST(Instance, RejectsBadArguments) {
  EXPECT_THROW(make_instance(0, 1), std::invalid_argument);
  EXPECT_THROW(make_instance(63, 1), std::invalid_argument);
  EXPECT_THROW(make_instance(3, 0), std::invalid_argument);
  EXPECT_THROW(make_instance(3, 8), std::invalid_argument);
  EXPECT_THROW(make_instance(3, 2, std::vector<std::uint64_t>{1}), std::invalid_argument);
  EXPECT_THROW(make_instance(3, 2, std::vector<std::uint64_t>{1, 1}), std::invalid_argument);
  EXPECT_THROW(make_instance(3, 1, std::vector<std::uint64_t>{8}), std::invalid_argument);
}

TEST(Instance, MarkedSetIsSortedAndKept) {
  const GroverInstance inst = make_instance(3, 3, std::vector<std::uint64_t>{6, 0, 3});
  ASSERT_TRUE(inst.has_marked());
  EXPECT_EQ(*inst.marked, (std::vector<std::uint64_t>{0, 3, 6}));
}

TEST(Instance, SampledMarkedSetIsDeterministic) {
  const auto a = sample_marked(1024, 10, 7);
  const auto b = sample_marked(1024, 10, 7);
  const auto c = sample_marked(1024, 10, 8);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
  EXPECT_EQ(std::set<std::uint64_t>(a.begin(), a.end()).size(), 10u);
  EXPECT_TRUE(std::is_sorted(a.begin(), a.end()));
  for (auto i : a) EXPECT_LT(i, 1024u);
}

TEST(Instance, SampleAllButOne) {
  const auto s = sample_marked(32, 31, 3);
  EXPECT_EQ(s.size(), 31u);
  EXPECT_EQ(std::set<std::uint64_t>(s.begin(), s.end()).size(), 31u);
}

TEST(Instance, WithMarkedFillsSet) {
  const GroverInstance bare = make_instance(5, 2);
  const GroverInstance inst = with_marked(bare, 11);
  ASSERT_TRUE(inst.has_marked());
  EXPECT_EQ(inst.marked->size(), 2u);
  EXPECT_EQ(inst.seed, std::optional<std::uint64_t>{11});
}

TEST(Constants, SmallInstance) {
  // N = 4, M = 1: c0 = sqrt(6)/4, L = 2 + 4/sqrt(6).
  const DerivedConstants c = constants(make_instance(2, 1));
  EXPECT_NEAR(c.c0, std::sqrt(6.0) / 4.0, 1e-15);
  EXPECT_NEAR(c.l_rie, 3.632993, 1e-6);
  EXPECT_EQ(c.l_euc, 2.0);
}

TEST(Constants, FifteenQubits) {
  const DerivedConstants c = constants(make_instance(15, 1));
  EXPECT_NEAR(c.l_rie, 130.002, 1e-3);
}

TEST(Constants, LargeNKeepsPrecision) {
  // N - M formed in integers: at n = 60 the double q0 cannot resolve 1 - 1/N.
  const GroverInstance inst = make_instance(60, 1);
  const double N = std::ldexp(1.0, 60);
  const DerivedConstants c = constants(inst);
  EXPECT_NEAR(c.l_rie / (2.0 + std::sqrt(N / 2.0)), 1.0, 1e-12);
}
