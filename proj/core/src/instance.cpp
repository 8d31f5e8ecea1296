#include "rgagrover/instance.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace rgagrover {

std::vector<std::uint64_t> sample_marked(std::uint64_t N, std::uint64_t M, std::uint64_t seed) {
  if (M > N) {
    throw std::invalid_argument("cannot sample more marked items than N");
  }
  std::mt19937_64 rng(seed);
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(static_cast<std::size_t>(M));
  for (std::uint64_t j = N - M; j < N; ++j) {
    std::uniform_int_distribution<std::uint64_t> dist(0, j);
    const std::uint64_t r = dist(rng);
    if (!chosen.insert(r).second) {
      chosen.insert(j);
    }
  }
  std::vector<std::uint64_t> out(chosen.begin(), chosen.end());
  std::sort(out.begin(), out.end());
  return out;
}

GroverInstance make_instance(int n, std::uint64_t M,
                             std::optional<std::vector<std::uint64_t>> marked,
                             std::optional<std::uint64_t> seed) {
  if (n < 1 || n > kMaxQubits) {
    throw std::invalid_argument("qubit count n must be in [1, " + std::to_string(kMaxQubits) +
                                "], got " + std::to_string(n));
  }
  GroverInstance inst;
  inst.n = n;
  inst.N = std::uint64_t{1} << n;
  if (M < 1 || M >= inst.N) {
    throw std::invalid_argument("marked count M must satisfy 1 <= M < N = " +
                                std::to_string(inst.N) + ", got " + std::to_string(M));
  }
  inst.M = M;
  inst.q0 = static_cast<double>(M) / static_cast<double>(inst.N);

  if (marked) {
    auto idx = std::move(*marked);
    if (idx.size() != M) {
      throw std::invalid_argument("marked set has " + std::to_string(idx.size()) +
                                  " indices but M = " + std::to_string(M));
    }
    std::sort(idx.begin(), idx.end());
    if (std::adjacent_find(idx.begin(), idx.end()) != idx.end()) {
      throw std::invalid_argument("marked set contains duplicate indices");
    }
    if (!idx.empty() && idx.back() >= inst.N) {
      throw std::invalid_argument("marked index " + std::to_string(idx.back()) +
                                  " out of range [0, " + std::to_string(inst.N) + ")");
    }
    inst.marked = std::move(idx);
  } else if (seed) {
    inst.marked = sample_marked(inst.N, M, *seed);
    inst.seed = seed;
  }
  return inst;
}

GroverInstance with_marked(const GroverInstance& inst, std::uint64_t seed) {
  if (inst.has_marked()) {
    return inst;
  }
  GroverInstance out = inst;
  out.marked = sample_marked(inst.N, inst.M, seed);
  out.seed = seed;
  return out;
}

DerivedConstants constants(const GroverInstance& inst) {
  const double N = static_cast<double>(inst.N);
  const double M = static_cast<double>(inst.M);
  // (N - M) is formed in integers so that q0 close to 1 keeps full precision.
  const double rest = static_cast<double>(inst.N - inst.M);
  const double root = std::sqrt(2.0 * M * rest);
  DerivedConstants c;
  c.c0 = root / N;
  c.l_rie = 2.0 + N / root;
  c.l_euc = 2.0;
  return c;
}

}  // namespace rgagrover
