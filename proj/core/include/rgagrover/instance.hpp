#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace rgagrover {

/// Largest qubit count accepted by make_instance. N = 2^n must fit in 64 bits and
/// M/N must be representable as a double with room to spare.
inline constexpr int kMaxQubits = 62;

/// An unstructured-search instance: N = 2^n items, M of them marked.
///
/// The marked index set is optional. The reduced 2D dynamics only needs q0 = M/N,
/// while the statevector and dense oracles need the actual indices.
struct GroverInstance {
  int n = 0;
  std::uint64_t N = 0;
  std::uint64_t M = 0;
  std::optional<std::vector<std::uint64_t>> marked;  // sorted, distinct, in [0, N)
  std::optional<std::uint64_t> seed;                 // set when `marked` was sampled
  double q0 = 0.0;

  bool has_marked() const { return marked.has_value(); }
};

struct DerivedConstants {
  double c0 = 0.0;     // ||X0||_F = ||Y0||_F = sqrt(2 M (N - M)) / N
  double l_rie = 0.0;  // 2 + N / sqrt(2 M (N - M))
  double l_euc = 2.0;
};

/// Validates and builds an instance.
///
/// When `marked` is absent and `seed` is given, M indices are drawn uniformly
/// without replacement. When both are absent the instance carries no marked set
/// and can only drive the reduced dynamics.
///
/// Throws std::invalid_argument for n outside [1, kMaxQubits], M outside [1, N-1],
/// or a marked set with the wrong size, duplicates, or out-of-range indices.
GroverInstance make_instance(int n, std::uint64_t M,
                             std::optional<std::vector<std::uint64_t>> marked = std::nullopt,
                             std::optional<std::uint64_t> seed = std::nullopt);

/// Returns a copy of `inst` with a marked set, sampling one from `seed` if needed.
GroverInstance with_marked(const GroverInstance& inst, std::uint64_t seed);

/// Floyd's algorithm; result is sorted.
std::vector<std::uint64_t> sample_marked(std::uint64_t N, std::uint64_t M, std::uint64_t seed);

DerivedConstants constants(const GroverInstance& inst);

}  // namespace rgagrover
