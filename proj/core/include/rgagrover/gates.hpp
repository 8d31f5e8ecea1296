#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace rgagrover {

/// Which projector a phase gate exponentiates: e^{i θ H} or e^{i θ ψ0}.
enum class Generator { HProj, Psi0Proj };

struct Gate {
  Generator generator = Generator::HProj;
  double angle = 0.0;  // radians, never reduced mod 2π

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// A circuit fragment in operator order: gates.front() is the leftmost factor,
/// which acts last on a ket.
struct GateSequence {
  std::vector<Gate> gates;

  std::size_t size() const { return gates.size(); }
  bool empty() const { return gates.empty(); }
  std::size_t h_exp_count() const;

  friend bool operator==(const GateSequence&, const GateSequence&) = default;
};

std::string_view to_string(Generator g);

}  // namespace rgagrover
