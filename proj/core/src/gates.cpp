#include "rgagrover/gates.hpp"

#include <algorithm>

namespace rgagrover {

std::size_t GateSequence::h_exp_count() const {
  return static_cast<std::size_t>(std::count_if(
      gates.begin(), gates.end(), [](const Gate& g) { return g.generator == Generator::HProj; }));
}

std::string_view to_string(Generator g) {
  return g == Generator::HProj ? "H" : "PSI0";
}

}  // namespace rgagrover
