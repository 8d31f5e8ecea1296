#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rgagrover::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitNotConverged = 2;

/// Entry point of the rga_grover tool. `args` excludes the program name.
/// Returns 0 on success, 1 on invalid input, 2 when a run does not converge or a
/// verification check fails.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rgagrover::cli
