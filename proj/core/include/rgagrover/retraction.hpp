#pragma once

#include <string>
#include <string_view>

#include "rgagrover/gates.hpp"

namespace rgagrover {

/// The three Grover-compatible retractions, named by the number of phase gates
/// they append per iteration.
enum class RetractionKind { FiveFactor, SixFactor, EightFactor };

/// Gate fragment V realizing the curve point γ(t) = R_U(t η) for the tangent
/// direction η̃ = x X0 + y Y0, so that γ(0) = U and γ'(0) = η.
///
/// (x, y) are the coordinates before scaling by t. A zero direction yields the
/// empty sequence. Angles are emitted as computed, not folded into (-π, π].
///
/// Throws std::invalid_argument for t < 0 or non-finite arguments.
GateSequence retraction_gates(RetractionKind kind, double t, double x, double y);

/// H-exp calls charged per iteration: 2, 3 and 4 for the 5-, 6- and 8-factor
/// retractions (adjacent H phases merge across iteration boundaries).
int h_exp_multiplier(RetractionKind kind);

/// Number of gates in one fragment before any merging (5, 6 or 8).
int factor_count(RetractionKind kind);

std::string_view to_string(RetractionKind kind);

/// Accepts "5", "6", "8" (and "five", "six", "eight").
RetractionKind parse_retraction(std::string_view text);

}  // namespace rgagrover
