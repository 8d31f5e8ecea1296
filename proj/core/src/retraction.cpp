#include "rgagrover/retraction.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rgagrover {

namespace {

using std::numbers::pi;

Gate h(double angle) { return {Generator::HProj, angle}; }
Gate p(double angle) { return {Generator::Psi0Proj, angle}; }

}  // namespace

GateSequence retraction_gates(RetractionKind kind, double t, double x, double y) {
  if (!std::isfinite(t) || t < 0.0) {
    throw std::invalid_argument("retraction step t must be finite and >= 0");
  }
  if (!std::isfinite(x) || !std::isfinite(y)) {
    throw std::invalid_argument("tangent coordinates must be finite");
  }
  if (x == 0.0 && y == 0.0) {
    return {};
  }

  switch (kind) {
    case RetractionKind::FiveFactor: {
      const double a = std::atan2(y, x);
      const double r = std::hypot(x, y);
      const double a1 = a + pi / 2;
      const double a2 = a - pi / 2;
      // a2 - a1 = -π exactly
      return {{h(a1), p(-t * r / 2), h(-pi), p(t * r / 2), h(-a2)}};
    }
    case RetractionKind::SixFactor:
      return {{h(pi / 2), p(-t * (x + y) / 2), h(-pi), p(t * (x - y) / 2), h(pi / 2), p(t * y)}};
    case RetractionKind::EightFactor:
      return {{p(t * y / 2), h(pi / 2), p(-t * x / 2), h(-pi), p(t * x / 2), h(-pi / 2),
               p(-t * y / 2), h(pi)}};
  }
  throw std::invalid_argument("unknown retraction kind");
}

int h_exp_multiplier(RetractionKind kind) {
  switch (kind) {
    case RetractionKind::FiveFactor:
      return 2;
    case RetractionKind::SixFactor:
      return 3;
    case RetractionKind::EightFactor:
      return 4;
  }
  return 0;
}

int factor_count(RetractionKind kind) {
  switch (kind) {
    case RetractionKind::FiveFactor:
      return 5;
    case RetractionKind::SixFactor:
      return 6;
    case RetractionKind::EightFactor:
      return 8;
  }
  return 0;
}

std::string_view to_string(RetractionKind kind) {
  switch (kind) {
    case RetractionKind::FiveFactor:
      return "5";
    case RetractionKind::SixFactor:
      return "6";
    case RetractionKind::EightFactor:
      return "8";
  }
  return "?";
}

RetractionKind parse_retraction(std::string_view text) {
  if (text == "5" || text == "five") return RetractionKind::FiveFactor;
  if (text == "6" || text == "six") return RetractionKind::SixFactor;
  if (text == "8" || text == "eight") return RetractionKind::EightFactor;
  throw std::invalid_argument("unknown retraction '" + std::string(text) + "' (expected 5, 6 or 8)");
}

}  // namespace rgagrover
