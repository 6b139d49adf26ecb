#pragma once

#include <numbers>

#include "sphlab/error.hpp"

namespace sphlab {

/// Distance in P^n(R) (diameter normalized to pi) of a point at sphere distance
/// theta from the origin: 2 theta up to pi/2, 2 pi - 2 theta beyond.
inline double projective_angle(double theta) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) throw Error(ErrorCode::domain, "angle outside [0, pi]");
  return theta <= std::numbers::pi / 2 ? 2.0 * theta : 2.0 * std::numbers::pi - 2.0 * theta;
}

}  // namespace sphlab
