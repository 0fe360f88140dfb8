#pragma once

#include <cstdint>
#include <vector>

#include "clarke/clarke_core.hpp"

namespace clarke {

/// Workspace bounds for the planner: maximum bending angle and maximum
/// bending-plane angle of the sampled tip orientations.
struct SampleBounds {
    double phi_max = 2.0 * kPi / 3.0;  ///< rad, > 0
    double theta_max = kPi;            ///< rad, in (0, pi]
};

/// Throws std::invalid_argument when the bounds are out of range.
void validate(const SampleBounds& bounds);

/**
 * Rejection-free sampling of feasible Clarke coordinates: the modulus is
 * uniform on [0, phi_max*d] and the argument uniform on
 * [-theta_max, theta_max). Every sample decodes to a joint vector that
 * satisfies the displacement constraint, so no sample is ever discarded.
 *
 * Deterministic for a fixed seed (one modulus draw, then one argument
 * draw per sample). Throws std::invalid_argument for count < 1.
 */
std::vector<ClarkeCoordinates> sample_clarke(const SampleBounds& bounds,
                                             const RobotGeometry& geometry,
                                             std::uint64_t seed, std::size_t count);

}  // namespace clarke
