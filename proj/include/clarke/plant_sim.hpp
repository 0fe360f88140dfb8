#pragma once

#include <cstdint>
#include <vector>

#include "clarke/clarke_core.hpp"
#include "clarke/rng.hpp"

namespace clarke {

/// Discrete-time plant parameters: one first-order lag per actuator plus
/// uniform measurement noise.
struct PlantConfig {
    double sample_time = 0.01;      ///< s, > 0
    double time_constant = 0.2;     ///< s, > 0
    double noise_amplitude = 1e-4;  ///< m, >= 0; U[-a, +a] per joint per measurement
    std::uint64_t rng_seed = 0;
};

/// Throws std::invalid_argument when the parameters are out of range.
void validate(const PlantConfig& config);

/// One measurement: noisy joint displacements (the raw values generally
/// violate the displacement constraint) and their encoding, which
/// projects the violation away.
struct Measurement {
    JointVector joints;
    ClarkeCoordinates encoded;
};

/**
 * Simulated displacement-actuated robot: each actuator is a first-order
 * lag (PT1) discretized exactly under zero-order hold,
 *   x+ = alpha * x + (1 - alpha) * u,  alpha = exp(-Ts / tau).
 * The true state is noise-free; noise enters only through measure().
 * Deterministic for a fixed seed and command sequence. One instance per
 * segment, mutated only by its owning loop.
 */
class Plant {
public:
    Plant(const PlantConfig& config, const RobotGeometry& geometry, JointVector initial_state);

    /// Advances one sample period under the given command.
    /// Throws std::invalid_argument on dimension mismatch.
    void step(const JointVector& command);

    /// Draws fresh noise per joint and encodes the noisy measurement.
    Measurement measure();

    const std::vector<double>& state() const { return state_; }
    std::uint64_t tick() const { return tick_; }
    const PlantConfig& config() const { return config_; }

private:
    PlantConfig config_;
    RobotGeometry geometry_;
    double alpha_;
    std::vector<double> state_;
    std::uint64_t tick_ = 0;
    Rng rng_;
};

}  // namespace clarke
