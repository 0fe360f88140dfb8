#include "clarke/plant_sim.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace clarke {

void validate(const PlantConfig& config) {
    if (!(config.sample_time > 0.0))
        throw std::invalid_argument("PlantConfig: sample_time must be > 0");
    if (!(config.time_constant > 0.0))
        throw std::invalid_argument("PlantConfig: time_constant must be > 0");
    if (config.noise_amplitude < 0.0)
        throw std::invalid_argument("PlantConfig: noise_amplitude must be >= 0");
}

Plant::Plant(const PlantConfig& config, const RobotGeometry& geometry, JointVector initial_state)
    : config_(config),
      geometry_(geometry),
      alpha_(std::exp(-config.sample_time / config.time_constant)),
      state_(std::move(initial_state.values)),
      rng_(config.rng_seed) {
    validate(config_);
    if (state_.size() != static_cast<std::size_t>(geometry_.joint_count()))
        throw std::invalid_argument("Plant: initial state has wrong dimension");
}

void Plant::step(const JointVector& command) {
    if (command.size() != state_.size())
        throw std::invalid_argument("Plant: command has wrong dimension");
    const double beta = 1.0 - alpha_;
    for (std::size_t i = 0; i < state_.size(); ++i) {
        state_[i] = alpha_ * state_[i] + beta * command[i];
    }
    ++tick_;
}

Measurement Plant::measure() {
    Measurement m;
    m.joints.values.resize(state_.size());
    const double a = config_.noise_amplitude;
    for (std::size_t i = 0; i < state_.size(); ++i) {
        m.joints.values[i] = state_[i] + rng_.uniform(-a, a);
    }
    m.encoded = joints_to_clarke(m.joints, geometry_);
    return m;
}

}  // namespace clarke
