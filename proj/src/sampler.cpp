#include "clarke/sampler.hpp"

#include <cmath>
#include <stdexcept>

#include "clarke/rng.hpp"

namespace clarke {

void validate(const SampleBounds& bounds) {
    if (!(bounds.phi_max > 0.0))
        throw std::invalid_argument("SampleBounds: phi_max must be > 0");
    if (!(bounds.theta_max > 0.0) || bounds.theta_max > kPi)
        throw std::invalid_argument("SampleBounds: theta_max must be in (0, pi]");
}

std::vector<ClarkeCoordinates> sample_clarke(const SampleBounds& bounds,
                                             const RobotGeometry& geometry,
                                             std::uint64_t seed, std::size_t count) {
    validate(bounds);
    if (count < 1) throw std::invalid_argument("sample_clarke: count must be >= 1");

    const double modulus_max = bounds.phi_max * geometry.pitch_radius();
    Rng rng(seed);
    std::vector<ClarkeCoordinates> samples;
    samples.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double modulus = modulus_max * rng.uniform01();
        const double argument = bounds.theta_max * (2.0 * rng.uniform01() - 1.0);
        samples.push_back({modulus * std::cos(argument), modulus * std::sin(argument)});
    }
    return samples;
}

}  // namespace clarke
