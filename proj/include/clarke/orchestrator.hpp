#pragma once

#include <cstdint>
#include <vector>

#include "clarke/clarke_core.hpp"
#include "clarke/control.hpp"
#include "clarke/plant_sim.hpp"
#include "clarke/sampler.hpp"
#include "clarke/trajectory.hpp"

namespace clarke {

/// Full parameter set of one framework instance. Every segment of a
/// multi-segment robot runs its own instance with these shared parameters.
struct FrameworkConfig {
    RobotGeometry geometry = RobotGeometry::equally_spaced(5, 0.07, 0.01);
    SampleBounds bounds;
    KinematicLimits limits;
    double k_p = 10.0;
    double k_d = 0.0;  ///< seconds; 0 selects the P controller with pre-compensation
    PlantConfig plant;
    int segments = 4;
    double settle_time = 1.0;  ///< extra simulated time after the synchronized duration, s
};

/// Throws std::invalid_argument (with the offending field in the message)
/// when any sub-config is out of range.
void validate(const FrameworkConfig& config);

/// One segment's episode inputs. Seeds are derived from the master seed
/// as base + segment index; sub-streams (goal draw, closed-loop plant,
/// open-loop plant) are split off that base seed.
struct SegmentTask {
    int index = 0;
    std::uint64_t seed = 0;
    ClarkeCoordinates start;
    ClarkeCoordinates goal;
};

/// Per-tick record of one segment's loop.
struct SegmentLog {
    int index = 0;
    std::uint64_t seed = 0;
    ClarkeCoordinates start;
    ClarkeCoordinates goal;
    double initial_duration = 0.0;  ///< duration before synchronization
    double final_duration = 0.0;    ///< synchronized duration actually executed

    std::vector<double> t;
    std::vector<TrajectorySample> desired;
    std::vector<ClarkeCoordinates> measured;           ///< closed-loop encoder output
    std::vector<ClarkeCoordinates> command;            ///< controller output
    std::vector<ClarkeCoordinates> open_loop_measured; ///< reference fed straight to a twin plant
    std::vector<JointVector> commanded_joints;
    std::vector<JointVector> true_joints;
    std::vector<JointVector> measured_joints;
};

/// Complete record of one episode; the config snapshot and seeds suffice
/// to replay it bit-identically.
struct ExperimentLog {
    FrameworkConfig config;
    std::uint64_t master_seed = 0;
    double synchronized_duration = 0.0;
    std::vector<SegmentLog> segments;
};

/**
 * Runs the per-segment tasks: plans a manifold trajectory per segment,
 * synchronizes all segments to the maximum duration by replanning with
 * t_user = T*, then steps every loop at the plant sample time from t = 0
 * through T* plus the settle window. Segments are independent state
 * machines; results do not depend on their execution order.
 */
ExperimentLog run_segments(const FrameworkConfig& config, std::uint64_t master_seed,
                           const std::vector<SegmentTask>& tasks);

/// Episode with explicit per-segment endpoints (one start and one goal
/// per segment). Throws std::invalid_argument on count mismatch.
ExperimentLog run_episode(const FrameworkConfig& config, std::uint64_t master_seed,
                          const std::vector<ClarkeCoordinates>& starts,
                          const std::vector<ClarkeCoordinates>& goals);

/// Episode with sampled goals: every segment starts straight at (0, 0)
/// and draws its goal from the sampler using its derived seed.
ExperimentLog run_episode(const FrameworkConfig& config, std::uint64_t master_seed);

/**
 * Bypasses planner and trajectory generator: each external joint-space
 * reference is encoded with the source robot's geometry and fed to the
 * controllers as the desired Clarke coordinate (reference rates are
 * zero). Decoding targets the configured geometry, so source and target
 * robots may differ. One reference per tick; an empty stream yields an
 * empty log. Throws std::invalid_argument when a reference does not
 * match the source geometry's joint count.
 */
ExperimentLog external_injection(const FrameworkConfig& config, std::uint64_t master_seed,
                                 const std::vector<JointVector>& references,
                                 const RobotGeometry& source_geometry);

}  // namespace clarke
