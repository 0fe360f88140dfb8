#include "clarke/orchestrator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "clarke/rng.hpp"

namespace clarke {

void validate(const FrameworkConfig& config) {
    validate(config.bounds);
    validate(config.limits);
    validate(config.plant);
    if (!(config.k_p > 0.0)) throw std::invalid_argument("FrameworkConfig: k_p must be > 0");
    if (config.k_d < 0.0) throw std::invalid_argument("FrameworkConfig: k_d must be >= 0");
    if (config.segments < 1)
        throw std::invalid_argument("FrameworkConfig: segments must be >= 1");
    if (config.settle_time < 0.0)
        throw std::invalid_argument("FrameworkConfig: settle_time must be >= 0");
}

namespace {

// Sub-stream indices split off each segment's base seed.
constexpr std::uint64_t kGoalStream = 0;
constexpr std::uint64_t kPlantStream = 1;
constexpr std::uint64_t kOpenLoopPlantStream = 2;

SegmentLog run_one_segment(const FrameworkConfig& config, const SegmentTask& task,
                           double initial_duration, double synchronized_duration) {
    const RobotGeometry& geometry = config.geometry;
    const double sample_time = config.plant.sample_time;

    KinematicLimits synchronized_limits = config.limits;
    synchronized_limits.t_user = synchronized_duration;
    const ClarkeTrajectoryPlan plan = plan_clarke_trajectory(
        task.start, task.goal, geometry.joint_count(), synchronized_limits);

    SegmentLog log;
    log.index = task.index;
    log.seed = task.seed;
    log.start = task.start;
    log.goal = task.goal;
    log.initial_duration = initial_duration;
    log.final_duration = plan.duration();

    PlantConfig plant_config = config.plant;
    plant_config.rng_seed = derive_stream_seed(task.seed, kPlantStream);
    PlantConfig open_loop_config = config.plant;
    open_loop_config.rng_seed = derive_stream_seed(task.seed, kOpenLoopPlantStream);

    const JointVector initial_joints = clarke_to_joints(task.start, geometry);
    Plant plant(plant_config, geometry, initial_joints);
    Plant open_loop_plant(open_loop_config, geometry, initial_joints);
    ClarkeController controller(ControllerGains{Mat2::diagonal(config.k_p),
                                                Mat2::diagonal(config.k_d)},
                                config.bounds.phi_max * geometry.pitch_radius());

    const double total_time = synchronized_duration + config.settle_time;
    const auto steps = static_cast<std::size_t>(std::ceil(total_time / sample_time - 1e-9));
    const std::size_t rows = steps + 1;
    log.t.reserve(rows);
    log.desired.reserve(rows);
    log.measured.reserve(rows);
    log.command.reserve(rows);
    log.open_loop_measured.reserve(rows);
    log.commanded_joints.reserve(rows);
    log.true_joints.reserve(rows);
    log.measured_joints.reserve(rows);

    for (std::size_t k = 0; k < rows; ++k) {
        const double t = static_cast<double>(k) * sample_time;
        const TrajectorySample desired = plan.sample(t);

        const Measurement m = plant.measure();
        const ClarkeCoordinates cmd = controller.step(desired, m.encoded, sample_time);
        const JointVector cmd_joints = decode_command(cmd, geometry);

        const Measurement open_loop_m = open_loop_plant.measure();
        const JointVector open_loop_cmd = decode_command(desired.position, geometry);

        log.t.push_back(t);
        log.desired.push_back(desired);
        log.measured.push_back(m.encoded);
        log.command.push_back(cmd);
        log.open_loop_measured.push_back(open_loop_m.encoded);
        log.commanded_joints.push_back(cmd_joints);
        log.true_joints.push_back(JointVector(plant.state()));
        log.measured_joints.push_back(m.joints);

        plant.step(cmd_joints);
        open_loop_plant.step(open_loop_cmd);
    }
    return log;
}

}  // namespace

ExperimentLog run_segments(const FrameworkConfig& config, std::uint64_t master_seed,
                           const std::vector<SegmentTask>& tasks) {
    validate(config);

    std::vector<double> initial_durations;
    initial_durations.reserve(tasks.size());
    double synchronized = 0.0;
    for (const SegmentTask& task : tasks) {
        const double duration =
            plan_clarke_trajectory(task.start, task.goal, config.geometry.joint_count(),
                                   config.limits)
                .duration();
        initial_durations.push_back(duration);
        synchronized = std::max(synchronized, duration);
    }

    ExperimentLog log;
    log.config = config;
    log.master_seed = master_seed;
    log.synchronized_duration = synchronized;
    log.segments.reserve(tasks.size());
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        log.segments.push_back(
            run_one_segment(config, tasks[i], initial_durations[i], synchronized));
    }
    return log;
}

ExperimentLog run_episode(const FrameworkConfig& config, std::uint64_t master_seed,
                          const std::vector<ClarkeCoordinates>& starts,
                          const std::vector<ClarkeCoordinates>& goals) {
    validate(config);
    const auto segments = static_cast<std::size_t>(config.segments);
    if (starts.size() != segments || goals.size() != segments)
        throw std::invalid_argument("run_episode: need one start and one goal per segment");

    std::vector<SegmentTask> tasks(segments);
    for (std::size_t i = 0; i < segments; ++i) {
        tasks[i] = {static_cast<int>(i), master_seed + i, starts[i], goals[i]};
    }
    return run_segments(config, master_seed, tasks);
}

ExperimentLog run_episode(const FrameworkConfig& config, std::uint64_t master_seed) {
    validate(config);
    const auto segments = static_cast<std::size_t>(config.segments);
    std::vector<SegmentTask> tasks(segments);
    for (std::size_t i = 0; i < segments; ++i) {
        const std::uint64_t seed = master_seed + i;
        const ClarkeCoordinates goal =
            sample_clarke(config.bounds, config.geometry,
                          derive_stream_seed(seed, kGoalStream), 1)[0];
        tasks[i] = {static_cast<int>(i), seed, ClarkeCoordinates{}, goal};
    }
    return run_segments(config, master_seed, tasks);
}

ExperimentLog external_injection(const FrameworkConfig& config, std::uint64_t master_seed,
                                 const std::vector<JointVector>& references,
                                 const RobotGeometry& source_geometry) {
    validate(config);

    // Encode the stream once; every segment tracks the same references.
    std::vector<ClarkeCoordinates> encoded;
    encoded.reserve(references.size());
    for (const JointVector& reference : references) {
        if (reference.size() != static_cast<std::size_t>(source_geometry.joint_count()))
            throw std::invalid_argument(
                "external_injection: reference does not match the source geometry");
        encoded.push_back(joints_to_clarke(reference, source_geometry));
    }

    ExperimentLog log;
    log.config = config;
    log.master_seed = master_seed;
    log.synchronized_duration =
        encoded.empty() ? 0.0
                        : static_cast<double>(encoded.size() - 1) * config.plant.sample_time;

    const RobotGeometry& geometry = config.geometry;
    const double sample_time = config.plant.sample_time;
    for (int s = 0; s < config.segments; ++s) {
        SegmentLog segment;
        segment.index = s;
        segment.seed = master_seed + static_cast<std::uint64_t>(s);
        if (!encoded.empty()) {
            segment.start = encoded.front();
            segment.goal = encoded.back();
            segment.final_duration = log.synchronized_duration;

            PlantConfig plant_config = config.plant;
            plant_config.rng_seed = derive_stream_seed(segment.seed, kPlantStream);
            PlantConfig open_loop_config = config.plant;
            open_loop_config.rng_seed = derive_stream_seed(segment.seed, kOpenLoopPlantStream);

            const JointVector initial_joints = clarke_to_joints(encoded.front(), geometry);
            Plant plant(plant_config, geometry, initial_joints);
            Plant open_loop_plant(open_loop_config, geometry, initial_joints);
            ClarkeController controller(
                ControllerGains{Mat2::diagonal(config.k_p), Mat2::diagonal(config.k_d)},
                config.bounds.phi_max * geometry.pitch_radius());

            for (std::size_t k = 0; k < encoded.size(); ++k) {
                TrajectorySample desired;
                desired.t = static_cast<double>(k) * sample_time;
                desired.position = encoded[k];

                const Measurement m = plant.measure();
                const ClarkeCoordinates cmd = controller.step(desired, m.encoded, sample_time);
                const JointVector cmd_joints = decode_command(cmd, geometry);
                const Measurement open_loop_m = open_loop_plant.measure();

                segment.t.push_back(desired.t);
                segment.desired.push_back(desired);
                segment.measured.push_back(m.encoded);
                segment.command.push_back(cmd);
                segment.open_loop_measured.push_back(open_loop_m.encoded);
                segment.commanded_joints.push_back(cmd_joints);
                segment.true_joints.push_back(JointVector(plant.state()));
                segment.measured_joints.push_back(m.joints);

                plant.step(cmd_joints);
                open_loop_plant.step(decode_command(desired.position, geometry));
            }
        }
        log.segments.push_back(std::move(segment));
    }
    return log;
}

}  // namespace clarke
