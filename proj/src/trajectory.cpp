#include "clarke/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace clarke {

void validate(const KinematicLimits& limits) {
    if (!(limits.v_max > 0.0))
        throw std::invalid_argument("KinematicLimits: v_max must be > 0");
    if (!(limits.a_max > 0.0))
        throw std::invalid_argument("KinematicLimits: a_max must be > 0");
    if (limits.t_user < 0.0)
        throw std::invalid_argument("KinematicLimits: t_user must be >= 0");
}

PathPrimitive path_primitive(double tau) {
    const double x = std::clamp(tau, 0.0, 1.0);
    PathPrimitive p;
    p.s = ((((-20.0 * x) + 70.0) * x - 84.0) * x + 35.0) * x * x * x * x;
    p.s_prime = ((((-140.0 * x) + 420.0) * x - 420.0) * x + 140.0) * x * x * x;
    p.s_double_prime = ((((-840.0 * x) + 2100.0) * x - 1680.0) * x + 420.0) * x * x;
    return p;
}

double compute_duration(double delta, const KinematicLimits& limits) {
    validate(limits);
    if (delta < 0.0) throw std::invalid_argument("compute_duration: delta must be >= 0");
    const double t_velocity = kPeakPathVelocity * delta / limits.v_max;
    const double t_acceleration = std::sqrt(kPeakPathAcceleration * delta / limits.a_max);
    return std::max({t_velocity, t_acceleration, limits.t_user});
}

ClarkeTrajectoryPlan::ClarkeTrajectoryPlan(ClarkeCoordinates start, ClarkeCoordinates goal,
                                           double duration, KinematicLimits limits_used)
    : start_(start),
      goal_(goal),
      delta_(goal - start),
      duration_(duration),
      limits_used_(limits_used) {}

TrajectorySample ClarkeTrajectoryPlan::sample(double t) const {
    TrajectorySample out;
    out.t = t;
    if (duration_ <= 0.0) {
        out.position = start_;
        return out;
    }
    const PathPrimitive p = path_primitive(t / duration_);
    // lerp keeps the endpoints exact.
    out.position = {std::lerp(start_.re, goal_.re, p.s), std::lerp(start_.im, goal_.im, p.s)};
    out.velocity = delta_ * (p.s_prime / duration_);
    out.acceleration = delta_ * (p.s_double_prime / (duration_ * duration_));
    return out;
}

JointTrajectoryPlan::JointTrajectoryPlan(JointVector start, JointVector goal, double duration)
    : start_(std::move(start)), goal_(std::move(goal)), duration_(duration) {
    if (start_.size() != goal_.size())
        throw std::invalid_argument("JointTrajectoryPlan: start/goal dimension mismatch");
}

JointTrajectoryPlan::Sample JointTrajectoryPlan::sample(double t) const {
    const std::size_t n = start_.size();
    Sample out;
    out.t = t;
    out.position = JointVector::zeros(n);
    out.velocity = JointVector::zeros(n);
    out.acceleration = JointVector::zeros(n);
    if (duration_ <= 0.0) {
        out.position = start_;
        return out;
    }
    const PathPrimitive p = path_primitive(t / duration_);
    const double inv_t = 1.0 / duration_;
    for (std::size_t i = 0; i < n; ++i) {
        const double delta = goal_[i] - start_[i];
        out.position[i] = std::lerp(start_[i], goal_[i], p.s);
        out.velocity[i] = delta * p.s_prime * inv_t;
        out.acceleration[i] = delta * p.s_double_prime * inv_t * inv_t;
    }
    return out;
}

KinematicLimits map_limits_to_manifold(const ClarkeCoordinates& start,
                                       const ClarkeCoordinates& goal, int joint_count,
                                       const KinematicLimits& limits) {
    const Vec2 delta = goal - start;
    const double delta_inf = norm_inf(delta);
    const double delta_2 = norm_2(delta);
    if (delta_2 == 0.0) return limits;  // degenerate move, mapping unused

    const double ratio = std::sqrt(2.0 / static_cast<double>(joint_count)) * delta_inf / delta_2;
    KinematicLimits mapped = limits;
    mapped.v_max = ratio * limits.v_max;
    mapped.a_max = ratio * limits.a_max;
    return mapped;
}

JointTrajectoryPlan plan_joint_trajectory(const JointVector& start, const JointVector& goal,
                                          const KinematicLimits& limits) {
    if (start.size() != goal.size())
        throw std::invalid_argument("plan_joint_trajectory: start/goal dimension mismatch");
    double delta = 0.0;
    for (std::size_t i = 0; i < start.size(); ++i) {
        delta = std::max(delta, std::abs(goal[i] - start[i]));
    }
    return JointTrajectoryPlan(start, goal, compute_duration(delta, limits));
}

ClarkeTrajectoryPlan plan_clarke_trajectory(const ClarkeCoordinates& start,
                                            const ClarkeCoordinates& goal, int joint_count,
                                            const KinematicLimits& limits) {
    const KinematicLimits mapped = map_limits_to_manifold(start, goal, joint_count, limits);
    const double delta = norm_inf(goal - start);
    return ClarkeTrajectoryPlan(start, goal, compute_duration(delta, mapped), mapped);
}

}  // namespace clarke
