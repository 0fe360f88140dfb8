#pragma once

#include <cmath>

#include "clarke/clarke_core.hpp"

namespace clarke {

/// Kinematic constraints on the joint displacements plus an optional
/// user-requested minimum duration.
struct KinematicLimits {
    double v_max = 0.01;  ///< m/s, > 0
    double a_max = 0.01;  ///< m/s^2, > 0
    double t_user = 0.0;  ///< s, >= 0
};

/// Throws std::invalid_argument when the limits are out of range.
void validate(const KinematicLimits& limits);

/// Normalized path primitive value and its first two derivatives with
/// respect to the time primitive tau.
struct PathPrimitive {
    double s = 0.0;
    double s_prime = 0.0;
    double s_double_prime = 0.0;
};

/// Peak of s'(tau) on [0, 1], attained at tau = 1/2.
inline constexpr double kPeakPathVelocity = 35.0 / 16.0;

/// Peak of s''(tau) on [0, 1], 84/(5*sqrt(5)).
inline const double kPeakPathAcceleration = 84.0 / (5.0 * std::sqrt(5.0));

/**
 * C3-smooth seventh-order point-to-point path primitive
 *   s(tau) = -20 tau^7 + 70 tau^6 - 84 tau^5 + 35 tau^4
 * with s(0) = s'(0) = s'(1) = s''(0) = s''(1) = 0 and s(1) = 1. The
 * argument is clipped to [0, 1]; since the derivatives vanish at both
 * boundaries, the clipped primitive defines a trajectory for all t.
 */
PathPrimitive path_primitive(double tau);

/**
 * Minimal duration honoring the kinematic constraints for a move of
 * magnitude `delta`:
 *   T = max{ 35*delta/(16*v_max), sqrt(84*delta/(5*sqrt(5)*a_max)), t_user }.
 * With t_user = 0 and delta > 0 the executed trajectory attains exactly
 * one of the limits.
 */
double compute_duration(double delta, const KinematicLimits& limits);

/// State of a manifold trajectory at time t.
struct TrajectorySample {
    double t = 0.0;
    ClarkeCoordinates position;
    Vec2 velocity;      ///< m/s
    Vec2 acceleration;  ///< m/s^2
};

/**
 * Point-to-point trajectory on the Clarke manifold,
 *   rho_bar_d(t) = rho_bar_start + (rho_bar_goal - rho_bar_start) * s(t/T).
 * The plan is a straight line on the manifold; velocity and acceleration
 * are evaluated from the closed-form derivatives of the path primitive,
 * never by differencing. Immutable after construction; sampling is pure.
 */
class ClarkeTrajectoryPlan {
public:
    ClarkeTrajectoryPlan(ClarkeCoordinates start, ClarkeCoordinates goal, double duration,
                         KinematicLimits limits_used);

    TrajectorySample sample(double t) const;

    ClarkeCoordinates start() const { return start_; }
    ClarkeCoordinates goal() const { return goal_; }
    double duration() const { return duration_; }

    /// The manifold-side limits the duration was computed from.
    const KinematicLimits& limits_used() const { return limits_used_; }

private:
    ClarkeCoordinates start_;
    ClarkeCoordinates goal_;
    Vec2 delta_;
    double duration_;
    KinematicLimits limits_used_;
};

/// Point-to-point trajectory in joint space; all joint profiles share one
/// duration, so the move is synchronized across joints.
class JointTrajectoryPlan {
public:
    struct Sample {
        double t = 0.0;
        JointVector position;
        JointVector velocity;
        JointVector acceleration;
    };

    JointTrajectoryPlan(JointVector start, JointVector goal, double duration);

    Sample sample(double t) const;

    const JointVector& start() const { return start_; }
    const JointVector& goal() const { return goal_; }
    double duration() const { return duration_; }

private:
    JointVector start_;
    JointVector goal_;
    double duration_;
};

/**
 * Translates joint-space limits into manifold-side limits for the move
 * start -> goal:
 *   v_bar_max = sqrt(2/n) * (|delta|_inf / |delta|_2) * v_max
 * and the same scaling for a_bar_max. Durations computed from these
 * manifold limits guarantee that the decoded joint profiles respect
 * v_max and a_max. For start == goal the limits pass through unchanged.
 * t_user is preserved.
 */
KinematicLimits map_limits_to_manifold(const ClarkeCoordinates& start,
                                       const ClarkeCoordinates& goal, int joint_count,
                                       const KinematicLimits& limits);

/// Plans a joint-space move; delta = |goal - start|_inf feeds the
/// duration rule. Throws std::invalid_argument on dimension mismatch.
JointTrajectoryPlan plan_joint_trajectory(const JointVector& start, const JointVector& goal,
                                          const KinematicLimits& limits);

/// Plans a manifold move; delta = |goal - start|_inf with the limits
/// mapped through map_limits_to_manifold.
ClarkeTrajectoryPlan plan_clarke_trajectory(const ClarkeCoordinates& start,
                                            const ClarkeCoordinates& goal, int joint_count,
                                            const KinematicLimits& limits);

}  // namespace clarke
