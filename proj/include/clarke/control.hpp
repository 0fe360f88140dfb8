#pragma once

#include <optional>

#include "clarke/clarke_core.hpp"
#include "clarke/trajectory.hpp"

namespace clarke {

/// 2x2 gain matrix acting on Clarke-coordinate errors.
struct Mat2 {
    double a11 = 0.0, a12 = 0.0;
    double a21 = 0.0, a22 = 0.0;

    static Mat2 diagonal(double k) { return {k, 0.0, 0.0, k}; }

    Vec2 operator*(Vec2 v) const {
        return {a11 * v.re + a12 * v.im, a21 * v.re + a22 * v.im};
    }
};

/// Controller gains. The common case is diagonal K_P = k_p*I and
/// K_D = k_d*I; full 2x2 matrices may be supplied directly.
struct ControllerGains {
    Mat2 kp;
    Mat2 kd;

    /// Diagonal gains; k_p must be > 0 and k_d >= 0 (0 disables the
    /// derivative term). k_d carries units of seconds.
    static ControllerGains diagonal(double k_p, double k_d = 0.0);
};

/**
 * Proportional step with reference pre-compensation:
 *   command = desired.position + K_P * (desired.position - measured).
 * With zero error the reference passes straight through.
 */
ClarkeCoordinates p_precomp_step(const TrajectorySample& desired,
                                 const ClarkeCoordinates& measured,
                                 const ControllerGains& gains);

/**
 * PD step. The error rate is approximated from the desired velocity and a
 * backward difference of the measurement (measured velocity is not used):
 *   e_dot = desired.velocity - (measured - measured_prev) / dt.
 * Throws std::invalid_argument for dt <= 0.
 */
ClarkeCoordinates pd_step(const TrajectorySample& desired, const ClarkeCoordinates& measured,
                          const ClarkeCoordinates& measured_prev, double dt,
                          const ControllerGains& gains);

/// Decoder on the output path: the commanded joint displacements always
/// satisfy the displacement constraint.
JointVector decode_command(const ClarkeCoordinates& command, const RobotGeometry& geometry);

/**
 * Stateful per-segment controller: owns the one-tick measurement history
 * for the derivative term and clamps command moduli to the reachable
 * range before they are decoded. One instance per control loop.
 */
class ClarkeController {
public:
    /// command_modulus_limit <= 0 disables clamping (typical limit:
    /// phi_max * d, the sampler's modulus bound).
    explicit ClarkeController(ControllerGains gains, double command_modulus_limit = 0.0);

    ClarkeCoordinates step(const TrajectorySample& desired, const ClarkeCoordinates& measured,
                           double dt);

    void reset();

private:
    ControllerGains gains_;
    double command_modulus_limit_;
    bool use_derivative_;
    std::optional<ClarkeCoordinates> previous_measured_;
};

}  // namespace clarke
