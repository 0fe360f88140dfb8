#include "clarke/control.hpp"

#include <cmath>
#include <stdexcept>

namespace clarke {

ControllerGains ControllerGains::diagonal(double k_p, double k_d) {
    if (!(k_p > 0.0)) throw std::invalid_argument("ControllerGains: k_p must be > 0");
    if (k_d < 0.0) throw std::invalid_argument("ControllerGains: k_d must be >= 0");
    return {Mat2::diagonal(k_p), Mat2::diagonal(k_d)};
}

ClarkeCoordinates p_precomp_step(const TrajectorySample& desired,
                                 const ClarkeCoordinates& measured,
                                 const ControllerGains& gains) {
    const Vec2 error = desired.position - measured;
    return desired.position + gains.kp * error;
}

ClarkeCoordinates pd_step(const TrajectorySample& desired, const ClarkeCoordinates& measured,
                          const ClarkeCoordinates& measured_prev, double dt,
                          const ControllerGains& gains) {
    if (!(dt > 0.0)) throw std::invalid_argument("pd_step: dt must be > 0");
    const Vec2 error = desired.position - measured;
    const Vec2 error_rate = desired.velocity - (measured - measured_prev) * (1.0 / dt);
    return desired.position + gains.kp * error + gains.kd * error_rate;
}

JointVector decode_command(const ClarkeCoordinates& command, const RobotGeometry& geometry) {
    return clarke_to_joints(command, geometry);
}

ClarkeController::ClarkeController(ControllerGains gains, double command_modulus_limit)
    : gains_(gains),
      command_modulus_limit_(command_modulus_limit),
      use_derivative_(gains.kd.a11 != 0.0 || gains.kd.a12 != 0.0 || gains.kd.a21 != 0.0 ||
                      gains.kd.a22 != 0.0) {}

ClarkeCoordinates ClarkeController::step(const TrajectorySample& desired,
                                         const ClarkeCoordinates& measured, double dt) {
    ClarkeCoordinates command;
    if (use_derivative_) {
        // First tick: no history yet, so the measurement difference is zero.
        const ClarkeCoordinates prev = previous_measured_.value_or(measured);
        command = pd_step(desired, measured, prev, dt, gains_);
        previous_measured_ = measured;
    } else {
        command = p_precomp_step(desired, measured, gains_);
    }
    if (command_modulus_limit_ > 0.0) {
        const double modulus = command.modulus();
        if (modulus > command_modulus_limit_) {
            const double scale = command_modulus_limit_ / modulus;
            command = {command.re * scale, command.im * scale};
        }
    }
    return command;
}

void ClarkeController::reset() { previous_measured_.reset(); }

}  // namespace clarke
