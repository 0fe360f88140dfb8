#include "clarke/clarke_core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

namespace clarke {

double wrap_angle(double angle) {
    double a = std::remainder(angle, 2.0 * kPi);  // (-pi, pi]
    if (a >= kPi) a -= 2.0 * kPi;
    return a;
}

double norm_inf(Vec2 v) { return std::max(std::abs(v.re), std::abs(v.im)); }

double norm_2(Vec2 v) { return std::hypot(v.re, v.im); }

double ClarkeCoordinates::modulus() const { return std::hypot(re, im); }

double ClarkeCoordinates::argument() const {
    if (re == 0.0 && im == 0.0) return 0.0;
    double a = std::atan2(im, re);
    if (a >= kPi) a -= 2.0 * kPi;
    return a;
}

namespace {

void check_symmetry(const std::string& name, double value, double expected) {
    if (std::abs(value - expected) > kInputTolerance) {
        std::ostringstream msg;
        msg << "RobotGeometry: symmetry condition violated: " << name << " = " << value
            << " (expected " << expected << " within " << kInputTolerance << ")";
        throw std::invalid_argument(msg.str());
    }
}

}  // namespace

RobotGeometry::RobotGeometry(int joint_count, double segment_length, double pitch_radius,
                             std::vector<double> joint_angles)
    : n_(joint_count),
      length_(segment_length),
      pitch_radius_(pitch_radius),
      psi_(std::move(joint_angles)) {
    if (n_ < 3) throw std::invalid_argument("RobotGeometry: joint count must be >= 3");
    if (!(length_ > 0.0)) throw std::invalid_argument("RobotGeometry: segment length must be > 0");
    if (!(pitch_radius_ > 0.0)) throw std::invalid_argument("RobotGeometry: pitch radius must be > 0");
    if (psi_.size() != static_cast<std::size_t>(n_))
        throw std::invalid_argument("RobotGeometry: joint angle list must have n entries");

    cos_psi_.resize(psi_.size());
    sin_psi_.resize(psi_.size());
    double sum_cos = 0.0, sum_sin = 0.0, sum_cos_sin = 0.0, sum_cos2 = 0.0, sum_sin2 = 0.0;
    for (std::size_t i = 0; i < psi_.size(); ++i) {
        cos_psi_[i] = std::cos(psi_[i]);
        sin_psi_[i] = std::sin(psi_[i]);
        sum_cos += cos_psi_[i];
        sum_sin += sin_psi_[i];
        sum_cos_sin += cos_psi_[i] * sin_psi_[i];
        sum_cos2 += cos_psi_[i] * cos_psi_[i];
        sum_sin2 += sin_psi_[i] * sin_psi_[i];
    }
    check_symmetry("sum cos(psi)", sum_cos, 0.0);
    check_symmetry("sum sin(psi)", sum_sin, 0.0);
    check_symmetry("sum cos(psi)sin(psi)", sum_cos_sin, 0.0);
    check_symmetry("sum cos^2(psi)", sum_cos2, 0.5 * n_);
    check_symmetry("sum sin^2(psi)", sum_sin2, 0.5 * n_);
}

RobotGeometry RobotGeometry::equally_spaced(int joint_count, double segment_length,
                                            double pitch_radius) {
    std::vector<double> psi(static_cast<std::size_t>(std::max(joint_count, 0)));
    for (std::size_t i = 0; i < psi.size(); ++i) {
        psi[i] = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(joint_count);
    }
    return RobotGeometry(joint_count, segment_length, pitch_radius, std::move(psi));
}

bool RobotGeometry::operator==(const RobotGeometry& other) const {
    return n_ == other.n_ && length_ == other.length_ && pitch_radius_ == other.pitch_radius_ &&
           psi_ == other.psi_;
}

double JointVector::sum() const {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
}

double JointVector::norm_inf() const {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
}

double JointVector::norm_2() const {
    double s = 0.0;
    for (double v : values) s += v * v;
    return std::sqrt(s);
}

double ClarkeMatrix::forward(int row, int col) const {
    return row == 0 ? forward_re[static_cast<std::size_t>(col)]
                    : forward_im[static_cast<std::size_t>(col)];
}

double ClarkeMatrix::inverse(int row, int col) const {
    return col == 0 ? inverse_re[static_cast<std::size_t>(row)]
                    : inverse_im[static_cast<std::size_t>(row)];
}

std::array<double, 4> ClarkeMatrix::forward_times_inverse() const {
    std::array<double, 4> out{0.0, 0.0, 0.0, 0.0};
    for (int i = 0; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        out[0] += forward_re[k] * inverse_re[k];
        out[1] += forward_re[k] * inverse_im[k];
        out[2] += forward_im[k] * inverse_re[k];
        out[3] += forward_im[k] * inverse_im[k];
    }
    return out;
}

ClarkeCoordinates ClarkeMatrix::apply_forward(const JointVector& rho) const {
    if (rho.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("ClarkeMatrix: joint vector has wrong dimension");
    ClarkeCoordinates out;
    for (std::size_t i = 0; i < rho.size(); ++i) {
        out.re += forward_re[i] * rho[i];
        out.im += forward_im[i] * rho[i];
    }
    return out;
}

JointVector ClarkeMatrix::apply_inverse(const ClarkeCoordinates& coords) const {
    JointVector out = JointVector::zeros(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = coords.re * inverse_re[i] + coords.im * inverse_im[i];
    }
    return out;
}

ClarkeMatrix make_clarke_matrix(const RobotGeometry& geometry) {
    ClarkeMatrix m;
    m.n = geometry.joint_count();
    const double scale = 2.0 / static_cast<double>(m.n);
    const auto& c = geometry.cos_angles();
    const auto& s = geometry.sin_angles();
    m.forward_re.resize(c.size());
    m.forward_im.resize(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        m.forward_re[i] = scale * c[i];
        m.forward_im[i] = scale * s[i];
    }
    m.inverse_re = c;
    m.inverse_im = s;
    return m;
}

ClarkeCoordinates joints_to_clarke(const JointVector& rho, const RobotGeometry& geometry) {
    if (rho.size() != static_cast<std::size_t>(geometry.joint_count()))
        throw std::invalid_argument("joints_to_clarke: joint vector has wrong dimension");
    const auto& c = geometry.cos_angles();
    const auto& s = geometry.sin_angles();
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < rho.size(); ++i) {
        re += c[i] * rho[i];
        im += s[i] * rho[i];
    }
    const double scale = 2.0 / static_cast<double>(geometry.joint_count());
    return {scale * re, scale * im};
}

JointVector clarke_to_joints(const ClarkeCoordinates& coords, const RobotGeometry& geometry) {
    const auto& c = geometry.cos_angles();
    const auto& s = geometry.sin_angles();
    JointVector out = JointVector::zeros(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        out[i] = coords.re * c[i] + coords.im * s[i];
    }
    return out;
}

std::pair<double, double> clarke_modulus_argument(const ClarkeCoordinates& coords) {
    return {coords.modulus(), coords.argument()};
}

ClarkeCoordinates arc_to_clarke(const ArcParameters& arc, const RobotGeometry& geometry) {
    const double modulus =
        geometry.pitch_radius() * geometry.segment_length() * arc.curvature;
    return {modulus * std::cos(arc.plane_angle), modulus * std::sin(arc.plane_angle)};
}

ArcParameters clarke_to_arc(const ClarkeCoordinates& coords, const RobotGeometry& geometry) {
    ArcParameters arc;
    arc.bending_angle = coords.modulus() / geometry.pitch_radius();
    arc.curvature = arc.bending_angle / geometry.segment_length();
    arc.plane_angle = coords.argument();
    return arc;
}

JointVector interop_transfer(const JointVector& rho_source, const RobotGeometry& source,
                             const RobotGeometry& target) {
    return clarke_to_joints(joints_to_clarke(rho_source, source), target);
}

}  // namespace clarke
