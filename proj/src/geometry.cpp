#include "clarke/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace clarke {

Mat3 Mat3::rot_y(double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    Mat3 r;
    r.m[0][0] = c;
    r.m[0][2] = s;
    r.m[2][0] = -s;
    r.m[2][2] = c;
    return r;
}

Mat3 Mat3::rot_z(double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    Mat3 r;
    r.m[0][0] = c;
    r.m[0][1] = -s;
    r.m[1][0] = s;
    r.m[1][1] = c;
    return r;
}

Mat3 Mat3::operator*(const Mat3& rhs) const {
    Mat3 out;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            double acc = 0.0;
            for (int k = 0; k < 3; ++k) acc += m[i][k] * rhs.m[k][j];
            out.m[i][j] = acc;
        }
    }
    return out;
}

Vec3 Mat3::operator*(const Vec3& v) const {
    return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
            m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
            m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
}

Mat3 Mat3::transposed() const {
    Mat3 out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out.m[i][j] = m[j][i];
    return out;
}

double Mat3::orthonormality_error() const {
    const Mat3 gram = transposed() * (*this);
    double err = 0.0;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            err = std::max(err, std::abs(gram.m[i][j] - (i == j ? 1.0 : 0.0)));
        }
    }
    const double det =
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
        m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
        m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    return std::max(err, std::abs(det - 1.0));
}

Pose Pose::compose(const Pose& local) const {
    return {position + orientation * local.position, orientation * local.orientation};
}

namespace {

// (1 - cos(u)) / u, stable near zero.
double one_minus_cos_over(double u) {
    if (std::abs(u) < 1e-2) {
        const double u2 = u * u;
        return u * (0.5 - u2 / 24.0 + u2 * u2 / 720.0);
    }
    return (1.0 - std::cos(u)) / u;
}

// sin(u) / u, stable near zero.
double sin_over(double u) {
    if (std::abs(u) < 1e-2) {
        const double u2 = u * u;
        return 1.0 - u2 / 6.0 + u2 * u2 / 120.0;
    }
    return std::sin(u) / u;
}

}  // namespace

std::vector<Pose> cc_forward_kinematics(const ClarkeCoordinates& coords,
                                        const RobotGeometry& geometry, int samples) {
    if (samples < 2)
        throw std::invalid_argument("cc_forward_kinematics: need at least 2 samples");

    const ArcParameters arc = clarke_to_arc(coords, geometry);
    const Mat3 plane = Mat3::rot_z(arc.plane_angle);
    const Mat3 plane_inv = Mat3::rot_z(-arc.plane_angle);
    const double length = geometry.segment_length();

    std::vector<Pose> poses;
    poses.reserve(static_cast<std::size_t>(samples));
    for (int k = 0; k < samples; ++k) {
        const double t = static_cast<double>(k) / static_cast<double>(samples - 1);
        const double arc_len = length * t;
        const double bend = arc.bending_angle * t;
        const Vec3 in_plane{arc_len * one_minus_cos_over(bend), 0.0, arc_len * sin_over(bend)};
        Pose p;
        p.position = plane * in_plane;
        p.orientation = plane * Mat3::rot_y(bend) * plane_inv;
        poses.push_back(p);
    }
    return poses;
}

std::vector<Pose> chain_segments(const std::vector<std::vector<Pose>>& per_segment_poses) {
    std::vector<Pose> out;
    Pose accumulated;
    for (const auto& segment : per_segment_poses) {
        for (const auto& pose : segment) out.push_back(accumulated.compose(pose));
        if (!segment.empty()) accumulated = accumulated.compose(segment.back());
    }
    return out;
}

namespace {

struct TangentField {
    std::vector<double> angle;  // tangent direction per sample
    std::vector<PlanarCurve::Point> normal;
    bool closed = false;
    std::size_t count = 0;  // samples excluding any duplicated closing point
};

bool is_closed(const PlanarCurve& curve) {
    const auto& first = curve.points.front();
    const auto& last = curve.points.back();
    return std::hypot(first.x - last.x, first.y - last.y) <= 1e-12;
}

TangentField estimate_tangents(const PlanarCurve& curve) {
    const auto& p = curve.points;
    if (p.size() < 3) throw std::invalid_argument("parallel curve: need at least 3 points");
    for (std::size_t i = 1; i < p.size(); ++i) {
        if (p[i].x == p[i - 1].x && p[i].y == p[i - 1].y)
            throw std::invalid_argument("parallel curve: consecutive points must be distinct");
    }

    TangentField field;
    field.closed = is_closed(curve);
    field.count = field.closed ? p.size() - 1 : p.size();
    field.angle.resize(field.count);
    field.normal.resize(field.count);

    const std::size_t m = field.count;
    for (std::size_t i = 0; i < m; ++i) {
        double dx, dy;
        if (field.closed) {
            const auto& next = p[(i + 1) % m];
            const auto& prev = p[(i + m - 1) % m];
            dx = next.x - prev.x;
            dy = next.y - prev.y;
        } else if (i == 0) {
            dx = p[1].x - p[0].x;
            dy = p[1].y - p[0].y;
        } else if (i == m - 1) {
            dx = p[m - 1].x - p[m - 2].x;
            dy = p[m - 1].y - p[m - 2].y;
        } else {
            dx = p[i + 1].x - p[i - 1].x;
            dy = p[i + 1].y - p[i - 1].y;
        }
        const double len = std::hypot(dx, dy);
        if (len == 0.0)
            throw std::invalid_argument("parallel curve: cusp (reversing samples) detected");
        field.angle[i] = std::atan2(dy, dx);
        field.normal[i] = {-dy / len, dx / len};  // left of the direction of travel
    }
    return field;
}

double turning_increment(double from, double to) {
    return std::remainder(to - from, 2.0 * kPi);
}

double segment_length_at(const PlanarCurve& curve, std::size_t i, std::size_t j) {
    const auto& a = curve.points[i];
    const auto& b = curve.points[j];
    return std::hypot(b.x - a.x, b.y - a.y);
}

}  // namespace

PlanarCurve offset_polyline(const PlanarCurve& curve, double distance) {
    const TangentField field = estimate_tangents(curve);
    PlanarCurve out;
    out.points.resize(field.count);
    for (std::size_t i = 0; i < field.count; ++i) {
        out.points[i] = {curve.points[i].x + distance * field.normal[i].x,
                         curve.points[i].y + distance * field.normal[i].y};
    }
    return out;
}

double polyline_length(const PlanarCurve& curve) {
    double len = 0.0;
    for (std::size_t i = 1; i < curve.points.size(); ++i) {
        len += segment_length_at(curve, i - 1, i);
    }
    return len;
}

OffsetDisplacement parallel_curve_displacement(const PlanarCurve& curve, double distance) {
    const TangentField field = estimate_tangents(curve);
    const std::size_t m = field.count;

    // Turning along the polyline; for closed curves include the wrap-around step.
    double turning = 0.0;
    for (std::size_t i = 1; i < m; ++i) {
        turning += turning_increment(field.angle[i - 1], field.angle[i]);
    }
    if (field.closed) turning += turning_increment(field.angle[m - 1], field.angle[0]);

    // Regularity: |d| must stay below the local osculating radius.
    for (std::size_t i = 1; i < m; ++i) {
        const double dtheta = std::abs(turning_increment(field.angle[i - 1], field.angle[i]));
        const double ds = segment_length_at(curve, i - 1, i);
        if (std::abs(distance) * dtheta >= ds) {
            throw std::invalid_argument(
                "parallel curve: |d| >= local osculating radius, offset self-intersects");
        }
    }

    auto offset_length = [&](double d) {
        double len = 0.0;
        PlanarCurve::Point prev{curve.points[0].x + d * field.normal[0].x,
                                curve.points[0].y + d * field.normal[0].y};
        const PlanarCurve::Point first = prev;
        for (std::size_t i = 1; i < m; ++i) {
            const PlanarCurve::Point q{curve.points[i].x + d * field.normal[i].x,
                                       curve.points[i].y + d * field.normal[i].y};
            len += std::hypot(q.x - prev.x, q.y - prev.y);
            prev = q;
        }
        if (field.closed) len += std::hypot(first.x - prev.x, first.y - prev.y);
        return len;
    };

    OffsetDisplacement out;
    out.total_turning = turning;
    out.delta_length = 0.5 * (offset_length(-distance) - offset_length(distance));
    return out;
}

}  // namespace clarke
