#pragma once

#include <vector>

#include "clarke/clarke_core.hpp"

namespace clarke {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

inline Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, Vec3 v) { return {s * v.x, s * v.y, s * v.z}; }

/// Row-major 3x3 rotation matrix.
struct Mat3 {
    double m[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};

    static Mat3 identity() { return Mat3{}; }
    static Mat3 rot_y(double angle);
    static Mat3 rot_z(double angle);

    Mat3 operator*(const Mat3& rhs) const;
    Vec3 operator*(const Vec3& v) const;
    Mat3 transposed() const;

    /// Largest deviation of M^T M from identity and of det(M) from 1.
    double orthonormality_error() const;
};

/// Rigid transform: p_world = orientation * p_local + position.
struct Pose {
    Vec3 position;
    Mat3 orientation;

    Pose compose(const Pose& local) const;
};

/// Planar polyline, assumed a fine sampling of a C1 curve. A curve whose
/// first and last points coincide is treated as closed.
struct PlanarCurve {
    struct Point {
        double x = 0.0;
        double y = 0.0;
    };
    std::vector<Point> points;
};

struct OffsetDisplacement {
    double delta_length = 0.0;   ///< (length(-d offset) - length(+d offset)) / 2, meters
    double total_turning = 0.0;  ///< integral of signed tangent-angle increments, radians
};

/**
 * Constant-curvature forward kinematics of one segment. Returns `samples`
 * poses at equal arc-length fractions; the base pose is the identity, the
 * tip orientation is Rz(theta)*Ry(phi)*Rz(-theta) with the bending plane
 * at angle theta (bending toward +x for theta = 0). The straight
 * configuration degenerates to a pure z-translation.
 * Throws std::invalid_argument for samples < 2.
 */
std::vector<Pose> cc_forward_kinematics(const ClarkeCoordinates& coords,
                                        const RobotGeometry& geometry, int samples);

/**
 * Stacks per-segment pose sequences into one chain: each segment's poses
 * are premultiplied by the accumulated tip pose of the preceding segments.
 * Every inner sequence is expected to start at the identity.
 */
std::vector<Pose> chain_segments(const std::vector<std::vector<Pose>>& per_segment_poses);

/// Polyline offset at signed distance d along the left normals
/// (left of the direction of travel). Normal estimates use
/// central-difference tangents; open curves fall back to one-sided
/// differences at the endpoints, closed curves use periodic differences.
PlanarCurve offset_polyline(const PlanarCurve& curve, double distance);

double polyline_length(const PlanarCurve& curve);

/**
 * Arc-length difference of the two parallel curves at distance +/-d,
 * together with the total turning angle of the base curve. For a regular
 * offset the two are related by delta_length = d * total_turning up to
 * discretization error.
 * Throws std::invalid_argument when |d| reaches the local osculating
 * radius anywhere along the curve (the offset would self-intersect), or
 * when the polyline is degenerate (< 3 points, repeated or reversing
 * consecutive points).
 */
OffsetDisplacement parallel_curve_displacement(const PlanarCurve& curve, double distance);

}  // namespace clarke
