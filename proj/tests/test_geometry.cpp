#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "clarke/geometry.hpp"
#include "test_support.hpp"

using namespace clarke;

namespace {

PlanarCurve make_circle(double radius, std::size_t segments) {
    PlanarCurve curve;
    curve.points.reserve(segments + 1);
    for (std::size_t i = 0; i < segments; ++i) {
        const double a = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(segments);
        curve.points.push_back({radius * std::cos(a), radius * std::sin(a)});
    }
    curve.points.push_back(curve.points.front());  // closed
    return curve;
}

PlanarCurve make_sine_arc(double amplitude, std::size_t samples) {
    // y = A sin(x) on [0, pi]: curvature vanishes at both endpoints.
    PlanarCurve curve;
    curve.points.reserve(samples);
    for (std::size_t i = 0; i < samples; ++i) {
        const double x = kPi * static_cast<double>(i) / static_cast<double>(samples - 1);
        curve.points.push_back({x, amplitude * std::sin(x)});
    }
    return curve;
}

double recover_bending_angle(const Mat3& tip_orientation) {
    double trace = 0.0;
    for (int i = 0; i < 3; ++i) trace += tip_orientation.m[i][i];
    return std::acos(std::clamp((trace - 1.0) / 2.0, -1.0, 1.0));
}

}  // namespace

TEST_CASE("straight configuration is a pure z-translation") {
    const auto geometry = RobotGeometry::equally_spaced(5, 0.07, 0.01);
    const auto poses = cc_forward_kinematics({0.0, 0.0}, geometry, 11);
    REQUIRE(poses.size() == 11);
    for (std::size_t k = 0; k < poses.size(); ++k) {
        const double expected_z = 0.07 * static_cast<double>(k) / 10.0;
        CHECK(std::abs(poses[k].position.x) <= 1e-15);
        CHECK(std::abs(poses[k].position.y) <= 1e-15);
        CHECK(std::abs(poses[k].position.z - expected_z) <= 1e-15);
        CHECK(poses[k].orientation.orthonormality_error() <= 1e-12);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                CHECK(std::abs(poses[k].orientation.m[i][j] - (i == j ? 1.0 : 0.0)) <= 1e-15);
    }
}

TEST_CASE("quarter-circle tip position") {
    const auto geometry = RobotGeometry::equally_spaced(5, 0.07, 0.01);
    const double phi = kPi / 2.0;
    ArcParameters arc;
    arc.curvature = phi / geometry.segment_length();
    arc.plane_angle = 0.0;
    const auto coords = arc_to_clarke(arc, geometry);

    const auto poses = cc_forward_kinematics(coords, geometry, 51);
    const Pose& tip = poses.back();
    const double radius = geometry.segment_length() / phi;  // 0.0445634 m
    CHECK(std::abs(tip.position.x - radius) <= 1e-12);
    CHECK(std::abs(tip.position.y) <= 1e-15);
    CHECK(std::abs(tip.position.z - radius) <= 1e-12);

    // base pose is the identity
    CHECK(std::abs(poses.front().position.x) <= 1e-15);
    CHECK(std::abs(poses.front().position.z) <= 1e-15);
    for (int i = 0; i < 3; ++i)
        CHECK(std::abs(poses.front().orientation.m[i][i] - 1.0) <= 1e-15);
}

TEST_CASE("full-circle configuration returns the tip to the base pose") {
    const auto geometry = RobotGeometry::equally_spaced(5, 0.07, 0.01);
    ArcParameters arc;
    arc.curvature = 2.0 * kPi / geometry.segment_length();
    arc.plane_angle = 0.7;
    const auto coords = arc_to_clarke(arc, geometry);

    const auto poses = cc_forward_kinematics(coords, geometry, 21);
    const Pose& tip = poses.back();
    CHECK(std::abs(tip.position.x) <= 1e-12);
    CHECK(std::abs(tip.position.y) <= 1e-12);
    CHECK(std::abs(tip.position.z) <= 1e-12);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(std::abs(tip.orientation.m[i][j] - (i == j ? 1.0 : 0.0)) <= 1e-12);
}

TEST_CASE("fk consistency: modulus equals pitch radius times recovered tip angle") {
    const auto geometry = RobotGeometry::equally_spaced(5, 0.07, 0.01);
    Rng rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        ArcParameters arc;
        arc.curvature = rng.uniform(0.3, 2.8) / geometry.segment_length();
        arc.plane_angle = rng.uniform(-kPi, kPi);
        const auto coords = arc_to_clarke(arc, geometry);
        const auto poses = cc_forward_kinematics(coords, geometry, 5);
        const double recovered = recover_bending_angle(poses.back().orientation);
        CHECK(std::abs(coords.modulus() - geometry.pitch_radius() * recovered) <= 1e-12);
        for (const Pose& pose : poses) CHECK(pose.orientation.orthonormality_error() <= 1e-9);
    }
}

TEST_CASE("forward kinematics rejects sample counts below 2") {
    const auto geometry = RobotGeometry::equally_spaced(5, 0.07, 0.01);
    CHECK_THROWS_AS(cc_forward_kinematics({0.0, 0.0}, geometry, 1), std::invalid_argument);
}

TEST_CASE("chaining a single segment leaves it unchanged") {
    const auto geometry = RobotGeometry::equally_spaced(5, 0.07, 0.01);
    const auto poses = cc_forward_kinematics({0.004, 0.002}, geometry, 9);
    const auto chained = chain_segments({poses});
    REQUIRE(chained.size() == poses.size());
    for (std::size_t k = 0; k < poses.size(); ++k) {
        CHECK(std::abs(chained[k].position.x - poses[k].position.x) <= 1e-15);
        CHECK(std::abs(chained[k].position.z - poses[k].position.z) <= 1e-15);
    }
}

TEST_CASE("two straight segments chain to twice the length") {
    const auto geometry = RobotGeometry::equally_spaced(5, 0.07, 0.01);
    const auto straight = cc_forward_kinematics({0.0, 0.0}, geometry, 5);
    const auto chained = chain_segments({straight, straight});
    REQUIRE(chained.size() == 10);
    CHECK(std::abs(chained.back().position.z - 0.14) <= 1e-15);
    CHECK(std::abs(chained.back().position.x) <= 1e-15);
}

TEST_CASE("two half-circle segments match the explicit pose product") {
    const auto geometry = RobotGeometry::equally_spaced(5, 0.07, 0.01);
    ArcParameters arc;
    arc.curvature = kPi / geometry.segment_length();
    arc.plane_angle = 0.0;
    const auto coords = arc_to_clarke(arc, geometry);
    const auto segment = cc_forward_kinematics(coords, geometry, 33);

    // oracle: compose the analytic half-circle tip pose with itself
    const double radius = geometry.segment_length() / kPi;
    Pose half;
    half.position = {2.0 * radius, 0.0, 0.0};
    half.orientation = Mat3::rot_y(kPi);
    const Pose expected = half.compose(half);

    const auto chained = chain_segments({segment, segment});
    const Pose& tip = chained.back();
    CHECK(std::abs(tip.position.x - expected.position.x) <= 1e-12);
    CHECK(std::abs(tip.position.y - expected.position.y) <= 1e-12);
    CHECK(std::abs(tip.position.z - expected.position.z) <= 1e-12);
    CHECK(std::abs(tip.position.z) <= 1e-12);  // back in the base plane
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(std::abs(tip.orientation.m[i][j] - expected.orientation.m[i][j]) <= 1e-12);
}

TEST_CASE("chaining an empty list yields an empty chain") {
    CHECK(chain_segments({}).empty());
}

TEST_CASE("parallel curves of a straight line") {
    PlanarCurve line;
    for (int i = 0; i <= 100; ++i) line.points.push_back({0.001 * i, 0.0});
    const auto result = parallel_curve_displacement(line, 0.01);
    CHECK(result.delta_length == 0.0);
    CHECK(result.total_turning == 0.0);

    PlanarCurve tilted;
    for (int i = 0; i <= 100; ++i) tilted.points.push_back({0.001 * i, 0.0007 * i});
    const auto tilted_result = parallel_curve_displacement(tilted, 0.01);
    CHECK(std::abs(tilted_result.delta_length) <= 1e-12);
    CHECK(std::abs(tilted_result.total_turning) <= 1e-12);
}

TEST_CASE("parallel curves of a full circle") {
    const double d = 0.01;
    const auto circle = make_circle(0.05, 200000);
    const auto result = parallel_curve_displacement(circle, d);
    CHECK(std::abs(result.total_turning - 2.0 * kPi) <= 1e-9);
    CHECK(std::abs(result.delta_length - 2.0 * kPi * d) <= 1e-9);
}

TEST_CASE("sine arc: arc-length difference equals d times total turning") {
    const double d = 0.002;
    const auto curve = make_sine_arc(0.2, 10000);
    const auto result = parallel_curve_displacement(curve, d);
    CHECK(std::abs(result.delta_length - d * result.total_turning) <= 1e-6);
    CHECK(std::abs(result.total_turning) > 0.1);  // the arc genuinely turns
}

TEST_CASE("offset-mean property converges at second order") {
    const double d = 0.002;
    const double amplitude = 0.2;

    // true arc length of y = A sin(x) on [0, pi] by Simpson quadrature
    const std::size_t quad = 200000;
    double true_length = 0.0;
    const double h = kPi / static_cast<double>(quad);
    auto speed = [&](double x) {
        const double slope = amplitude * std::cos(x);
        return std::sqrt(1.0 + slope * slope);
    };
    for (std::size_t i = 0; i < quad; ++i) {
        const double x0 = h * static_cast<double>(i);
        true_length += h / 6.0 * (speed(x0) + 4.0 * speed(x0 + 0.5 * h) + speed(x0 + h));
    }

    auto mean_error = [&](std::size_t samples) {
        const auto curve = make_sine_arc(amplitude, samples);
        const double plus = polyline_length(offset_polyline(curve, d));
        const double minus = polyline_length(offset_polyline(curve, -d));
        return std::abs(0.5 * (plus + minus) - true_length);
    };
    const double coarse = mean_error(2000);
    const double fine = mean_error(4000);
    CHECK(coarse / fine > 3.0);  // error quarters when samples double
    CHECK(coarse / fine < 5.0);
}

TEST_CASE("offset regularity is enforced") {
    const auto circle = make_circle(0.05, 5000);
    CHECK_THROWS_AS(parallel_curve_displacement(circle, 0.05), std::invalid_argument);
    CHECK_THROWS_AS(parallel_curve_displacement(circle, 0.06), std::invalid_argument);
    CHECK_NOTHROW(parallel_curve_displacement(circle, 0.049));
}

TEST_CASE("degenerate polylines are rejected") {
    PlanarCurve two_points;
    two_points.points = {{0.0, 0.0}, {1.0, 0.0}};
    CHECK_THROWS_AS(parallel_curve_displacement(two_points, 0.01), std::invalid_argument);

    PlanarCurve repeated;
    repeated.points = {{0.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}};
    CHECK_THROWS_AS(parallel_curve_displacement(repeated, 0.01), std::invalid_argument);
}
