#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "clarke/config.hpp"
#include "clarke/experiment_io.hpp"

using namespace clarke;
using nlohmann::json;

TEST_CASE("empty document yields the documented defaults") {
    const auto config = parse_config(json::object());
    CHECK(config.geometry.joint_count() == 5);
    CHECK(config.geometry.segment_length() == 0.07);
    CHECK(config.geometry.pitch_radius() == 0.01);
    CHECK(std::abs(config.bounds.phi_max - 2.0 * kPi / 3.0) <= 1e-15);
    CHECK(config.bounds.theta_max == kPi);
    CHECK(config.limits.v_max == 0.01);
    CHECK(config.limits.a_max == 0.01);
    CHECK(config.limits.t_user == 0.0);
    CHECK(config.k_p == 10.0);
    CHECK(config.k_d == 0.0);
    CHECK(config.plant.sample_time == 0.01);
    CHECK(config.plant.time_constant == 0.2);
    CHECK(config.plant.noise_amplitude == 1e-4);
    CHECK(config.segments == 4);
    CHECK(config.settle_time == 1.0);

    // equal spacing 2*pi/n
    for (int i = 0; i < 5; ++i) {
        CHECK(std::abs(config.geometry.joint_angles()[i] - 2.0 * kPi * i / 5.0) <= 1e-15);
    }
}

TEST_CASE("partial documents override only their keys") {
    const auto config = parse_config(json::parse(R"({
        "geometry": {"n": 8, "l": 0.1},
        "plant": {"noise_amplitude": 0.0},
        "segments": 2
    })"));
    CHECK(config.geometry.joint_count() == 8);
    CHECK(config.geometry.segment_length() == 0.1);
    CHECK(config.geometry.pitch_radius() == 0.01);  // default
    CHECK(config.plant.noise_amplitude == 0.0);
    CHECK(config.plant.sample_time == 0.01);  // default
    CHECK(config.segments == 2);
}

TEST_CASE("unknown keys are rejected with their path") {
    try {
        parse_config(json::parse(R"({"plant": {"time_konstant": 0.2}})"));
        FAIL("expected ConfigError");
    } catch (const ConfigError& error) {
        CHECK(error.field() == "plant.time_konstant");
    }

    CHECK_THROWS_AS(parse_config(json::parse(R"({"speling": 1})")), ConfigError);
}

TEST_CASE("invalid values carry the field path") {
    try {
        parse_config(json::parse(R"({"limits": {"v_max": "fast"}})"));
        FAIL("expected ConfigError");
    } catch (const ConfigError& error) {
        CHECK(error.field() == "limits.v_max");
    }

    CHECK_THROWS_AS(parse_config(json::parse(R"({"segments": 0})")), ConfigError);
    CHECK_THROWS_AS(parse_config(json::parse(R"({"plant": {"time_constant": -1}})")), ConfigError);
    CHECK_THROWS_AS(parse_config(json::parse(R"({"geometry": {"n": 2}})")), ConfigError);
}

TEST_CASE("config snapshots round-trip") {
    FrameworkConfig config;
    config.segments = 7;
    config.k_d = 0.05;
    config.plant.rng_seed = 1234;
    const auto parsed = parse_config(config_to_json(config));
    CHECK(parsed.geometry == config.geometry);
    CHECK(parsed.segments == config.segments);
    CHECK(parsed.k_d == config.k_d);
    CHECK(parsed.plant.rng_seed == config.plant.rng_seed);
    CHECK(parsed.bounds.phi_max == config.bounds.phi_max);
    CHECK(parsed.limits.a_max == config.limits.a_max);
    CHECK(parsed.settle_time == config.settle_time);
}

TEST_CASE("explicit psi lists are honored and validated") {
    const auto config = parse_config(json::parse(
        R"({"geometry": {"n": 3, "psi": [0.0, 2.0943951023931953, 4.1887902047863905]}})"));
    CHECK(config.geometry.joint_count() == 3);

    CHECK_THROWS_AS(
        parse_config(json::parse(R"({"geometry": {"n": 3, "psi": [0.0, 0.3, 0.6]}})")),
        ConfigError);
}

TEST_CASE("geometry documents load bare or wrapped") {
    const auto bare = parse_geometry(json::parse(R"({"n": 4, "l": 0.05, "d": 0.008})"));
    CHECK(bare.joint_count() == 4);
    const auto wrapped = parse_geometry(json::parse(R"({"geometry": {"n": 6}})"));
    CHECK(wrapped.joint_count() == 6);
}

TEST_CASE("missing config files raise the I/O error") {
    CHECK_THROWS_AS(load_config_file("/nonexistent/config.json"), ConfigIoError);
}

TEST_CASE("segment csv layout") {
    FrameworkConfig config;
    config.segments = 1;
    config.plant.noise_amplitude = 0.0;
    const auto log =
        run_episode(config, 3, {{0.0, 0.0}}, {{0.004, 0.001}});

    std::ostringstream out;
    write_segment_csv(log.segments[0], config.geometry.joint_count(), out);
    const std::string text = out.str();

    CHECK(text.find("tick,t,des_re,des_im,") == 0);
    CHECK(text.find("cmd_rho_5") != std::string::npos);
    CHECK(text.find("meas_rho_5") != std::string::npos);
    CHECK(text.find("\r") == std::string::npos);  // LF endings only

    // one header plus one row per tick
    const std::size_t rows = static_cast<std::size_t>(
        std::count(text.begin(), text.end(), '\n'));
    CHECK(rows == log.segments[0].t.size() + 1);
}
