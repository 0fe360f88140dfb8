#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "clarke/orchestrator.hpp"

namespace clarke {

/// Config content is invalid (bad value, unknown key, wrong type).
/// `field` carries the offending JSON path, e.g. "plant.time_constant".
class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& field, const std::string& message)
        : std::runtime_error(field.empty() ? message : field + ": " + message), field_(field) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

/// Config file cannot be read.
class ConfigIoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Defaults: n = 5 equally spaced joints, l = 0.07 m, d = 0.01 m,
/// phi_max = 2*pi/3, theta_max = pi, v_max = a_max = 0.01, k_p = 10,
/// sample time 10 ms, time constant 200 ms, noise amplitude 0.1 mm,
/// 4 segments, 1 s settle window.
FrameworkConfig default_config();

/// Output settings of the batch front end; an optional "output" object in
/// the config document, overridable by command-line flags.
struct OutputOptions {
    std::string dir = ".";
    int backbone_stride = 20;    ///< emit backbone samples every N ticks
    int backbone_samples = 21;   ///< poses per segment and frame
};

OutputOptions parse_output_options(const nlohmann::json& document);

/**
 * Parses a config document. All keys are optional and fall back to the
 * defaults; unknown keys are rejected. Units: meters, radians, seconds.
 * Throws ConfigError with the offending field path.
 */
FrameworkConfig parse_config(const nlohmann::json& document);

/// Reads and parses a JSON config file. Throws ConfigIoError when the
/// file cannot be read and ConfigError when the content is invalid.
FrameworkConfig load_config_file(const std::string& path);

/// Geometry from a document holding either a bare geometry object or a
/// full config with a "geometry" key.
RobotGeometry parse_geometry(const nlohmann::json& document);
RobotGeometry load_geometry_file(const std::string& path);

/// Config snapshot for manifests; parse_config(config_to_json(c)) == c.
nlohmann::json config_to_json(const FrameworkConfig& config);

}  // namespace clarke
