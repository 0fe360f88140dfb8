#include "clarke/config.hpp"

#include <fstream>
#include <vector>

namespace clarke {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& object, const std::string& prefix,
                         std::initializer_list<const char*> known) {
    for (const auto& item : object.items()) {
        bool found = false;
        for (const char* key : known) {
            if (item.key() == key) {
                found = true;
                break;
            }
        }
        if (!found) {
            throw ConfigError(prefix.empty() ? item.key() : prefix + "." + item.key(),
                              "unknown key");
        }
    }
}

double get_number(const json& object, const std::string& prefix, const char* key,
                  double fallback) {
    if (!object.contains(key)) return fallback;
    const json& value = object.at(key);
    if (!value.is_number())
        throw ConfigError(prefix.empty() ? key : prefix + "." + key, "expected a number");
    return value.get<double>();
}

std::int64_t get_integer(const json& object, const std::string& prefix, const char* key,
                         std::int64_t fallback) {
    if (!object.contains(key)) return fallback;
    const json& value = object.at(key);
    if (!value.is_number_integer())
        throw ConfigError(prefix.empty() ? key : prefix + "." + key, "expected an integer");
    return value.get<std::int64_t>();
}

RobotGeometry parse_geometry_object(const json& object, const std::string& prefix) {
    if (!object.is_object()) throw ConfigError(prefix, "expected an object");
    reject_unknown_keys(object, prefix, {"n", "l", "d", "psi"});

    const FrameworkConfig defaults;
    const auto n = static_cast<int>(
        get_integer(object, prefix, "n", defaults.geometry.joint_count()));
    const double l = get_number(object, prefix, "l", defaults.geometry.segment_length());
    const double d = get_number(object, prefix, "d", defaults.geometry.pitch_radius());

    try {
        if (object.contains("psi")) {
            const json& psi = object.at("psi");
            if (!psi.is_array()) throw ConfigError(prefix + ".psi", "expected an array");
            std::vector<double> angles;
            angles.reserve(psi.size());
            for (const json& value : psi) {
                if (!value.is_number()) throw ConfigError(prefix + ".psi", "expected numbers");
                angles.push_back(value.get<double>());
            }
            return RobotGeometry(n, l, d, std::move(angles));
        }
        return RobotGeometry::equally_spaced(n, l, d);
    } catch (const std::invalid_argument& error) {
        throw ConfigError(prefix, error.what());
    }
}

}  // namespace

FrameworkConfig default_config() { return FrameworkConfig{}; }

FrameworkConfig parse_config(const json& document) {
    if (!document.is_object()) throw ConfigError("", "config must be a JSON object");
    reject_unknown_keys(document, "",
                        {"geometry", "bounds", "limits", "gains", "plant", "segments",
                         "settle_time", "output"});
    if (document.contains("output")) parse_output_options(document);  // validated here too

    FrameworkConfig config;

    if (document.contains("geometry"))
        config.geometry = parse_geometry_object(document.at("geometry"), "geometry");

    if (document.contains("bounds")) {
        const json& bounds = document.at("bounds");
        if (!bounds.is_object()) throw ConfigError("bounds", "expected an object");
        reject_unknown_keys(bounds, "bounds", {"phi_max", "theta_max"});
        config.bounds.phi_max = get_number(bounds, "bounds", "phi_max", config.bounds.phi_max);
        config.bounds.theta_max =
            get_number(bounds, "bounds", "theta_max", config.bounds.theta_max);
    }

    if (document.contains("limits")) {
        const json& limits = document.at("limits");
        if (!limits.is_object()) throw ConfigError("limits", "expected an object");
        reject_unknown_keys(limits, "limits", {"v_max", "a_max", "t_user"});
        config.limits.v_max = get_number(limits, "limits", "v_max", config.limits.v_max);
        config.limits.a_max = get_number(limits, "limits", "a_max", config.limits.a_max);
        config.limits.t_user = get_number(limits, "limits", "t_user", config.limits.t_user);
    }

    if (document.contains("gains")) {
        const json& gains = document.at("gains");
        if (!gains.is_object()) throw ConfigError("gains", "expected an object");
        reject_unknown_keys(gains, "gains", {"k_p", "k_d"});
        config.k_p = get_number(gains, "gains", "k_p", config.k_p);
        config.k_d = get_number(gains, "gains", "k_d", config.k_d);
    }

    if (document.contains("plant")) {
        const json& plant = document.at("plant");
        if (!plant.is_object()) throw ConfigError("plant", "expected an object");
        reject_unknown_keys(plant, "plant",
                            {"sample_time", "time_constant", "noise_amplitude", "rng_seed"});
        config.plant.sample_time =
            get_number(plant, "plant", "sample_time", config.plant.sample_time);
        config.plant.time_constant =
            get_number(plant, "plant", "time_constant", config.plant.time_constant);
        config.plant.noise_amplitude =
            get_number(plant, "plant", "noise_amplitude", config.plant.noise_amplitude);
        config.plant.rng_seed = static_cast<std::uint64_t>(get_integer(
            plant, "plant", "rng_seed", static_cast<std::int64_t>(config.plant.rng_seed)));
    }

    config.segments = static_cast<int>(get_integer(document, "", "segments", config.segments));
    config.settle_time = get_number(document, "", "settle_time", config.settle_time);

    try {
        validate(config);
    } catch (const std::invalid_argument& error) {
        throw ConfigError("", error.what());
    }
    return config;
}

FrameworkConfig load_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigIoError("cannot read config file: " + path);
    json document;
    try {
        document = json::parse(in);
    } catch (const json::parse_error& error) {
        throw ConfigError("", std::string("config is not valid JSON: ") + error.what());
    }
    return parse_config(document);
}

OutputOptions parse_output_options(const json& document) {
    OutputOptions options;
    if (!document.is_object() || !document.contains("output")) return options;
    const json& output = document.at("output");
    if (!output.is_object()) throw ConfigError("output", "expected an object");
    reject_unknown_keys(output, "output", {"dir", "backbone_stride", "backbone_samples"});
    if (output.contains("dir")) {
        if (!output.at("dir").is_string()) throw ConfigError("output.dir", "expected a string");
        options.dir = output.at("dir").get<std::string>();
    }
    options.backbone_stride = static_cast<int>(
        get_integer(output, "output", "backbone_stride", options.backbone_stride));
    options.backbone_samples = static_cast<int>(
        get_integer(output, "output", "backbone_samples", options.backbone_samples));
    if (options.backbone_stride < 1)
        throw ConfigError("output.backbone_stride", "must be >= 1");
    if (options.backbone_samples < 2)
        throw ConfigError("output.backbone_samples", "must be >= 2");
    return options;
}

RobotGeometry parse_geometry(const json& document) {
    if (document.is_object() && document.contains("geometry"))
        return parse_geometry_object(document.at("geometry"), "geometry");
    return parse_geometry_object(document, "geometry");
}

RobotGeometry load_geometry_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigIoError("cannot read geometry file: " + path);
    json document;
    try {
        document = json::parse(in);
    } catch (const json::parse_error& error) {
        throw ConfigError("", std::string("geometry is not valid JSON: ") + error.what());
    }
    return parse_geometry(document);
}

nlohmann::json config_to_json(const FrameworkConfig& config) {
    json document;
    document["geometry"] = {{"n", config.geometry.joint_count()},
                            {"l", config.geometry.segment_length()},
                            {"d", config.geometry.pitch_radius()},
                            {"psi", config.geometry.joint_angles()}};
    document["bounds"] = {{"phi_max", config.bounds.phi_max},
                          {"theta_max", config.bounds.theta_max}};
    document["limits"] = {{"v_max", config.limits.v_max},
                          {"a_max", config.limits.a_max},
                          {"t_user", config.limits.t_user}};
    document["gains"] = {{"k_p", config.k_p}, {"k_d", config.k_d}};
    document["plant"] = {{"sample_time", config.plant.sample_time},
                         {"time_constant", config.plant.time_constant},
                         {"noise_amplitude", config.plant.noise_amplitude},
                         {"rng_seed", config.plant.rng_seed}};
    document["segments"] = config.segments;
    document["settle_time"] = config.settle_time;
    return document;
}

}  // namespace clarke
