// Batch front end for the Clarke-coordinate framework: coordinate
// transforms, feasible-configuration sampling, trajectory planning, and
// closed-loop episodes with deterministic CSV/JSON outputs.
//
// Exit codes: 0 success, 1 I/O failure, 2 validation failure.

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "clarke/config.hpp"
#include "clarke/csv.hpp"
#include "clarke/experiment_io.hpp"
#include "clarke/orchestrator.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitValidation = 2;

double parse_number(const std::string& token, const std::string& what) {
    double value = 0.0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    const auto result = std::from_chars(begin, end, value);
    if (result.ec != std::errc{} || result.ptr != end) {
        throw clarke::ConfigError(what, "cannot parse number '" + token + "'");
    }
    return value;
}

std::vector<double> parse_number_list(const std::string& text, const std::string& what) {
    std::vector<double> values;
    std::size_t begin = 0;
    while (begin <= text.size()) {
        const std::size_t comma = text.find(',', begin);
        const std::string token =
            text.substr(begin, comma == std::string::npos ? std::string::npos : comma - begin);
        values.push_back(parse_number(token, what));
        if (comma == std::string::npos) break;
        begin = comma + 1;
    }
    return values;
}

clarke::ClarkeCoordinates parse_pair(const std::string& text, const std::string& what) {
    const auto values = parse_number_list(text, what);
    if (values.size() != 2) throw clarke::ConfigError(what, "expected two comma-separated values");
    return {values[0], values[1]};
}

std::ofstream open_output_file(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    return out;
}

// ---------------------------------------------------------------- transform

struct TransformOptions {
    std::string joints;
    std::string coords;
    std::string to_geometry;
    bool millimeters = false;
};

int cmd_transform(const clarke::FrameworkConfig& config, const TransformOptions& options) {
    const double in_scale = options.millimeters ? 1e-3 : 1.0;
    const double out_scale = options.millimeters ? 1e3 : 1.0;

    std::optional<clarke::RobotGeometry> target;
    if (!options.to_geometry.empty()) target = clarke::load_geometry_file(options.to_geometry);

    if (!options.joints.empty()) {
        auto values = parse_number_list(options.joints, "--joints");
        for (double& v : values) v *= in_scale;
        if (values.size() != static_cast<std::size_t>(config.geometry.joint_count()))
            throw clarke::ConfigError("--joints", "expected " +
                                                      std::to_string(config.geometry.joint_count()) +
                                                      " values");
        const clarke::JointVector rho(values);
        const double residual = rho.sum();
        if (std::abs(residual) > 1e-6) {
            std::cerr << "displacement constraint violated: residual "
                      << clarke::format_double(residual) << " m exceeds 1e-06 m\n";
            return kExitValidation;
        }

        if (target) {
            const auto transferred = clarke::interop_transfer(rho, config.geometry, *target);
            for (std::size_t i = 0; i < transferred.size(); ++i)
                std::cout << (i ? "," : "") << "rho_" << i + 1;
            std::cout << "\n";
            for (std::size_t i = 0; i < transferred.size(); ++i)
                std::cout << (i ? "," : "") << clarke::format_double(transferred[i] * out_scale);
            std::cout << "\n";
        } else {
            const auto coords = clarke::joints_to_clarke(rho, config.geometry);
            std::cout << "rho_re,rho_im\n"
                      << clarke::format_double(coords.re * out_scale) << ','
                      << clarke::format_double(coords.im * out_scale) << "\n";
        }
        return kExitOk;
    }

    const auto pair = parse_pair(options.coords, "--clarke");
    const clarke::ClarkeCoordinates coords{pair.re * in_scale, pair.im * in_scale};
    const clarke::RobotGeometry& geometry = target ? *target : config.geometry;
    const auto rho = clarke::clarke_to_joints(coords, geometry);
    for (std::size_t i = 0; i < rho.size(); ++i) std::cout << (i ? "," : "") << "rho_" << i + 1;
    std::cout << "\n";
    for (std::size_t i = 0; i < rho.size(); ++i)
        std::cout << (i ? "," : "") << clarke::format_double(rho[i] * out_scale);
    std::cout << "\n";
    return kExitOk;
}

// ------------------------------------------------------------------- sample

struct SampleOptions {
    std::int64_t count = 0;
    std::uint64_t seed = 0;
    std::string output;
};

void write_samples(const clarke::FrameworkConfig& config, const SampleOptions& options,
                   std::ostream& out) {
    const auto samples =
        clarke::sample_clarke(config.bounds, config.geometry, options.seed,
                              static_cast<std::size_t>(options.count));
    out << "index,rho_re,rho_im";
    for (int j = 1; j <= config.geometry.joint_count(); ++j) out << ",rho_" << j;
    out << "\n";
    for (std::size_t i = 0; i < samples.size(); ++i) {
        out << i << ',' << clarke::format_double(samples[i].re) << ','
            << clarke::format_double(samples[i].im);
        const auto rho = clarke::clarke_to_joints(samples[i], config.geometry);
        for (std::size_t j = 0; j < rho.size(); ++j) out << ',' << clarke::format_double(rho[j]);
        out << "\n";
    }
}

int cmd_sample(const clarke::FrameworkConfig& config, const SampleOptions& options) {
    if (options.count < 1) throw clarke::ConfigError("--count", "must be >= 1");
    if (options.output.empty()) {
        write_samples(config, options, std::cout);
    } else {
        auto out = open_output_file(options.output);
        write_samples(config, options, out);
    }
    return kExitOk;
}

// --------------------------------------------------------------------- plan

struct PlanOptions {
    std::string start;
    std::string goal;
    double dt = 0.0;
    bool millimeters = false;
    std::string output;
};

void write_plan(const clarke::FrameworkConfig& config, const clarke::ClarkeTrajectoryPlan& plan,
                double dt, std::ostream& out) {
    out << "t,re,im,re_dot,im_dot,re_ddot,im_ddot";
    for (int j = 1; j <= config.geometry.joint_count(); ++j) out << ",rho_" << j;
    out << "\n";

    auto emit = [&](double t) {
        const auto s = plan.sample(t);
        out << clarke::format_double(s.t) << ',' << clarke::format_double(s.position.re) << ','
            << clarke::format_double(s.position.im) << ',' << clarke::format_double(s.velocity.re)
            << ',' << clarke::format_double(s.velocity.im) << ','
            << clarke::format_double(s.acceleration.re) << ','
            << clarke::format_double(s.acceleration.im);
        const auto rho = clarke::clarke_to_joints(s.position, config.geometry);
        for (std::size_t j = 0; j < rho.size(); ++j) out << ',' << clarke::format_double(rho[j]);
        out << "\n";
    };

    emit(0.0);
    for (std::size_t k = 1; static_cast<double>(k) * dt < plan.duration(); ++k) {
        emit(static_cast<double>(k) * dt);
    }
    emit(plan.duration());
}

int cmd_plan(const clarke::FrameworkConfig& config, const PlanOptions& options) {
    if (!(options.dt > 0.0)) throw clarke::ConfigError("--dt", "must be > 0");
    const double in_scale = options.millimeters ? 1e-3 : 1.0;
    const auto start_raw = parse_pair(options.start, "--start");
    const auto goal_raw = parse_pair(options.goal, "--goal");
    const clarke::ClarkeCoordinates start{start_raw.re * in_scale, start_raw.im * in_scale};
    const clarke::ClarkeCoordinates goal{goal_raw.re * in_scale, goal_raw.im * in_scale};

    const auto plan = clarke::plan_clarke_trajectory(start, goal, config.geometry.joint_count(),
                                                     config.limits);
    if (options.output.empty()) {
        write_plan(config, plan, options.dt, std::cout);
    } else {
        auto out = open_output_file(options.output);
        write_plan(config, plan, options.dt, out);
    }
    return kExitOk;
}

// ---------------------------------------------------------------------- run

struct RunOptions {
    std::uint64_t seed = 0;
    std::string goals_file;
    std::string external_file;
    std::string external_geometry;
    clarke::OutputOptions output;  // config-file defaults, flags override
};

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw clarke::ConfigIoError("cannot read file: " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

bool looks_like_header(const std::string& line) {
    for (char c : line) {
        if (std::isalpha(static_cast<unsigned char>(c))) return true;
    }
    return false;
}

clarke::ExperimentLog run_with_goals(const clarke::FrameworkConfig& config,
                                     const RunOptions& options) {
    if (options.goals_file.empty()) return clarke::run_episode(config, options.seed);

    std::vector<clarke::ClarkeCoordinates> starts, goals;
    const auto lines = read_lines(options.goals_file);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (i == 0 && looks_like_header(lines[i])) continue;
        const auto values = parse_number_list(lines[i], "--goals");
        if (values.size() != 4)
            throw clarke::ConfigError("--goals",
                                      "each row must be start_re,start_im,goal_re,goal_im");
        starts.push_back({values[0], values[1]});
        goals.push_back({values[2], values[3]});
    }
    if (starts.size() != static_cast<std::size_t>(config.segments))
        throw clarke::ConfigError("--goals", "expected one row per segment");
    return clarke::run_episode(config, options.seed, starts, goals);
}

clarke::ExperimentLog run_with_external(const clarke::FrameworkConfig& config,
                                        const RunOptions& options) {
    const auto source = clarke::load_geometry_file(options.external_geometry);
    std::vector<clarke::JointVector> references;
    for (const auto& line : read_lines(options.external_file)) {
        if (references.empty() && looks_like_header(line)) continue;
        references.emplace_back(parse_number_list(line, "--external"));
    }
    return clarke::external_injection(config, options.seed, references, source);
}

int cmd_run(const clarke::FrameworkConfig& config, const RunOptions& options) {
    if (options.external_file.empty() != options.external_geometry.empty())
        throw clarke::ConfigError("--external",
                                  "--external and --external-geometry must be given together");

    const clarke::ExperimentLog log = options.external_file.empty()
                                          ? run_with_goals(config, options)
                                          : run_with_external(config, options);

    std::error_code ec;
    std::filesystem::create_directories(options.output.dir, ec);
    if (ec) throw std::runtime_error("cannot create output directory: " + options.output.dir);

    const std::filesystem::path dir(options.output.dir);
    for (const auto& segment : log.segments) {
        const auto path = dir / ("segment_" + std::to_string(segment.index + 1) + ".csv");
        clarke::write_segment_csv(segment, config.geometry.joint_count(), path.string());
    }
    clarke::write_manifest(log, (dir / "manifest.json").string());
    clarke::write_backbone_csv(log, options.output.backbone_samples,
                               options.output.backbone_stride,
                               (dir / "backbone.csv").string());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Clarke-coordinate toolkit for displacement-actuated continuum robots"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path;
    app.add_option("--config", config_path, "JSON config file (built-in defaults when omitted)");

    TransformOptions transform_options;
    auto* transform = app.add_subcommand(
        "transform", "Convert between joint displacements and Clarke coordinates");
    auto* joints_option =
        transform->add_option("--joints", transform_options.joints,
                              "comma-separated joint displacements");
    auto* coords_option =
        transform->add_option("--clarke", transform_options.coords, "rho_re,rho_im");
    joints_option->excludes(coords_option);
    transform->add_option("--to-geometry", transform_options.to_geometry,
                          "JSON geometry of the target robot");
    transform->add_flag("--mm", transform_options.millimeters,
                        "interpret inputs and print outputs in millimeters");

    SampleOptions sample_options;
    auto* sample = app.add_subcommand("sample", "Draw feasible Clarke coordinates");
    sample->add_option("--count", sample_options.count, "number of samples")->required();
    sample->add_option("--seed", sample_options.seed, "RNG seed")->required();
    sample->add_option("--output", sample_options.output, "CSV path (stdout when omitted)");

    PlanOptions plan_options;
    auto* plan = app.add_subcommand("plan", "Plan a point-to-point manifold trajectory");
    plan->add_option("--start", plan_options.start, "start rho_re,rho_im")->required();
    plan->add_option("--goal", plan_options.goal, "goal rho_re,rho_im")->required();
    plan->add_option("--dt", plan_options.dt, "output sample period in seconds")->required();
    plan->add_flag("--mm", plan_options.millimeters, "interpret --start/--goal in millimeters");
    plan->add_option("--output", plan_options.output, "CSV path (stdout when omitted)");

    RunOptions run_options;
    auto* run = app.add_subcommand("run", "Run a closed-loop multi-segment episode");
    run->add_option("--seed", run_options.seed, "master RNG seed")->required();
    run->add_option("--goals", run_options.goals_file,
                    "CSV with start_re,start_im,goal_re,goal_im per segment");
    run->add_option("--external", run_options.external_file,
                    "CSV stream of external joint references, one row per tick");
    run->add_option("--external-geometry", run_options.external_geometry,
                    "JSON geometry of the external reference source");
    auto* out_dir_option =
        run->add_option("--out-dir", run_options.output.dir, "output directory (default .)");
    auto* stride_option = run->add_option("--backbone-stride", run_options.output.backbone_stride,
                                          "emit backbone samples every N ticks");
    auto* samples_option = run->add_option("--backbone-samples",
                                           run_options.output.backbone_samples,
                                           "backbone samples per segment");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& help) {
        return app.exit(help);
    } catch (const CLI::ParseError& error) {
        app.exit(error);
        return kExitValidation;
    }

    try {
        clarke::FrameworkConfig config = clarke::default_config();
        clarke::OutputOptions config_output;
        if (!config_path.empty()) {
            std::ifstream in(config_path, std::ios::binary);
            if (!in) throw clarke::ConfigIoError("cannot read config file: " + config_path);
            nlohmann::json document;
            try {
                document = nlohmann::json::parse(in);
            } catch (const nlohmann::json::parse_error& error) {
                throw clarke::ConfigError("",
                                          std::string("config is not valid JSON: ") + error.what());
            }
            config = clarke::parse_config(document);
            config_output = clarke::parse_output_options(document);
        }
        // command-line flags override the config document
        if (out_dir_option->count() == 0) run_options.output.dir = config_output.dir;
        if (stride_option->count() == 0)
            run_options.output.backbone_stride = config_output.backbone_stride;
        if (samples_option->count() == 0)
            run_options.output.backbone_samples = config_output.backbone_samples;

        if (transform->parsed()) {
            if (transform_options.joints.empty() == transform_options.coords.empty())
                throw clarke::ConfigError("transform",
                                          "exactly one of --joints / --clarke is required");
            return cmd_transform(config, transform_options);
        }
        if (sample->parsed()) return cmd_sample(config, sample_options);
        if (plan->parsed()) return cmd_plan(config, plan_options);
        if (run->parsed()) return cmd_run(config, run_options);
        return kExitValidation;
    } catch (const clarke::ConfigIoError& error) {
        std::cerr << "error: " << error.what() << "\n";
        return kExitIo;
    } catch (const clarke::ConfigError& error) {
        std::cerr << "error: " << error.what() << "\n";
        return kExitValidation;
    } catch (const std::invalid_argument& error) {
        std::cerr << "error: " << error.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return kExitIo;
    }
}
