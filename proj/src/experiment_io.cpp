#include "clarke/experiment_io.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "clarke/config.hpp"
#include "clarke/csv.hpp"
#include "clarke/geometry.hpp"

namespace clarke {

namespace {

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    return out;
}

}  // namespace

void write_segment_csv(const SegmentLog& log, int joint_count, std::ostream& out) {
    out << "tick,t,des_re,des_im,des_re_dot,des_im_dot,des_re_ddot,des_im_ddot,"
           "meas_re,meas_im,cmd_re,cmd_im,ol_meas_re,ol_meas_im";
    for (int j = 1; j <= joint_count; ++j) out << ",cmd_rho_" << j;
    for (int j = 1; j <= joint_count; ++j) out << ",true_rho_" << j;
    for (int j = 1; j <= joint_count; ++j) out << ",meas_rho_" << j;
    out << "\n";

    for (std::size_t k = 0; k < log.t.size(); ++k) {
        const TrajectorySample& d = log.desired[k];
        out << k << ',' << format_double(log.t[k]) << ',' << format_double(d.position.re) << ','
            << format_double(d.position.im) << ',' << format_double(d.velocity.re) << ','
            << format_double(d.velocity.im) << ',' << format_double(d.acceleration.re) << ','
            << format_double(d.acceleration.im) << ',' << format_double(log.measured[k].re) << ','
            << format_double(log.measured[k].im) << ',' << format_double(log.command[k].re) << ','
            << format_double(log.command[k].im) << ','
            << format_double(log.open_loop_measured[k].re) << ','
            << format_double(log.open_loop_measured[k].im);
        for (std::size_t j = 0; j < log.commanded_joints[k].size(); ++j)
            out << ',' << format_double(log.commanded_joints[k][j]);
        for (std::size_t j = 0; j < log.true_joints[k].size(); ++j)
            out << ',' << format_double(log.true_joints[k][j]);
        for (std::size_t j = 0; j < log.measured_joints[k].size(); ++j)
            out << ',' << format_double(log.measured_joints[k][j]);
        out << "\n";
    }
}

void write_segment_csv(const SegmentLog& log, int joint_count, const std::string& path) {
    auto out = open_output(path);
    write_segment_csv(log, joint_count, out);
}

void write_manifest(const ExperimentLog& log, const std::string& path) {
    nlohmann::json manifest;
    manifest["config"] = config_to_json(log.config);
    manifest["master_seed"] = log.master_seed;
    manifest["synchronized_duration"] = log.synchronized_duration;
    manifest["version"] = "0.1.0";

    nlohmann::json segments = nlohmann::json::array();
    for (const SegmentLog& segment : log.segments) {
        nlohmann::json s;
        s["index"] = segment.index;
        s["seed"] = segment.seed;
        s["start"] = {segment.start.re, segment.start.im};
        s["goal"] = {segment.goal.re, segment.goal.im};
        s["initial_duration"] = segment.initial_duration;
        s["final_duration"] = segment.final_duration;
        s["ticks"] = segment.t.size();
        segments.push_back(s);
    }
    manifest["segments"] = segments;

    auto out = open_output(path);
    out << manifest.dump(2) << "\n";
}

void write_backbone_csv(const ExperimentLog& log, int samples_per_segment, int tick_stride,
                        std::ostream& out) {
    if (samples_per_segment < 2)
        throw std::invalid_argument("write_backbone_csv: need at least 2 samples per segment");
    if (tick_stride < 1)
        throw std::invalid_argument("write_backbone_csv: tick stride must be >= 1");

    out << "t,x,y,z,r11,r12,r13,r21,r22,r23,r31,r32,r33\n";
    if (log.segments.empty()) return;

    const std::size_t ticks = log.segments.front().t.size();
    for (std::size_t k = 0; k < ticks; k += static_cast<std::size_t>(tick_stride)) {
        std::vector<std::vector<Pose>> per_segment;
        per_segment.reserve(log.segments.size());
        for (const SegmentLog& segment : log.segments) {
            const ClarkeCoordinates coords =
                joints_to_clarke(segment.true_joints[k], log.config.geometry);
            per_segment.push_back(
                cc_forward_kinematics(coords, log.config.geometry, samples_per_segment));
        }
        const double t = log.segments.front().t[k];
        for (const Pose& pose : chain_segments(per_segment)) {
            out << format_double(t) << ',' << format_double(pose.position.x) << ','
                << format_double(pose.position.y) << ',' << format_double(pose.position.z);
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c) out << ',' << format_double(pose.orientation.m[r][c]);
            out << "\n";
        }
    }
}

void write_backbone_csv(const ExperimentLog& log, int samples_per_segment, int tick_stride,
                        const std::string& path) {
    auto out = open_output(path);
    write_backbone_csv(log, samples_per_segment, tick_stride, out);
}

}  // namespace clarke
