#pragma once

#include <ostream>
#include <string>

#include "clarke/orchestrator.hpp"

namespace clarke {

/// Per-tick log of one segment. Columns: tick, t, desired Clarke
/// coordinates with rates, closed-loop measurement, command, open-loop
/// measurement, then cmd_rho_i / true_rho_i / meas_rho_i per joint.
void write_segment_csv(const SegmentLog& log, int joint_count, std::ostream& out);
void write_segment_csv(const SegmentLog& log, int joint_count, const std::string& path);

/// Episode manifest: config snapshot, seeds, and durations as JSON. The
/// manifest plus the seeds replay the episode bit-identically.
void write_manifest(const ExperimentLog& log, const std::string& path);

/**
 * Chained constant-curvature backbone samples of the whole robot at every
 * `tick_stride`-th tick, reconstructed from the true actuator states.
 * Columns: t, x, y, z, and the row-major tip orientation r11..r33.
 */
void write_backbone_csv(const ExperimentLog& log, int samples_per_segment, int tick_stride,
                        std::ostream& out);
void write_backbone_csv(const ExperimentLog& log, int samples_per_segment, int tick_stride,
                        const std::string& path);

}  // namespace clarke
