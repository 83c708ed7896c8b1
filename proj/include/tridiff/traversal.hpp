// Traversal simulation: allocates per-track speeds through each pipe
// segment, integrates distances and times in closed form, and quantifies
// the slip a fixed-equal-speed drive would incur against the differential
// drive's zero-slip allocation.
#pragma once

#include <array>
#include <vector>

#include "tridiff/clamp.hpp"
#include "tridiff/differential.hpp"
#include "tridiff/pipe_geometry.hpp"

namespace tridiff {

enum class DriveMode {
    kDifferential,     // track speeds follow the contact radii
    kFixedEqualSpeed,  // all tracks driven at the robot speed everywhere
};

struct RobotConfig {
    DifferentialSpec diff;
    double track_wheel_radius = 0.0;  // m, v = omega * track_wheel_radius
    ClampSpec clamp;

    void validate() const;
};

/// Constant input speed plus one roll angle per bend, in bend order.
struct TraversalPlan {
    double omega_in = 0.0;  // rad/s, > 0
    std::vector<Orientation> orientations;
};

struct SegmentReport {
    std::array<double, 3> track_speeds{};     // m/s
    std::array<double, 3> track_distances{};  // m, driven
    std::array<double, 3> track_slip{};       // m, |required - driven|
    double robot_speed = 0.0;                 // m/s
    double time_s = 0.0;
};

struct TraversalReport {
    std::vector<SegmentReport> segments;
    std::array<double, 3> track_totals{};  // m
    double robot_distance = 0.0;           // m
    double total_time_s = 0.0;
};

/// Robot centerline speed G * omega_in * track_wheel_radius; constant over
/// the whole network.
double robot_speed(const RobotConfig& robot, double omega_in);

/// In-bend speed allocation v_i = v_avg * R_i / R_b. The radii-sum identity
/// sum(R_i) = 3 R_b keeps mean(v_i) = v_avg.
std::array<double, 3> allocate_bend_speeds(double v_avg,
                                           const std::array<double, 3>& radii,
                                           double bend_radius);

/// Simulates the network segment by segment. Speeds are piecewise constant,
/// so distances and times are closed-form per segment.
TraversalReport simulate_traversal(const PipeNetwork& network,
                                   const RobotConfig& robot,
                                   const TraversalPlan& plan,
                                   DriveMode mode = DriveMode::kDifferential);

/// Per-track slip summed over all segments: |R_i*beta - s_driven,i| per
/// bend, where the differential drive feeds exactly R_i*beta (zero slip)
/// and a fixed-equal-speed drive feeds R_b*beta.
std::array<double, 3> slip_drag_metric(const PipeNetwork& network,
                                       const RobotConfig& robot,
                                       const TraversalPlan& plan,
                                       DriveMode mode);

}  // namespace tridiff
