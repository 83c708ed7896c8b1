#include "tridiff/traversal.hpp"

#include <cmath>
#include <string>

namespace tridiff {

namespace {

void check_plan(const PipeNetwork& network, const TraversalPlan& plan) {
    if (!std::isfinite(plan.omega_in) || plan.omega_in <= 0.0) {
        throw ValidationError("TraversalPlan.omega_in must be finite and > 0");
    }
    const int bends = bend_count(network);
    if (static_cast<int>(plan.orientations.size()) != bends) {
        throw ValidationError(
            "TraversalPlan supplies " + std::to_string(plan.orientations.size()) +
            " orientations for " + std::to_string(bends) + " bend segment(s)");
    }
}

}  // namespace

void RobotConfig::validate() const {
    diff.validate();
    if (!std::isfinite(track_wheel_radius) || track_wheel_radius <= 0.0) {
        throw ValidationError("RobotConfig.track_wheel_radius must be finite and > 0");
    }
    clamp.validate();
}

double robot_speed(const RobotConfig& robot, double omega_in) {
    robot.validate();
    return effective_ratio(robot.diff) * omega_in * robot.track_wheel_radius;
}

std::array<double, 3> allocate_bend_speeds(double v_avg,
                                           const std::array<double, 3>& radii,
                                           double bend_radius) {
    if (!std::isfinite(v_avg) || v_avg <= 0.0) {
        throw ValidationError("v_avg must be finite and > 0");
    }
    if (!std::isfinite(bend_radius) || bend_radius <= 0.0) {
        throw GeometryError("bend radius must be finite and > 0");
    }
    return {v_avg * radii[0] / bend_radius, v_avg * radii[1] / bend_radius,
            v_avg * radii[2] / bend_radius};
}

TraversalReport simulate_traversal(const PipeNetwork& network,
                                   const RobotConfig& robot,
                                   const TraversalPlan& plan, DriveMode mode) {
    network.validate();
    robot.validate();
    check_plan(network, plan);

    const double v_avg = robot_speed(robot, plan.omega_in);
    TraversalReport report;
    report.segments.reserve(network.segments.size());

    std::size_t bend_index = 0;
    for (const auto& segment : network.segments) {
        SegmentReport seg;
        seg.robot_speed = v_avg;
        seg.time_s = centerline_length(segment) / v_avg;

        if (const auto* bend = std::get_if<Bend>(&segment)) {
            const Orientation phi = plan.orientations[bend_index++];
            const auto radii =
                contact_radii(bend->bend_radius, network.spec.inner_radius,
                              phi.phi());
            const auto speeds = (mode == DriveMode::kDifferential)
                                    ? allocate_bend_speeds(v_avg, radii,
                                                           bend->bend_radius)
                                    : std::array<double, 3>{v_avg, v_avg, v_avg};
            for (int i = 0; i < 3; ++i) {
                const auto t = static_cast<std::size_t>(i);
                seg.track_speeds[t] = speeds[t];
                seg.track_distances[t] = speeds[t] * seg.time_s;
                // Required arc length is R_i * beta; the differential drive
                // feeds exactly that, a fixed drive feeds R_b * beta.
                const double required = radii[t] * bend->angle;
                const double driven = (mode == DriveMode::kDifferential)
                                          ? required
                                          : bend->bend_radius * bend->angle;
                seg.track_slip[t] = std::abs(required - driven);
            }
        } else {
            for (int i = 0; i < 3; ++i) {
                const auto t = static_cast<std::size_t>(i);
                seg.track_speeds[t] = v_avg;
                seg.track_distances[t] = v_avg * seg.time_s;
                seg.track_slip[t] = 0.0;
            }
        }

        for (int i = 0; i < 3; ++i) {
            report.track_totals[static_cast<std::size_t>(i)] +=
                seg.track_distances[static_cast<std::size_t>(i)];
        }
        report.robot_distance += v_avg * seg.time_s;
        report.total_time_s += seg.time_s;
        report.segments.push_back(seg);
    }
    return report;
}

std::array<double, 3> slip_drag_metric(const PipeNetwork& network,
                                       const RobotConfig& robot,
                                       const TraversalPlan& plan,
                                       DriveMode mode) {
    const auto report = simulate_traversal(network, robot, plan, mode);
    std::array<double, 3> totals{};
    for (const auto& seg : report.segments) {
        for (int i = 0; i < 3; ++i) {
            totals[static_cast<std::size_t>(i)] +=
                seg.track_slip[static_cast<std::size_t>(i)];
        }
    }
    return totals;
}

}  // namespace tridiff
