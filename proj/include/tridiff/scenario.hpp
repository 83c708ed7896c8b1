// Scenario ingestion and batch execution: the user-facing surface. A
// scenario is one JSON file describing the robot, clamp, pipe network,
// drive, and one or more traversal plans. All lengths are meters, angles
// radians, speeds rad/s (see README for the schema).
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tridiff/traversal.hpp"

namespace tridiff {

struct NamedPlan {
    std::string id;
    TraversalPlan plan;
};

struct Scenario {
    RobotConfig robot;
    PipeNetwork pipe;
    DriveMode drive = DriveMode::kDifferential;
    double omega_in = 0.0;  // rad/s, shared by all plans
    std::vector<NamedPlan> plans;
    bool plots = false;
    std::optional<double> required_traction_n;
};

/// Parses and fully validates a scenario file. Angles are radians unless
/// `degrees` is set, in which case bend angles and plan orientations are
/// converted at ingestion. Throws ParseError for malformed JSON and
/// ValidationError naming the offending field for bad values.
Scenario load_scenario(const std::string& path, bool degrees = false);

/// Same as load_scenario but from already-parsed text (testing hook).
Scenario parse_scenario_text(const std::string& text, bool degrees = false);

struct PlanResult {
    std::string id;
    std::vector<double> orientations;  // normalized phi per bend, rad
    TraversalReport report;
    std::array<double, 3> slip_totals{};  // m
    double max_slip = 0.0;                // m
};

struct RunArtifacts {
    std::vector<PlanResult> results;
    ClampState clamp;
    std::optional<TractionResult> traction;
};

/// Executes every plan. Deterministic: identical scenarios produce
/// identical artifacts.
RunArtifacts run(const Scenario& scenario);

}  // namespace tridiff
