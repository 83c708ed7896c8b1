#include "tridiff/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace tridiff {

namespace {

using nlohmann::json;

constexpr double kDegToRad = 3.14159265358979323846264338328 / 180.0;

const json& require_field(const json& obj, const char* key,
                          const std::string& path) {
    if (!obj.is_object()) {
        throw ValidationError(path + " must be an object");
    }
    const auto it = obj.find(key);
    if (it == obj.end()) {
        throw ValidationError(path + "." + key + " is required");
    }
    return *it;
}

double require_number(const json& obj, const char* key,
                      const std::string& path) {
    const json& value = require_field(obj, key, path);
    if (!value.is_number()) {
        throw ValidationError(path + "." + key + " must be a number");
    }
    return value.get<double>();
}

double optional_number(const json& obj, const char* key, double fallback) {
    if (!obj.is_object() || !obj.contains(key)) {
        return fallback;
    }
    const json& value = obj.at(key);
    if (!value.is_number()) {
        throw ValidationError(std::string(key) + " must be a number");
    }
    return value.get<double>();
}

// Re-throws module validation errors with the scenario field path prepended.
template <typename Fn>
void validated(const std::string& path, Fn&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

Scenario parse_scenario(const json& root, bool degrees) {
    Scenario scenario;
    const double angle_scale = degrees ? kDegToRad : 1.0;

    const json& robot = require_field(root, "robot", "scenario");
    scenario.robot.diff.g1 = require_number(robot, "g1", "robot");
    scenario.robot.diff.g2 = require_number(robot, "g2", "robot");
    scenario.robot.track_wheel_radius =
        require_number(robot, "track_wheel_radius", "robot");

    const json& clamp = require_field(root, "clamp", "scenario");
    scenario.robot.clamp.stiffness = require_number(clamp, "stiffness", "clamp");
    scenario.robot.clamp.springs_per_module = static_cast<int>(
        optional_number(clamp, "springs_per_module", 4.0));
    scenario.robot.clamp.preload = require_number(clamp, "preload", "clamp");
    scenario.robot.clamp.travel_min = require_number(clamp, "travel_min", "clamp");
    scenario.robot.clamp.travel_max = require_number(clamp, "travel_max", "clamp");
    scenario.robot.clamp.friction = require_number(clamp, "friction", "clamp");
    scenario.robot.clamp.nominal_radius =
        require_number(clamp, "nominal_radius", "clamp");
    if (clamp.contains("required_traction")) {
        scenario.required_traction_n =
            require_number(clamp, "required_traction", "clamp");
    }
    validated("robot", [&] { scenario.robot.validate(); });

    const json& pipe = require_field(root, "pipe", "scenario");
    scenario.pipe.spec.inner_radius = require_number(pipe, "inner_radius", "pipe");
    const json& segments = require_field(pipe, "segments", "pipe");
    if (!segments.is_array() || segments.empty()) {
        throw ValidationError("pipe.segments must be a non-empty array");
    }
    for (std::size_t i = 0; i < segments.size(); ++i) {
        const std::string path = "pipe.segments[" + std::to_string(i) + "]";
        const json& seg = segments[i];
        const json& type = require_field(seg, "type", path);
        if (!type.is_string()) {
            throw ValidationError(path + ".type must be a string");
        }
        const std::string kind = type.get<std::string>();
        if (kind == "straight") {
            scenario.pipe.segments.emplace_back(
                Straight{require_number(seg, "length", path)});
        } else if (kind == "bend") {
            scenario.pipe.segments.emplace_back(
                Bend{require_number(seg, "bend_radius", path),
                     require_number(seg, "angle", path) * angle_scale});
        } else {
            throw ValidationError(path + ".type must be \"straight\" or \"bend\"");
        }
        const std::size_t last = scenario.pipe.segments.size() - 1;
        validated(path, [&] {
            validate_segment(scenario.pipe.segments[last], scenario.pipe.spec);
        });
    }
    validated("pipe", [&] { scenario.pipe.validate(); });

    const json& drive = require_field(root, "drive", "scenario");
    scenario.omega_in = require_number(drive, "omega_in", "drive");
    if (!(scenario.omega_in > 0.0)) {
        throw ValidationError("drive.omega_in must be > 0");
    }
    if (drive.contains("mode")) {
        const json& mode = drive.at("mode");
        if (!mode.is_string()) {
            throw ValidationError("drive.mode must be a string");
        }
        const std::string text = mode.get<std::string>();
        if (text == "differential") {
            scenario.drive = DriveMode::kDifferential;
        } else if (text == "fixed") {
            scenario.drive = DriveMode::kFixedEqualSpeed;
        } else {
            throw ValidationError(
                "drive.mode must be \"differential\" or \"fixed\", got \"" +
                text + "\"");
        }
    }

    const json& plans = require_field(root, "plans", "scenario");
    if (!plans.is_array() || plans.empty()) {
        throw ValidationError("plans must be a non-empty array");
    }
    const int bends = bend_count(scenario.pipe);
    std::set<std::string> seen_ids;
    for (std::size_t p = 0; p < plans.size(); ++p) {
        const std::string path = "plans[" + std::to_string(p) + "]";
        const json& entry = plans[p];
        NamedPlan named;
        named.id = "plan" + std::to_string(p + 1);
        if (entry.is_object() && entry.contains("id")) {
            if (!entry.at("id").is_string()) {
                throw ValidationError(path + ".id must be a string");
            }
            named.id = entry.at("id").get<std::string>();
        }
        if (!seen_ids.insert(named.id).second) {
            throw ValidationError(path + ".id \"" + named.id + "\" is duplicated");
        }
        named.plan.omega_in = scenario.omega_in;
        const json& orientations = require_field(entry, "orientations", path);
        if (!orientations.is_array()) {
            throw ValidationError(path + ".orientations must be an array");
        }
        for (const json& value : orientations) {
            if (!value.is_number()) {
                throw ValidationError(path + ".orientations must hold numbers");
            }
            named.plan.orientations.emplace_back(
                Orientation(value.get<double>() * angle_scale));
        }
        if (static_cast<int>(named.plan.orientations.size()) != bends) {
            throw ValidationError(
                path + ".orientations supplies " +
                std::to_string(named.plan.orientations.size()) +
                " roll angle(s) for " + std::to_string(bends) +
                " bend segment(s) in the pipe");
        }
        scenario.plans.push_back(std::move(named));
    }

    if (root.contains("output")) {
        const json& output = root.at("output");
        if (output.contains("plots")) {
            if (!output.at("plots").is_boolean()) {
                throw ValidationError("output.plots must be a boolean");
            }
            scenario.plots = output.at("plots").get<bool>();
        }
    }

    // Clamp fit and traction preconditions, checked eagerly.
    validated("clamp vs pipe.inner_radius", [&] {
        const auto state =
            compression_for_pipe(scenario.robot.clamp, scenario.pipe.spec.inner_radius);
        if (scenario.required_traction_n) {
            traction_check(state, scenario.robot.clamp, *scenario.required_traction_n);
        }
    });
    return scenario;
}

}  // namespace

Scenario parse_scenario_text(const std::string& text, bool degrees) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("scenario parse error: ") + e.what());
    }
    return parse_scenario(root, degrees);
}

Scenario load_scenario(const std::string& path, bool degrees) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open scenario file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_scenario_text(buffer.str(), degrees);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

RunArtifacts run(const Scenario& scenario) {
    RunArtifacts artifacts;
    artifacts.clamp =
        compression_for_pipe(scenario.robot.clamp, scenario.pipe.spec.inner_radius);
    if (scenario.required_traction_n) {
        artifacts.traction = traction_check(artifacts.clamp, scenario.robot.clamp,
                                            *scenario.required_traction_n);
    }
    for (const auto& named : scenario.plans) {
        PlanResult result;
        result.id = named.id;
        for (const auto& phi : named.plan.orientations) {
            result.orientations.push_back(phi.phi());
        }
        result.report = simulate_traversal(scenario.pipe, scenario.robot,
                                           named.plan, scenario.drive);
        for (const auto& seg : result.report.segments) {
            for (std::size_t i = 0; i < 3; ++i) {
                result.slip_totals[i] += seg.track_slip[i];
            }
        }
        result.max_slip = *std::max_element(result.slip_totals.begin(),
                                            result.slip_totals.end());
        artifacts.results.push_back(std::move(result));
    }
    return artifacts;
}

}  // namespace tridiff
