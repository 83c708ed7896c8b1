#include "tridiff/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace tridiff {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

void write_file(const fs::path& path, const std::string& content,
                EmittedFiles& emitted) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open for writing: " + path.string());
    }
    out << content;
    if (!out) {
        throw IoError("write failed: " + path.string());
    }
    emitted.paths.push_back(path.string());
}

std::string join_orientations(const std::vector<double>& phis) {
    std::string out;
    for (std::size_t i = 0; i < phis.size(); ++i) {
        if (i > 0) {
            out += ';';
        }
        out += format_double(phis[i]);
    }
    return out;
}

std::string summary_csv(const RunArtifacts& artifacts) {
    std::ostringstream out;
    out << "plan,orientation_rad,total_time_s,robot_distance_m,"
           "track1_distance_m,track2_distance_m,track3_distance_m,max_slip_m\n";
    for (const auto& result : artifacts.results) {
        out << result.id << ',' << join_orientations(result.orientations) << ','
            << format_double(result.report.total_time_s) << ','
            << format_double(result.report.robot_distance);
        for (const double d : result.report.track_totals) {
            out << ',' << format_double(d);
        }
        out << ',' << format_double(result.max_slip) << '\n';
    }
    return out.str();
}

std::string segments_csv(const Scenario& scenario, const RunArtifacts& artifacts) {
    std::ostringstream out;
    out << "plan,segment,kind,time_s,robot_speed_mps,"
           "track1_speed_mps,track2_speed_mps,track3_speed_mps,"
           "track1_distance_m,track2_distance_m,track3_distance_m,"
           "track1_slip_m,track2_slip_m,track3_slip_m\n";
    for (const auto& result : artifacts.results) {
        for (std::size_t s = 0; s < result.report.segments.size(); ++s) {
            const auto& seg = result.report.segments[s];
            out << result.id << ',' << s << ','
                << (is_bend(scenario.pipe.segments[s]) ? "bend" : "straight") << ','
                << format_double(seg.time_s) << ','
                << format_double(seg.robot_speed);
            for (const double v : seg.track_speeds) {
                out << ',' << format_double(v);
            }
            for (const double d : seg.track_distances) {
                out << ',' << format_double(d);
            }
            for (const double slip : seg.track_slip) {
                out << ',' << format_double(slip);
            }
            out << '\n';
        }
    }
    return out.str();
}

json report_json(const Scenario& scenario, const RunArtifacts& artifacts) {
    json root;
    root["drive_mode"] = scenario.drive == DriveMode::kDifferential
                             ? "differential"
                             : "fixed";
    root["omega_in_rad_s"] = scenario.omega_in;
    root["clamp"] = {
        {"compression_m", artifacts.clamp.compression},
        {"normal_force_n", artifacts.clamp.normal_force},
    };
    if (artifacts.traction) {
        root["traction"] = {
            {"pass", artifacts.traction->pass},
            {"capacity_n", artifacts.traction->capacity_n},
            {"margin_n", artifacts.traction->margin_n},
        };
    }
    root["plans"] = json::array();
    for (const auto& result : artifacts.results) {
        json plan;
        plan["id"] = result.id;
        plan["orientations_rad"] = result.orientations;
        plan["total_time_s"] = result.report.total_time_s;
        plan["robot_distance_m"] = result.report.robot_distance;
        plan["track_distances_m"] = result.report.track_totals;
        plan["slip_m"] = result.slip_totals;
        plan["max_slip_m"] = result.max_slip;
        plan["segments"] = json::array();
        for (std::size_t s = 0; s < result.report.segments.size(); ++s) {
            const auto& seg = result.report.segments[s];
            plan["segments"].push_back({
                {"index", s},
                {"kind", is_bend(scenario.pipe.segments[s]) ? "bend" : "straight"},
                {"time_s", seg.time_s},
                {"robot_speed_mps", seg.robot_speed},
                {"track_speeds_mps", seg.track_speeds},
                {"track_distances_m", seg.track_distances},
                {"track_slip_m", seg.track_slip},
            });
        }
        root["plans"].push_back(std::move(plan));
    }
    return root;
}

// Step plot of track and robot speeds against robot arc position.
std::string speed_profile_svg(const PlanResult& result) {
    constexpr double kWidth = 800.0;
    constexpr double kHeight = 400.0;
    constexpr double kMargin = 60.0;
    const char* kTrackColor[3] = {"#1b9e77", "#d95f02", "#7570b3"};

    double arc_total = 0.0;
    double v_min = 0.0;
    double v_max = 0.0;
    for (const auto& seg : result.report.segments) {
        arc_total += seg.robot_speed * seg.time_s;
        for (const double v : seg.track_speeds) {
            v_max = std::max(v_max, v);
        }
    }
    if (arc_total <= 0.0 || v_max <= 0.0) {
        arc_total = 1.0;
        v_max = 1.0;
    }
    v_max *= 1.1;

    const auto x_of = [&](double arc) {
        return kMargin + (kWidth - 2 * kMargin) * arc / arc_total;
    };
    const auto y_of = [&](double v) {
        return kHeight - kMargin -
               (kHeight - 2 * kMargin) * (v - v_min) / (v_max - v_min);
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
        << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " "
        << kHeight << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"16\">track speeds, plan "
        << result.id << "</text>\n";

    // axes
    svg << "<line x1=\"" << kMargin << "\" y1=\"" << kHeight - kMargin
        << "\" x2=\"" << kWidth - kMargin << "\" y2=\"" << kHeight - kMargin
        << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << kMargin << "\" y1=\"" << kMargin << "\" x2=\""
        << kMargin << "\" y2=\"" << kHeight - kMargin
        << "\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 18
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        << "font-size=\"12\">arc position (m), total "
        << format_double(arc_total) << "</text>\n";
    svg << "<text x=\"18\" y=\"" << kHeight / 2
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        << "font-size=\"12\" transform=\"rotate(-90 18 " << kHeight / 2
        << ")\">speed (m/s), max " << format_double(v_max / 1.1)
        << "</text>\n";

    for (int track = 0; track < 3; ++track) {
        svg << "<polyline fill=\"none\" stroke=\"" << kTrackColor[track]
            << "\" stroke-width=\"2\" points=\"";
        double arc = 0.0;
        for (const auto& seg : result.report.segments) {
            const double v = seg.track_speeds[static_cast<std::size_t>(track)];
            svg << x_of(arc) << ',' << y_of(v) << ' ';
            arc += seg.robot_speed * seg.time_s;
            svg << x_of(arc) << ',' << y_of(v) << ' ';
        }
        svg << "\"/>\n";
        svg << "<text x=\"" << kWidth - kMargin + 6 << "\" y=\""
            << 40 + 16 * track << "\" font-family=\"sans-serif\" "
            << "font-size=\"12\" fill=\"" << kTrackColor[track] << "\">t"
            << track + 1 << "</text>\n";
    }

    // robot speed, dashed
    svg << "<polyline fill=\"none\" stroke=\"#333333\" stroke-width=\"1.5\" "
        << "stroke-dasharray=\"6 4\" points=\"";
    double arc = 0.0;
    for (const auto& seg : result.report.segments) {
        svg << x_of(arc) << ',' << y_of(seg.robot_speed) << ' ';
        arc += seg.robot_speed * seg.time_s;
        svg << x_of(arc) << ',' << y_of(seg.robot_speed) << ' ';
    }
    svg << "\"/>\n</svg>\n";
    return svg.str();
}

}  // namespace

std::string format_double(double value) {
    char buf[40];
    // Shortest representation that round-trips a double.
    for (int precision = 1; precision <= 17; ++precision) {
        std::snprintf(buf, sizeof(buf), "%.*g", precision, value);
        if (std::strtod(buf, nullptr) == value) {
            break;
        }
    }
    return buf;
}

EmittedFiles emit_reports(const Scenario& scenario, const RunArtifacts& artifacts,
                          const std::string& out_dir) {
    EmittedFiles emitted;
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) {
        throw IoError("cannot create output directory " + out_dir + ": " +
                      ec.message());
    }
    const fs::path dir(out_dir);
    write_file(dir / "summary.csv", summary_csv(artifacts), emitted);
    write_file(dir / "segments.csv", segments_csv(scenario, artifacts), emitted);
    write_file(dir / "report.json", report_json(scenario, artifacts).dump(2) + "\n",
               emitted);
    if (scenario.plots) {
        for (const auto& result : artifacts.results) {
            write_file(dir / ("plot_" + result.id + ".svg"),
                       speed_profile_svg(result), emitted);
        }
    }
    return emitted;
}

}  // namespace tridiff
