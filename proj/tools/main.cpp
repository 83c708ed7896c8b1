// tridiff: pipe traversal simulator for a three-output differential
// tracked robot.
//
// Subcommands:
//   simulate <scenario> --out <dir> [--plots] [--drive MODE] [--degrees]
//   validate <scenario> [--degrees]
//   oracle-check [--cases N] [--seed S] [--dump-system]
//
// Exit codes: 0 ok, 2 parse error, 3 validation error, 4 simulation error,
// 5 I/O error.
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "tridiff/gear_network.hpp"
#include "tridiff/report.hpp"
#include "tridiff/scenario.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitSimulation = 4;
constexpr int kExitIo = 5;

int run_simulate(const std::string& scenario_path, const std::string& out_dir,
                 bool plots, const std::string& drive, bool degrees) {
    auto scenario = tridiff::load_scenario(scenario_path, degrees);
    if (plots) {
        scenario.plots = true;
    }
    if (drive == "differential") {
        scenario.drive = tridiff::DriveMode::kDifferential;
    } else if (drive == "fixed") {
        scenario.drive = tridiff::DriveMode::kFixedEqualSpeed;
    } else if (!drive.empty()) {
        throw tridiff::ValidationError(
            "--drive must be \"differential\" or \"fixed\", got \"" + drive + "\"");
    }

    const auto artifacts = tridiff::run(scenario);
    const auto emitted = tridiff::emit_reports(scenario, artifacts, out_dir);
    for (const auto& path : emitted.paths) {
        std::cout << "wrote " << path << "\n";
    }
    for (const auto& result : artifacts.results) {
        std::cout << "plan " << result.id << ": total time "
                  << tridiff::format_double(result.report.total_time_s)
                  << " s, robot distance "
                  << tridiff::format_double(result.report.robot_distance)
                  << " m, max slip " << tridiff::format_double(result.max_slip)
                  << " m\n";
    }
    return 0;
}

int run_validate(const std::string& scenario_path, bool degrees) {
    const auto scenario = tridiff::load_scenario(scenario_path, degrees);
    std::cout << scenario_path << ": valid (" << scenario.pipe.segments.size()
              << " segment(s), " << scenario.plans.size() << " plan(s))\n";
    return 0;
}

int run_oracle_check(int cases, std::uint64_t seed, bool dump_system) {
    if (dump_system) {
        const tridiff::DifferentialSpec spec{1.5, 2.0};
        const auto network = tridiff::build_canonical_network(spec);
        const tridiff::ConstraintSet constraints{
            tridiff::SpeedFixed{8.0}, tridiff::Free{}, tridiff::Free{}};
        std::cout << tridiff::format_system(
            tridiff::assemble_speed_system(network, 10.0, constraints));
    }
    const auto stats = tridiff::run_equivalence_suite(cases, seed);
    std::cout << "oracle-check: " << stats.cases
              << " randomized determinate cases, max |closed-form - network| = "
              << tridiff::format_double(stats.max_deviation)
              << " rad/s, max speed-sum residual = "
              << tridiff::format_double(stats.max_sum_residual) << "\n";
    if (stats.max_deviation >= 1e-9) {
        std::cerr << "oracle-check FAILED: deviation exceeds 1e-9 rad/s\n";
        return kExitSimulation;
    }
    std::cout << "oracle-check OK\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"three-output differential pipe traversal simulator"};
    app.require_subcommand(1);

    std::string scenario_path;
    std::string out_dir = "out";
    std::string drive;
    bool plots = false;
    bool degrees = false;

    auto* simulate = app.add_subcommand("simulate", "run a scenario file");
    simulate->add_option("scenario", scenario_path, "scenario JSON file")
        ->required();
    simulate->add_option("--out", out_dir, "output directory");
    simulate->add_flag("--plots", plots, "emit SVG speed profiles");
    simulate->add_option("--drive", drive,
                         "override drive mode: differential|fixed");
    simulate->add_flag("--degrees", degrees,
                       "scenario angles are degrees, convert at ingestion");

    auto* validate = app.add_subcommand("validate", "validate a scenario file");
    validate->add_option("scenario", scenario_path, "scenario JSON file")
        ->required();
    validate->add_flag("--degrees", degrees,
                       "scenario angles are degrees, convert at ingestion");

    int cases = 1000;
    std::uint64_t seed = 20260810;
    bool dump_system = false;
    auto* oracle = app.add_subcommand(
        "oracle-check", "closed form vs gear-network equivalence sweep");
    oracle->add_option("--cases", cases, "number of randomized cases")
        ->check(CLI::PositiveNumber);
    oracle->add_option("--seed", seed, "random seed");
    oracle->add_flag("--dump-system", dump_system,
                     "print one assembled speed system before the sweep");

    CLI11_PARSE(app, argc, argv);

    try {
        if (simulate->parsed()) {
            return run_simulate(scenario_path, out_dir, plots, drive, degrees);
        }
        if (validate->parsed()) {
            return run_validate(scenario_path, degrees);
        }
        return run_oracle_check(cases, seed, dump_system);
    } catch (const tridiff::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const tridiff::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const tridiff::GeometryError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const tridiff::FitError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const tridiff::InfeasibleError& e) {
        std::cerr << "simulation error: " << e.what() << "\n";
        return kExitSimulation;
    } catch (const tridiff::IoError& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
