#include "tridiff/gear_network.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

namespace tridiff {

namespace {

// Shaft layout of the canonical network. The six shared side-gear shafts
// form a ring: input junction i owns sides (4+2i, 5+2i) and output junction
// j couples side 5+2j with side 4+2*((j+1)%3) of the next input junction.
constexpr ShaftId kInput = 0;
constexpr ShaftId kInCarrier0 = 1;
constexpr ShaftId kSide0 = 4;
constexpr ShaftId kOutCarrier0 = 10;
constexpr ShaftId kOutput0 = 13;
constexpr int kShaftCount = 16;
constexpr int kSideCount = 6;

struct ConstraintSummary {
    std::vector<int> fixed_indices;
    std::vector<double> fixed_speeds;
    std::vector<int> free_indices;
    std::array<double, 3> viscous_c{};
    int n_viscous = 0;
};

ConstraintSummary classify(const ConstraintSet& constraints) {
    ConstraintSummary summary;
    for (int i = 0; i < 3; ++i) {
        if (const auto* fixed = std::get_if<SpeedFixed>(&constraints[i])) {
            if (!std::isfinite(fixed->omega)) {
                throw ValidationError("SpeedFixed.omega must be finite");
            }
            summary.fixed_indices.push_back(i);
            summary.fixed_speeds.push_back(fixed->omega);
        } else if (const auto* viscous = std::get_if<ViscousLoad>(&constraints[i])) {
            if (!std::isfinite(viscous->c) || viscous->c <= 0.0) {
                throw ValidationError("ViscousLoad.c must be finite and > 0");
            }
            summary.viscous_c[i] = viscous->c;
            ++summary.n_viscous;
        } else {
            summary.free_indices.push_back(i);
        }
    }
    if (summary.n_viscous != 0 && summary.n_viscous != 3) {
        throw InfeasibleError(
            "indeterminate constraint combination: ViscousLoad mixed with "
            "SpeedFixed/Free outputs (supported cases: all Free, SpeedFixed "
            "plus Free, all ViscousLoad)");
    }
    return summary;
}

double network_ratio(const GearNetwork& network) {
    double g1 = 1.0;
    double g2 = 1.0;
    for (const auto& pair : network.gear_pairs) {
        if (pair.from == network.input) {
            g1 = pair.ratio;
        } else {
            g2 = pair.ratio;
        }
    }
    return g1 * g2;
}

}  // namespace

GearNetwork build_canonical_network(const DifferentialSpec& spec) {
    spec.validate();
    GearNetwork network;
    network.shaft_count = kShaftCount;
    network.input = kInput;
    network.shaft_names.assign(kShaftCount, "");
    network.shaft_names[kInput] = "input";

    for (int i = 0; i < 3; ++i) {
        network.shaft_names[kInCarrier0 + i] = "in_carrier" + std::to_string(i);
        network.shaft_names[kOutCarrier0 + i] = "out_carrier" + std::to_string(i);
        network.shaft_names[kOutput0 + i] = "output" + std::to_string(i);
        network.outputs[i] = kOutput0 + i;
    }
    for (int k = 0; k < kSideCount; ++k) {
        network.shaft_names[kSide0 + k] = "side" + std::to_string(k);
    }

    for (int i = 0; i < 3; ++i) {
        network.junctions.push_back(
            {kInCarrier0 + i, kSide0 + 2 * i, kSide0 + 2 * i + 1});
        network.gear_pairs.push_back({kInput, kInCarrier0 + i, spec.g1});
    }
    for (int j = 0; j < 3; ++j) {
        network.junctions.push_back(
            {kOutCarrier0 + j, kSide0 + 2 * j + 1, kSide0 + 2 * ((j + 1) % 3)});
        network.gear_pairs.push_back({kOutCarrier0 + j, kOutput0 + j, spec.g2});
    }
    return network;
}

SpeedSystem assemble_speed_system(const GearNetwork& network, double omega_in,
                                  const ConstraintSet& constraints) {
    if (!std::isfinite(omega_in)) {
        throw ValidationError("omega_in must be finite");
    }
    const auto summary = classify(constraints);
    const std::size_t n = static_cast<std::size_t>(network.shaft_count);

    SpeedSystem system{DenseMatrix(n, n), std::vector<double>(n, 0.0), {}, {}};
    system.col_labels = network.shaft_names;
    std::size_t row = 0;

    auto label = [&system](const std::string& text) {
        system.row_labels.push_back(text);
    };

    system.matrix(row, static_cast<std::size_t>(network.input)) = 1.0;
    system.rhs[row] = omega_in;
    label("input speed");
    ++row;

    for (const auto& pair : network.gear_pairs) {
        system.matrix(row, static_cast<std::size_t>(pair.to)) = 1.0;
        system.matrix(row, static_cast<std::size_t>(pair.from)) = -pair.ratio;
        label("gear " + network.shaft_names[pair.from] + "->" +
              network.shaft_names[pair.to]);
        ++row;
    }

    for (const auto& junction : network.junctions) {
        system.matrix(row, static_cast<std::size_t>(junction.side_a)) = 1.0;
        system.matrix(row, static_cast<std::size_t>(junction.side_b)) = 1.0;
        system.matrix(row, static_cast<std::size_t>(junction.carrier)) = -2.0;
        label("junction " + network.shaft_names[junction.carrier]);
        ++row;
    }

    // The interleaved side-gear ring carries one internal mode (alternating
    // speeds around the ring) that is invisible at every carrier and output.
    // Pin it to the symmetric zero-circulation representative.
    for (int k = 0; k < kSideCount; ++k) {
        system.matrix(row, static_cast<std::size_t>(kSide0 + k)) =
            (k % 2 == 0) ? 1.0 : -1.0;
    }
    label("ring circulation");
    ++row;

    if (summary.n_viscous == 3) {
        for (int i = 0; i < 2; ++i) {
            system.matrix(row, static_cast<std::size_t>(network.outputs[i])) =
                summary.viscous_c[i];
            system.matrix(row, static_cast<std::size_t>(network.outputs[i + 1])) =
                -summary.viscous_c[i + 1];
            label("equal load torque outputs " + std::to_string(i) + "," +
                  std::to_string(i + 1));
            ++row;
        }
    } else {
        // At most two SpeedFixed rows fit; a third fixed speed is redundant
        // with the speed-sum structure and is verified after the solve.
        const std::size_t n_fixed_rows =
            std::min<std::size_t>(summary.fixed_indices.size(), 2);
        for (std::size_t k = 0; k < n_fixed_rows; ++k) {
            const int idx = summary.fixed_indices[k];
            system.matrix(row, static_cast<std::size_t>(network.outputs[idx])) = 1.0;
            system.rhs[row] = summary.fixed_speeds[k];
            label("fixed speed output " + std::to_string(idx));
            ++row;
        }
        for (std::size_t k = 0; k + 1 < summary.free_indices.size(); ++k) {
            const int a = summary.free_indices[k];
            const int b = summary.free_indices[k + 1];
            system.matrix(row, static_cast<std::size_t>(network.outputs[a])) = 1.0;
            system.matrix(row, static_cast<std::size_t>(network.outputs[b])) = -1.0;
            label("equal free outputs " + std::to_string(a) + "," +
                  std::to_string(b));
            ++row;
        }
    }

    if (row != n) {
        throw InfeasibleError("speed system is not square: " +
                              std::to_string(row) + " equations for " +
                              std::to_string(n) + " shafts");
    }
    return system;
}

NetworkSolution solve_network(const GearNetwork& network, double omega_in,
                              const ConstraintSet& constraints, double tau_in) {
    const auto summary = classify(constraints);
    auto system = assemble_speed_system(network, omega_in, constraints);
    NetworkSolution solution;
    solution.shaft_speeds = solve_dense(system.matrix, system.rhs,
                                        "gear network speed system",
                                        network.shaft_names);

    if (summary.fixed_indices.size() == 3) {
        const int idx = summary.fixed_indices[2];
        const double got =
            solution.shaft_speeds[static_cast<std::size_t>(network.outputs[idx])];
        const double want = summary.fixed_speeds[2];
        const double scale =
            std::max(1.0, 3.0 * std::abs(network_ratio(network) * omega_in));
        if (std::abs(got - want) > 1e-9 * scale) {
            throw InfeasibleError(
                "three SpeedFixed outputs violate the speed sum constraint: "
                "output " + std::to_string(idx) + " must run at " +
                std::to_string(got) + " rad/s, not " + std::to_string(want));
        }
    }

    // Torque pass: ideal lossless relations, one redundant side-equality on
    // the ring dropped and verified afterwards.
    const std::size_t n = static_cast<std::size_t>(network.shaft_count);
    DenseMatrix torque(n, n);
    std::vector<double> rhs(n, 0.0);
    std::size_t row = 0;

    torque(row, static_cast<std::size_t>(network.input)) = 1.0;
    rhs[row] = tau_in;
    ++row;

    // Input shaft balance: tau_in = sum of branch torques g1 * tau_carrier.
    torque(row, static_cast<std::size_t>(network.input)) = 1.0;
    for (const auto& pair : network.gear_pairs) {
        if (pair.from == network.input) {
            torque(row, static_cast<std::size_t>(pair.to)) = -pair.ratio;
        }
    }
    ++row;

    for (int i = 0; i < 3; ++i) {
        const auto& junction = network.junctions[static_cast<std::size_t>(i)];
        torque(row, static_cast<std::size_t>(junction.side_a)) = 1.0;
        torque(row, static_cast<std::size_t>(junction.carrier)) = -0.5;
        ++row;
        torque(row, static_cast<std::size_t>(junction.side_b)) = 1.0;
        torque(row, static_cast<std::size_t>(junction.carrier)) = -0.5;
        ++row;
    }
    for (int j = 3; j < 6; ++j) {
        const auto& junction = network.junctions[static_cast<std::size_t>(j)];
        torque(row, static_cast<std::size_t>(junction.carrier)) = 1.0;
        torque(row, static_cast<std::size_t>(junction.side_a)) = -1.0;
        torque(row, static_cast<std::size_t>(junction.side_b)) = -1.0;
        ++row;
        if (j < 5) {
            torque(row, static_cast<std::size_t>(junction.side_a)) = 1.0;
            torque(row, static_cast<std::size_t>(junction.side_b)) = -1.0;
            ++row;
        }
    }
    for (const auto& pair : network.gear_pairs) {
        if (pair.from != network.input) {
            torque(row, static_cast<std::size_t>(pair.from)) = 1.0;
            torque(row, static_cast<std::size_t>(pair.to)) = -pair.ratio;
            ++row;
        }
    }
    if (row != n) {
        throw InfeasibleError("torque system is not square");
    }

    solution.shaft_torques = solve_dense(torque, rhs,
                                         "gear network torque system",
                                         network.shaft_names);

    // Dropped redundant equality: sides of the last output junction.
    const auto& last = network.junctions[5];
    const double residual =
        solution.shaft_torques[static_cast<std::size_t>(last.side_a)] -
        solution.shaft_torques[static_cast<std::size_t>(last.side_b)];
    if (std::abs(residual) > 1e-10 * std::max(1.0, std::abs(tau_in))) {
        throw InfeasibleError("torque ring closure failed, residual " +
                              std::to_string(residual));
    }
    return solution;
}

std::string format_system(const SpeedSystem& system) {
    std::ostringstream out;
    char buf[64];
    out << "speed system (" << system.matrix.rows() << " x "
        << system.matrix.cols() << ")\n";
    out << std::string(24, ' ');
    for (const auto& name : system.col_labels) {
        std::snprintf(buf, sizeof(buf), " %11s", name.c_str());
        out << buf;
    }
    out << "          rhs\n";
    for (std::size_t r = 0; r < system.matrix.rows(); ++r) {
        std::snprintf(buf, sizeof(buf), "%-24s", system.row_labels[r].c_str());
        out << buf;
        for (std::size_t c = 0; c < system.matrix.cols(); ++c) {
            std::snprintf(buf, sizeof(buf), " %11.5g", system.matrix(r, c));
            out << buf;
        }
        std::snprintf(buf, sizeof(buf), " %12.5g\n", system.rhs[r]);
        out << buf;
    }
    return out.str();
}

double compare_to_closed_form(const DifferentialSpec& spec, double omega_in,
                              const ConstraintSet& constraints) {
    const auto closed =
        solve_with_constraints(spec, InputDrive{omega_in, 0.0}, constraints);
    const auto network = build_canonical_network(spec);
    const auto oracle = solve_network(network, omega_in, constraints);
    double max_deviation = 0.0;
    for (int i = 0; i < 3; ++i) {
        const double net_speed =
            oracle.shaft_speeds[static_cast<std::size_t>(network.outputs[i])];
        max_deviation =
            std::max(max_deviation, std::abs(net_speed - closed.omega_out[i]));
    }
    return max_deviation;
}

EquivalenceStats run_equivalence_suite(int cases, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> log_ratio(std::log(0.2), std::log(5.0));
    std::uniform_real_distribution<double> omega_dist(-20.0, 20.0);
    std::uniform_real_distribution<double> log_c(std::log(0.1), std::log(10.0));
    std::uniform_real_distribution<double> speed_jitter(-5.0, 5.0);
    std::uniform_int_distribution<int> kind_dist(0, 3);
    std::uniform_int_distribution<int> index_dist(0, 2);

    EquivalenceStats stats;
    for (int n = 0; n < cases; ++n) {
        const DifferentialSpec spec{std::exp(log_ratio(rng)),
                                    std::exp(log_ratio(rng))};
        const double omega_in = omega_dist(rng);
        const double ratio = spec.g1 * spec.g2;

        ConstraintSet constraints{Free{}, Free{}, Free{}};
        switch (kind_dist(rng)) {
            case 0:
                break;  // all free
            case 1:
                for (auto& c : constraints) {
                    c = ViscousLoad{std::exp(log_c(rng))};
                }
                break;
            case 2:
                constraints[static_cast<std::size_t>(index_dist(rng))] =
                    SpeedFixed{ratio * omega_in + speed_jitter(rng)};
                break;
            default: {
                const int skip = index_dist(rng);
                for (int i = 0; i < 3; ++i) {
                    if (i != skip) {
                        constraints[static_cast<std::size_t>(i)] =
                            SpeedFixed{ratio * omega_in + speed_jitter(rng)};
                    }
                }
                break;
            }
        }

        stats.max_deviation = std::max(
            stats.max_deviation, compare_to_closed_form(spec, omega_in, constraints));

        const double omega_total = 3.0 * ratio * omega_in;
        const double scale = std::max(1.0, std::abs(omega_total));
        const auto closed =
            solve_with_constraints(spec, InputDrive{omega_in, 0.0}, constraints);
        const auto network = build_canonical_network(spec);
        const auto oracle = solve_network(network, omega_in, constraints);
        double closed_sum = 0.0;
        double oracle_sum = 0.0;
        for (int i = 0; i < 3; ++i) {
            closed_sum += closed.omega_out[i];
            oracle_sum +=
                oracle.shaft_speeds[static_cast<std::size_t>(network.outputs[i])];
        }
        stats.max_sum_residual =
            std::max({stats.max_sum_residual,
                      std::abs(closed_sum - omega_total) / scale,
                      std::abs(oracle_sum - omega_total) / scale});
        ++stats.cases;
    }
    return stats;
}

}  // namespace tridiff
