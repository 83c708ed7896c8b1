// Closed-form kinematics and torque distribution of the three-output
// differential. One input shaft drives three outputs; under equal loads all
// outputs turn at G * omega_in and carry tau_in / (3G) each, and the speed
// sum 3 * G * omega_in is conserved under any load split.
#pragma once

#include <array>
#include <variant>

#include "tridiff/errors.hpp"

namespace tridiff {

/// Gear ratios of the differential: g1 couples the input shaft to the
/// ring-gear stage, g2 the ring-gear stage to the outputs.
struct DifferentialSpec {
    double g1 = 1.0;
    double g2 = 1.0;

    void validate() const;  // throws ValidationError
};

/// Effective input-to-output speed ratio G = g1 * g2.
double effective_ratio(const DifferentialSpec& spec);

struct InputDrive {
    double omega_in = 0.0;  // rad/s
    double tau_in = 0.0;    // N*m, >= 0 when modeling a driving motor

    void validate() const;
};

/// Per-output load model. Free outputs are treated as equally loaded among
/// themselves; at most a determinate combination is accepted (all Free,
/// SpeedFixed plus Free, or all ViscousLoad).
struct Free {};
struct SpeedFixed {
    double omega = 0.0;  // rad/s
};
struct ViscousLoad {
    double c = 0.0;  // N*m*s, load torque per unit output speed, > 0
};

using OutputConstraint = std::variant<Free, SpeedFixed, ViscousLoad>;
using ConstraintSet = std::array<OutputConstraint, 3>;

struct DifferentialSolution {
    std::array<double, 3> omega_out{};  // rad/s
    std::array<double, 3> tau_out{};    // N*m
};

/// All three outputs under equal loads: omega_i = G * omega_in,
/// tau_i = tau_in / (3G).
DifferentialSolution equal_load_outputs(const DifferentialSpec& spec,
                                        const InputDrive& drive);

/// Solves the determinate load cases.
///   - all Free: equal loads.
///   - k SpeedFixed, rest Free: fixed outputs keep their speeds, the free
///     ones split the residual of the sum constraint equally.
///   - all ViscousLoad: equal delivered torques force c_i * omega_i equal,
///     so omega_i = 3 G omega_in * (1/c_i) / sum_j (1/c_j).
/// Reported torques are always the ideal open split tau_in / (3G).
/// Throws InfeasibleError for indeterminate mixtures or three SpeedFixed
/// speeds violating the sum constraint.
DifferentialSolution solve_with_constraints(const DifferentialSpec& spec,
                                            const InputDrive& drive,
                                            const ConstraintSet& constraints);

/// tau_in * omega_in - sum_i tau_out[i] * omega_out[i]. Zero for equal-load
/// solutions; for constrained solutions this reports the power absorbed or
/// supplied by the constraints.
double power_balance_residual(const DifferentialSpec& spec,
                              const InputDrive& drive,
                              const DifferentialSolution& solution);

}  // namespace tridiff
