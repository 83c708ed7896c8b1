#include "tridiff/differential.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace tridiff {

namespace {

bool finite(double x) { return std::isfinite(x); }

}  // namespace

void DifferentialSpec::validate() const {
    if (!finite(g1) || g1 <= 0.0) {
        throw ValidationError("DifferentialSpec.g1 must be finite and > 0, got " +
                              std::to_string(g1));
    }
    if (!finite(g2) || g2 <= 0.0) {
        throw ValidationError("DifferentialSpec.g2 must be finite and > 0, got " +
                              std::to_string(g2));
    }
}

double effective_ratio(const DifferentialSpec& spec) {
    spec.validate();
    return spec.g1 * spec.g2;
}

void InputDrive::validate() const {
    if (!finite(omega_in)) {
        throw ValidationError("InputDrive.omega_in must be finite");
    }
    if (!finite(tau_in) || tau_in < 0.0) {
        throw ValidationError("InputDrive.tau_in must be finite and >= 0");
    }
}

DifferentialSolution equal_load_outputs(const DifferentialSpec& spec,
                                        const InputDrive& drive) {
    drive.validate();
    const double ratio = effective_ratio(spec);
    const double omega = ratio * drive.omega_in;
    const double tau = drive.tau_in / (3.0 * ratio);
    return DifferentialSolution{{omega, omega, omega}, {tau, tau, tau}};
}

DifferentialSolution solve_with_constraints(const DifferentialSpec& spec,
                                            const InputDrive& drive,
                                            const ConstraintSet& constraints) {
    drive.validate();
    const double ratio = effective_ratio(spec);
    const double omega_total = 3.0 * ratio * drive.omega_in;
    const double tau_each = drive.tau_in / (3.0 * ratio);

    int n_fixed = 0;
    int n_viscous = 0;
    for (const auto& c : constraints) {
        if (const auto* fixed = std::get_if<SpeedFixed>(&c)) {
            if (!finite(fixed->omega)) {
                throw ValidationError("SpeedFixed.omega must be finite");
            }
            ++n_fixed;
        } else if (const auto* viscous = std::get_if<ViscousLoad>(&c)) {
            if (!finite(viscous->c) || viscous->c <= 0.0) {
                throw ValidationError("ViscousLoad.c must be finite and > 0");
            }
            ++n_viscous;
        }
    }

    DifferentialSolution solution;
    solution.tau_out = {tau_each, tau_each, tau_each};

    if (n_viscous == 3) {
        // Equal delivered torques: c_i * omega_i identical across outputs.
        double inv_sum = 0.0;
        std::array<double, 3> inv{};
        for (int i = 0; i < 3; ++i) {
            inv[i] = 1.0 / std::get<ViscousLoad>(constraints[i]).c;
            inv_sum += inv[i];
        }
        for (int i = 0; i < 3; ++i) {
            solution.omega_out[i] = omega_total * inv[i] / inv_sum;
        }
        return solution;
    }
    if (n_viscous > 0) {
        throw InfeasibleError(
            "indeterminate constraint combination: ViscousLoad mixed with "
            "SpeedFixed/Free outputs (supported cases: all Free, SpeedFixed "
            "plus Free, all ViscousLoad)");
    }

    double fixed_sum = 0.0;
    for (int i = 0; i < 3; ++i) {
        if (const auto* fixed = std::get_if<SpeedFixed>(&constraints[i])) {
            solution.omega_out[i] = fixed->omega;
            fixed_sum += fixed->omega;
        }
    }
    if (n_fixed == 3) {
        const double tol = 1e-9 * std::max(1.0, std::abs(omega_total));
        if (std::abs(fixed_sum - omega_total) > tol) {
            throw InfeasibleError(
                "three SpeedFixed outputs violate the speed sum constraint: "
                "sum of fixed speeds is " +
                std::to_string(fixed_sum) + " rad/s but 3*G*omega_in is " +
                std::to_string(omega_total) + " rad/s");
        }
        return solution;
    }

    const double residual_each = (omega_total - fixed_sum) / (3 - n_fixed);
    for (int i = 0; i < 3; ++i) {
        if (std::holds_alternative<Free>(constraints[i])) {
            solution.omega_out[i] = residual_each;
        }
    }
    return solution;
}

double power_balance_residual(const DifferentialSpec& spec,
                              const InputDrive& drive,
                              const DifferentialSolution& solution) {
    spec.validate();
    drive.validate();
    double out = 0.0;
    for (int i = 0; i < 3; ++i) {
        out += solution.tau_out[i] * solution.omega_out[i];
    }
    return drive.tau_in * drive.omega_in - out;
}

}  // namespace tridiff
