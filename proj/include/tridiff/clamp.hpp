// Spring wall-clamp compliance and traction capacity for the three track
// modules. Linear springs with rigid travel stops, reduced to pure radial
// motion; traction capacity is mu times the total normal force.
#pragma once

#include <array>

#include "tridiff/errors.hpp"

namespace tridiff {

struct ClampSpec {
    double stiffness = 0.0;       // N/m per linkage spring
    int springs_per_module = 4;   // one spring per linkage
    double preload = 0.0;         // m
    double travel_min = 0.0;      // m, extension stop
    double travel_max = 0.0;      // m, compression stop
    double friction = 0.0;        // dimensionless mu
    double nominal_radius = 0.0;  // m, module contact radius at zero compression

    void validate() const;
};

struct ClampState {
    std::array<double, 3> compression{};   // m per module
    std::array<double, 3> normal_force{};  // N per module
};

/// All three modules equally compressed to fit the pipe, with
/// N = n_springs * k * (preload + compression). Throws FitError naming the
/// violated stop when the pipe radius is outside the reachable band.
ClampState compression_for_pipe(const ClampSpec& spec, double pipe_radius);

/// Per-module compression with radial obstructions added on top of the
/// symmetric pipe fit; modules compress independently.
ClampState asymmetric_compression(const ClampSpec& spec, double pipe_radius,
                                  const std::array<double, 3>& obstructions);

struct TractionResult {
    bool pass = false;
    double capacity_n = 0.0;  // mu * sum of normal forces
    double margin_n = 0.0;    // capacity - required
};

/// Pass iff mu * sum(normal forces) >= required_force.
TractionResult traction_check(const ClampState& state, const ClampSpec& spec,
                              double required_force_n);

}  // namespace tridiff
