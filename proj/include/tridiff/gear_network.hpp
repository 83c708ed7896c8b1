// Constraint-network model of the differential's internal architecture:
// six two-output bevel junctions on an interleaved ring of shared side-gear
// shafts, solved as a linear system. Serves as the independent oracle for
// the closed forms in differential.hpp.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tridiff/differential.hpp"
#include "tridiff/linear_solver.hpp"

namespace tridiff {

using ShaftId = int;

/// One conventional two-output bevel differential:
/// omega_side_a + omega_side_b = 2 * omega_carrier, equal side torques,
/// carrier torque = sum of side torques.
struct BevelDifferentialJunction {
    ShaftId carrier = -1;
    ShaftId side_a = -1;
    ShaftId side_b = -1;
};

/// Rigid gear coupling: omega_to = ratio * omega_from.
struct GearPair {
    ShaftId from = -1;
    ShaftId to = -1;
    double ratio = 1.0;
};

struct GearNetwork {
    int shaft_count = 0;
    std::vector<BevelDifferentialJunction> junctions;  // input stage 0..2, output stage 3..5
    std::vector<GearPair> gear_pairs;
    ShaftId input = -1;
    std::array<ShaftId, 3> outputs{-1, -1, -1};
    std::vector<std::string> shaft_names;
};

/// Canonical three-fold-symmetric topology: the input drives the three
/// input-stage carriers through ratio g1; each input-stage side gear shares
/// a shaft with a side gear of the adjacent output-stage junction; each
/// output-stage carrier drives one output through ratio g2.
GearNetwork build_canonical_network(const DifferentialSpec& spec);

struct NetworkSolution {
    std::vector<double> shaft_speeds;   // indexed by ShaftId, rad/s
    std::vector<double> shaft_torques;  // torque transmitted along each shaft, N*m
};

/// Assembles junction, gear-pair and load-constraint relations into a linear
/// system and solves it. Accepts the same determinate constraint sets as
/// solve_with_constraints. tau_in drives the torque pass only; speeds are
/// set by omega_in and the loads.
NetworkSolution solve_network(const GearNetwork& network, double omega_in,
                              const ConstraintSet& constraints,
                              double tau_in = 1.0);

/// Assembled speed system, exposed for plain-text debug dumps.
struct SpeedSystem {
    DenseMatrix matrix;
    std::vector<double> rhs;
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
};

SpeedSystem assemble_speed_system(const GearNetwork& network, double omega_in,
                                  const ConstraintSet& constraints);

std::string format_system(const SpeedSystem& system);

/// max_i |omega_oracle[i] - omega_closed_form[i]| over the three outputs.
double compare_to_closed_form(const DifferentialSpec& spec, double omega_in,
                              const ConstraintSet& constraints);

/// Randomized closed-form vs network equivalence sweep over determinate
/// load cases (used by the CLI oracle-check command and the acceptance
/// suite). Also tracks the worst speed-sum residual |sum omega - 3 G omega_in|
/// across both solution paths.
struct EquivalenceStats {
    int cases = 0;
    double max_deviation = 0.0;     // rad/s
    double max_sum_residual = 0.0;  // rad/s, already scaled relative
};

EquivalenceStats run_equivalence_suite(int cases, std::uint64_t seed);

}  // namespace tridiff
