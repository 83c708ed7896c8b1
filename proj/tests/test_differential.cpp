#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <random>

#include "tridiff/differential.hpp"
#include "tridiff/gear_network.hpp"

using namespace tridiff;

namespace {

// Independent oracle for the all-viscous case: eliminate the 4-unknown
// system {c_i w_i = t for all i, sum w_i = W} by hand, without touching the
// library's algebra.
std::array<double, 3> viscous_by_elimination(const std::array<double, 3>& c,
                                             double omega_total) {
    const double t =
        omega_total / (1.0 / c[0] + 1.0 / c[1] + 1.0 / c[2]);
    return {t / c[0], t / c[1], t / c[2]};
}

}  // namespace

TEST_CASE("effective ratio is the product of the stage ratios") {
    CHECK(effective_ratio({1.0, 1.0}) == 1.0);
    CHECK(effective_ratio({2.0, 0.5}) == 1.0);
    CHECK(effective_ratio({1.5, 2.0}) == 3.0);
}

TEST_CASE("non-positive or non-finite ratios are rejected") {
    CHECK_THROWS_AS(effective_ratio({0.0, 1.0}), ValidationError);
    CHECK_THROWS_AS(effective_ratio({1.0, -2.0}), ValidationError);
    CHECK_THROWS_AS(effective_ratio({std::nan(""), 1.0}), ValidationError);
    CHECK_THROWS_AS(effective_ratio({1.0, INFINITY}), ValidationError);
}

TEST_CASE("equal loads: zero input gives zero outputs") {
    const auto sol = equal_load_outputs({1.0, 1.0}, {0.0, 0.0});
    for (int i = 0; i < 3; ++i) {
        CHECK(sol.omega_out[i] == 0.0);
        CHECK(sol.tau_out[i] == 0.0);
    }
}

TEST_CASE("equal loads: identity ratio splits torque three ways") {
    const auto sol = equal_load_outputs({1.0, 1.0}, {10.0, 3.0});
    for (int i = 0; i < 3; ++i) {
        CHECK(sol.omega_out[i] == 10.0);
        CHECK(sol.tau_out[i] == 1.0);
    }
}

TEST_CASE("equal loads agree with the gear-network solve") {
    const DifferentialSpec spec{2.0, 1.0};
    const auto sol = equal_load_outputs(spec, {5.0, 6.0});
    for (int i = 0; i < 3; ++i) {
        CHECK(sol.omega_out[i] == 10.0);
        CHECK(sol.tau_out[i] == 1.0);
    }

    const auto network = build_canonical_network(spec);
    const auto oracle = solve_network(network, 5.0, {Free{}, Free{}, Free{}}, 6.0);
    for (int i = 0; i < 3; ++i) {
        const auto shaft = static_cast<std::size_t>(network.outputs[i]);
        CHECK(std::abs(oracle.shaft_speeds[shaft] - sol.omega_out[i]) < 1e-12);
        CHECK(std::abs(oracle.shaft_torques[shaft] - sol.tau_out[i]) < 1e-12);
    }
}

TEST_CASE("two fixed speeds force the third through the sum constraint") {
    const auto sol = solve_with_constraints(
        {1.0, 1.0}, {10.0, 0.0}, {SpeedFixed{12.0}, SpeedFixed{9.0}, Free{}});
    CHECK(sol.omega_out[0] == 12.0);
    CHECK(sol.omega_out[1] == 9.0);
    CHECK(sol.omega_out[2] == doctest::Approx(9.0).epsilon(1e-14));
}

TEST_CASE("symmetric viscous loads keep all outputs at G*omega_in") {
    const auto sol = solve_with_constraints(
        {1.0, 1.0}, {10.0, 0.0},
        {ViscousLoad{1.0}, ViscousLoad{1.0}, ViscousLoad{1.0}});
    for (int i = 0; i < 3; ++i) {
        CHECK(sol.omega_out[i] == doctest::Approx(10.0).epsilon(1e-14));
    }
}

TEST_CASE("asymmetric viscous loads match independent elimination") {
    const std::array<double, 3> c{1.0, 2.0, 2.0};
    const auto expected = viscous_by_elimination(c, 30.0);
    CHECK(expected[0] == doctest::Approx(15.0).epsilon(1e-14));
    CHECK(expected[1] == doctest::Approx(7.5).epsilon(1e-14));

    const auto sol = solve_with_constraints(
        {1.0, 1.0}, {10.0, 0.0},
        {ViscousLoad{c[0]}, ViscousLoad{c[1]}, ViscousLoad{c[2]}});
    for (int i = 0; i < 3; ++i) {
        CHECK(std::abs(sol.omega_out[i] - expected[i]) < 1e-12);
    }
}

TEST_CASE("three fixed speeds must satisfy the sum constraint") {
    const ConstraintSet consistent{SpeedFixed{12.0}, SpeedFixed{9.0},
                                   SpeedFixed{9.0}};
    const auto sol = solve_with_constraints({1.0, 1.0}, {10.0, 0.0}, consistent);
    CHECK(sol.omega_out[0] == 12.0);

    const ConstraintSet inconsistent{SpeedFixed{12.0}, SpeedFixed{9.0},
                                     SpeedFixed{20.0}};
    CHECK_THROWS_AS(solve_with_constraints({1.0, 1.0}, {10.0, 0.0}, inconsistent),
                    InfeasibleError);
}

TEST_CASE("indeterminate mixtures and bad loads are rejected") {
    CHECK_THROWS_AS(solve_with_constraints({1.0, 1.0}, {10.0, 0.0},
                                           {ViscousLoad{1.0}, SpeedFixed{5.0},
                                            Free{}}),
                    InfeasibleError);
    CHECK_THROWS_AS(solve_with_constraints({1.0, 1.0}, {10.0, 0.0},
                                           {ViscousLoad{1.0}, ViscousLoad{0.0},
                                            ViscousLoad{1.0}}),
                    ValidationError);
}

TEST_CASE("power balance vanishes for equal-load solutions") {
    const DifferentialSpec spec{1.7, 0.6};
    const InputDrive drive{12.5, 7.25};
    const auto sol = equal_load_outputs(spec, drive);
    const double scale = std::abs(drive.tau_in * drive.omega_in);
    CHECK(std::abs(power_balance_residual(spec, drive, sol)) <= 1e-12 * scale);

    const auto zero = equal_load_outputs(spec, {0.0, 0.0});
    CHECK(power_balance_residual(spec, {0.0, 0.0}, zero) == 0.0);
}

TEST_CASE("power balance vanishes for the matched viscous input torque") {
    // With tau_in = sum(c_i w_i^2) / omega_in the drive supplies exactly the
    // power the loads absorb.
    const std::array<double, 3> c{1.0, 2.0, 2.0};
    const DifferentialSpec spec{1.0, 1.0};
    const auto speeds = viscous_by_elimination(c, 30.0);
    double load_power = 0.0;
    for (int i = 0; i < 3; ++i) {
        load_power += c[i] * speeds[i] * speeds[i];
    }
    const InputDrive drive{10.0, load_power / 10.0};
    CHECK(drive.tau_in == doctest::Approx(45.0).epsilon(1e-14));

    const auto sol = solve_with_constraints(
        spec, drive, {ViscousLoad{c[0]}, ViscousLoad{c[1]}, ViscousLoad{c[2]}});
    CHECK(std::abs(power_balance_residual(spec, drive, sol)) <=
          1e-12 * load_power);
}

TEST_CASE("randomized invariants: equal loads, sum constraint, linearity") {
    std::mt19937_64 rng(321);
    std::uniform_real_distribution<double> ratio(0.2, 5.0);
    std::uniform_real_distribution<double> omega(-40.0, 40.0);
    std::uniform_real_distribution<double> tau(0.0, 30.0);
    std::uniform_real_distribution<double> scale_dist(0.1, 4.0);

    for (int n = 0; n < 300; ++n) {
        const DifferentialSpec spec{ratio(rng), ratio(rng)};
        const InputDrive drive{omega(rng), tau(rng)};
        const double g = effective_ratio(spec);
        const auto sol = equal_load_outputs(spec, drive);

        // three identical speeds and torques, exactly
        CHECK(sol.omega_out[0] == sol.omega_out[1]);
        CHECK(sol.omega_out[1] == sol.omega_out[2]);
        CHECK(sol.tau_out[0] == sol.tau_out[1]);
        CHECK(sol.tau_out[1] == sol.tau_out[2]);

        const double sum = sol.omega_out[0] + sol.omega_out[1] + sol.omega_out[2];
        const double target = 3.0 * g * drive.omega_in;
        CHECK(std::abs(sum - target) <= 1e-12 * std::max(1.0, std::abs(target)));

        // scaling the input scales the outputs
        const double s = scale_dist(rng);
        const auto scaled =
            equal_load_outputs(spec, {s * drive.omega_in, s * drive.tau_in});
        CHECK(scaled.omega_out[0] ==
              doctest::Approx(s * sol.omega_out[0]).epsilon(1e-12));
        CHECK(scaled.tau_out[0] ==
              doctest::Approx(s * sol.tau_out[0]).epsilon(1e-12));
    }
}

TEST_CASE("randomized invariants: viscous solutions equalize c_i * omega_i") {
    std::mt19937_64 rng(654);
    std::uniform_real_distribution<double> ratio(0.2, 5.0);
    std::uniform_real_distribution<double> omega(0.5, 40.0);
    std::uniform_real_distribution<double> coeff(0.1, 10.0);

    for (int n = 0; n < 300; ++n) {
        const DifferentialSpec spec{ratio(rng), ratio(rng)};
        const double omega_in = omega(rng);
        const std::array<double, 3> c{coeff(rng), coeff(rng), coeff(rng)};
        const auto sol = solve_with_constraints(
            spec, {omega_in, 0.0},
            {ViscousLoad{c[0]}, ViscousLoad{c[1]}, ViscousLoad{c[2]}});

        const double t0 = c[0] * sol.omega_out[0];
        for (int i = 1; i < 3; ++i) {
            CHECK(std::abs(c[i] * sol.omega_out[i] - t0) <=
                  1e-12 * std::max(1.0, std::abs(t0)));
        }
        CHECK(sol.tau_out[0] == sol.tau_out[1]);
        CHECK(sol.tau_out[1] == sol.tau_out[2]);
    }
}
