#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "tridiff/pipe_geometry.hpp"

using namespace tridiff;

namespace {
constexpr double kPi = 3.14159265358979323846264338328;
}

TEST_CASE("contact radii at the reference orientations") {
    // cos(+-2*pi/3) = -1/2
    const auto at_zero = contact_radii(0.5, 0.1, 0.0);
    CHECK(at_zero[0] == doctest::Approx(0.6).epsilon(1e-14));
    CHECK(at_zero[1] == doctest::Approx(0.45).epsilon(1e-14));
    CHECK(at_zero[2] == doctest::Approx(0.45).epsilon(1e-14));

    const auto at_pi = contact_radii(0.5, 0.1, kPi);
    CHECK(at_pi[0] == doctest::Approx(0.4).epsilon(1e-14));
    CHECK(at_pi[1] == doctest::Approx(0.55).epsilon(1e-14));
    CHECK(at_pi[2] == doctest::Approx(0.55).epsilon(1e-14));
}

TEST_CASE("tiny pipe radius degenerates to the centerline") {
    const auto radii = contact_radii(0.5, 1e-9, 1.234);
    for (const double r : radii) {
        CHECK(r == doctest::Approx(0.5).epsilon(1e-8));
    }
}

TEST_CASE("bend radius must exceed the pipe radius") {
    CHECK_THROWS_AS(contact_radii(0.1, 0.1, 0.0), GeometryError);
    CHECK_THROWS_AS(contact_radii(0.05, 0.1, 0.0), GeometryError);
    CHECK_THROWS_AS(contact_radii(0.5, 0.0, 0.0), GeometryError);
}

TEST_CASE("radii-sum identity and range over random orientations") {
    std::mt19937_64 rng(111);
    std::uniform_real_distribution<double> bend(0.05, 2.0);
    std::uniform_real_distribution<double> frac(0.01, 0.95);
    std::uniform_real_distribution<double> angle(-20.0, 20.0);

    for (int n = 0; n < 500; ++n) {
        const double r_bend = bend(rng);
        const double r_pipe = frac(rng) * r_bend;
        const double phi = angle(rng);
        const auto radii = contact_radii(r_bend, r_pipe, phi);

        double sum = 0.0;
        for (const double r : radii) {
            CHECK(r > r_bend - r_pipe - 1e-15);
            CHECK(r <= r_bend + r_pipe + 1e-15);
            sum += r;
        }
        CHECK(std::abs(sum - 3.0 * r_bend) <= 1e-12 * std::max(1.0, 3.0 * r_bend));

        // rotating by 2*pi/3 cyclically permutes the radii:
        // R_i(phi + 2*pi/3) = R_{i+1}(phi)
        const auto rotated = contact_radii(r_bend, r_pipe, phi + kTwoPi / 3.0);
        CHECK(rotated[0] == doctest::Approx(radii[1]).epsilon(1e-9));
        CHECK(rotated[1] == doctest::Approx(radii[2]).epsilon(1e-9));
        CHECK(rotated[2] == doctest::Approx(radii[0]).epsilon(1e-9));
    }
}

TEST_CASE("orientation normalizes to [0, 2*pi) and lengths are periodic") {
    CHECK(Orientation(0.0).phi() == 0.0);
    CHECK(Orientation(kTwoPi).phi() == doctest::Approx(0.0));
    CHECK(Orientation(-0.5).phi() == doctest::Approx(kTwoPi - 0.5).epsilon(1e-14));
    CHECK(Orientation(7.0 * kPi).phi() == doctest::Approx(kPi).epsilon(1e-12));
    CHECK(Orientation(1.25).phi() == 1.25);
    CHECK_THROWS_AS(Orientation(std::nan("")), ValidationError);

    const PipeSpec spec{0.1};
    const Segment bend = Bend{0.5, kPi / 3.0};
    const auto base = segment_track_lengths(bend, spec, Orientation(0.7));
    const auto wrapped =
        segment_track_lengths(bend, spec, Orientation(0.7 + 3.0 * kTwoPi));
    for (int i = 0; i < 3; ++i) {
        CHECK(wrapped[i] == doctest::Approx(base[i]).epsilon(1e-9));
    }

    // continuity: a small change in phi moves lengths by at most ~r*beta*dphi
    const double dphi = 1e-7;
    const auto nudged = segment_track_lengths(bend, spec, Orientation(0.7 + dphi));
    for (int i = 0; i < 3; ++i) {
        CHECK(std::abs(nudged[i] - base[i]) <
              2.0 * spec.inner_radius * (kPi / 3.0) * dphi);
    }
}

TEST_CASE("straight lengths are orientation-independent") {
    const PipeSpec spec{0.1};
    const auto lengths =
        segment_track_lengths(Straight{2.0}, spec, Orientation(1.0));
    CHECK(lengths[0] == 2.0);
    CHECK(lengths[1] == 2.0);
    CHECK(lengths[2] == 2.0);
}

TEST_CASE("bend arc lengths are R_i * beta") {
    const PipeSpec spec{0.1};
    const auto lengths = segment_track_lengths(Bend{0.5, kPi / 2.0}, spec,
                                               Orientation(0.0));
    CHECK(lengths[0] == doctest::Approx(0.6 * kPi / 2.0).epsilon(1e-12));
    CHECK(lengths[1] == doctest::Approx(0.45 * kPi / 2.0).epsilon(1e-12));
    CHECK(lengths[2] == doctest::Approx(0.45 * kPi / 2.0).epsilon(1e-12));
    CHECK(lengths[0] == doctest::Approx(0.9425).epsilon(1e-4));
    CHECK(lengths[1] == doctest::Approx(0.7069).epsilon(1e-4));
}

TEST_CASE("track length deviations from the centerline arc cancel") {
    std::mt19937_64 rng(222);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    const PipeSpec spec{0.08};
    for (int n = 0; n < 200; ++n) {
        const Bend bend{0.4, kPi / 2.0};
        const auto lengths =
            segment_track_lengths(bend, spec, Orientation(angle(rng)));
        const double center = bend.bend_radius * bend.angle;
        double devsum = 0.0;
        for (const double s : lengths) {
            devsum += s - center;
        }
        CHECK(std::abs(devsum) <= 1e-12 * std::max(1.0, 3.0 * center));
    }
}

TEST_CASE("segment and network validation") {
    const PipeSpec spec{0.1};
    CHECK_THROWS_AS(validate_segment(Straight{0.0}, spec), GeometryError);
    CHECK_THROWS_AS(validate_segment(Straight{-1.0}, spec), GeometryError);
    CHECK_THROWS_AS(validate_segment(Bend{0.1, 1.0}, spec), GeometryError);
    CHECK_THROWS_AS(validate_segment(Bend{0.5, 0.0}, spec), GeometryError);
    CHECK_THROWS_AS(validate_segment(Bend{0.5, 3.2}, spec), GeometryError);
    CHECK_NOTHROW(validate_segment(Bend{0.5, kPi}, spec));

    PipeNetwork network{spec, {}};
    CHECK_THROWS_AS(network.validate(), ValidationError);
    network.segments.emplace_back(Straight{1.0});
    CHECK_NOTHROW(network.validate());
    network.segments.emplace_back(Bend{0.05, 1.0});
    CHECK_THROWS_AS(network.validate(), GeometryError);

    CHECK(bend_count(PipeNetwork{spec, {Straight{1.0}, Bend{0.5, 1.0}}}) == 1);
    CHECK(centerline_length(Straight{2.5}) == 2.5);
    CHECK(centerline_length(Bend{0.5, kPi}) == doctest::Approx(0.5 * kPi));
}
