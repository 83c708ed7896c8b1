#include "tridiff/pipe_geometry.hpp"

#include <cmath>
#include <string>

namespace tridiff {

namespace {

constexpr double kPi = 3.14159265358979323846264338328;

double normalize_angle(double phi) {
    if (!std::isfinite(phi)) {
        throw ValidationError("orientation angle must be finite");
    }
    double r = std::fmod(phi, kTwoPi);
    if (r < 0.0) {
        r += kTwoPi;
    }
    if (r >= kTwoPi) {
        r = 0.0;  // fmod rounding at the wrap point
    }
    return r;
}

}  // namespace

void PipeSpec::validate() const {
    if (!std::isfinite(inner_radius) || inner_radius <= 0.0) {
        throw ValidationError("PipeSpec.inner_radius must be finite and > 0");
    }
}

Orientation::Orientation(double phi_rad) : phi_(normalize_angle(phi_rad)) {}

void validate_segment(const Segment& segment, const PipeSpec& spec) {
    spec.validate();
    if (const auto* straight = std::get_if<Straight>(&segment)) {
        if (!std::isfinite(straight->length) || straight->length <= 0.0) {
            throw GeometryError("Straight.length must be finite and > 0");
        }
        return;
    }
    const auto& bend = std::get<Bend>(segment);
    if (!std::isfinite(bend.bend_radius) || bend.bend_radius <= spec.inner_radius) {
        throw GeometryError(
            "Bend.bend_radius must exceed the pipe inner radius (" +
            std::to_string(spec.inner_radius) + " m), got " +
            std::to_string(bend.bend_radius) + " m");
    }
    if (!std::isfinite(bend.angle) || bend.angle <= 0.0 || bend.angle > kPi) {
        throw GeometryError("Bend.angle must lie in (0, pi], got " +
                            std::to_string(bend.angle) + " rad");
    }
}

void PipeNetwork::validate() const {
    spec.validate();
    if (segments.empty()) {
        throw ValidationError("PipeNetwork.segments must be non-empty");
    }
    for (const auto& segment : segments) {
        validate_segment(segment, spec);
    }
}

std::array<double, 3> contact_radii(double bend_radius, double pipe_radius,
                                    double phi) {
    if (!std::isfinite(pipe_radius) || pipe_radius <= 0.0) {
        throw GeometryError("pipe radius must be finite and > 0");
    }
    if (!std::isfinite(bend_radius) || bend_radius <= pipe_radius) {
        throw GeometryError("bend radius must exceed the pipe radius");
    }
    std::array<double, 3> radii{};
    for (int i = 0; i < 3; ++i) {
        radii[static_cast<std::size_t>(i)] =
            bend_radius + pipe_radius * std::cos(phi + kTwoPi * i / 3.0);
    }
    return radii;
}

std::array<double, 3> segment_track_lengths(const Segment& segment,
                                            const PipeSpec& spec,
                                            Orientation orientation) {
    validate_segment(segment, spec);
    if (const auto* straight = std::get_if<Straight>(&segment)) {
        return {straight->length, straight->length, straight->length};
    }
    const auto& bend = std::get<Bend>(segment);
    auto radii = contact_radii(bend.bend_radius, spec.inner_radius,
                               orientation.phi());
    for (auto& r : radii) {
        r *= bend.angle;
    }
    return radii;
}

double centerline_length(const Segment& segment) {
    if (const auto* straight = std::get_if<Straight>(&segment)) {
        return straight->length;
    }
    const auto& bend = std::get<Bend>(segment);
    return bend.bend_radius * bend.angle;
}

bool is_bend(const Segment& segment) {
    return std::holds_alternative<Bend>(segment);
}

int bend_count(const PipeNetwork& network) {
    int count = 0;
    for (const auto& segment : network.segments) {
        if (is_bend(segment)) {
            ++count;
        }
    }
    return count;
}

}  // namespace tridiff
