// Pipe-network geometry: straights and planar torus bends, and the
// per-track contact radii that drive speed allocation in bends.
#pragma once

#include <array>
#include <variant>
#include <vector>

#include "tridiff/errors.hpp"

namespace tridiff {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

struct PipeSpec {
    double inner_radius = 0.0;  // m, > 0

    void validate() const;
};

struct Straight {
    double length = 0.0;  // m, > 0
};

/// Planar bend with constant centerline radius. Angle in (0, pi].
struct Bend {
    double bend_radius = 0.0;  // m, centerline radius of curvature
    double angle = 0.0;        // rad
};

using Segment = std::variant<Straight, Bend>;

/// Roll angle of the robot about the pipe axis, measured from the outward
/// bend-plane direction to track 1's contact point. Stored normalized to
/// [0, 2*pi).
class Orientation {
  public:
    Orientation() = default;
    explicit Orientation(double phi_rad);

    double phi() const { return phi_; }

  private:
    double phi_ = 0.0;
};

struct PipeNetwork {
    PipeSpec spec;
    std::vector<Segment> segments;

    void validate() const;
};

/// Throws GeometryError when the segment is invalid for the given pipe.
void validate_segment(const Segment& segment, const PipeSpec& spec);

/// Per-track radii of curvature through a bend, tracks spaced 120 degrees
/// apart: R_i = R_b + r * cos(phi + 2*pi*(i-1)/3). Requires R_b > r > 0.
std::array<double, 3> contact_radii(double bend_radius, double pipe_radius,
                                    double phi);

/// Geometric path length of each track through the segment. Straights are
/// orientation-independent; bend arcs are R_i * angle.
std::array<double, 3> segment_track_lengths(const Segment& segment,
                                            const PipeSpec& spec,
                                            Orientation orientation);

/// Centerline length of a segment (straight length or R_b * angle).
double centerline_length(const Segment& segment);

bool is_bend(const Segment& segment);

int bend_count(const PipeNetwork& network);

}  // namespace tridiff
