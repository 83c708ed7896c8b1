#include "tridiff/clamp.hpp"

#include <cmath>
#include <string>

namespace tridiff {

namespace {

double spring_force(const ClampSpec& spec, double compression) {
    return spec.springs_per_module * spec.stiffness * (spec.preload + compression);
}

double module_compression(const ClampSpec& spec, double pipe_radius,
                          double obstruction, int module) {
    const double compression = (spec.nominal_radius - pipe_radius) + obstruction;
    if (compression < spec.travel_min) {
        throw FitError("module " + std::to_string(module + 1) +
                       " hits the extension stop (travel_min = " +
                       std::to_string(spec.travel_min) +
                       " m): pipe radius " + std::to_string(pipe_radius) +
                       " m exceeds the reachable radius " +
                       std::to_string(spec.nominal_radius - spec.travel_min) + " m");
    }
    if (compression > spec.travel_max) {
        throw FitError("module " + std::to_string(module + 1) +
                       " hits the compression stop (travel_max = " +
                       std::to_string(spec.travel_max) +
                       " m): required compression " + std::to_string(compression) +
                       " m exceeds the travel");
    }
    return compression;
}

}  // namespace

void ClampSpec::validate() const {
    if (!std::isfinite(stiffness) || stiffness <= 0.0) {
        throw ValidationError("ClampSpec.stiffness must be finite and > 0");
    }
    if (springs_per_module < 1) {
        throw ValidationError("ClampSpec.springs_per_module must be >= 1");
    }
    if (!std::isfinite(preload) || preload < 0.0) {
        throw ValidationError("ClampSpec.preload must be finite and >= 0");
    }
    if (!std::isfinite(travel_min) || !std::isfinite(travel_max) ||
        travel_min < 0.0 || travel_min >= travel_max) {
        throw ValidationError(
            "ClampSpec travel stops must satisfy 0 <= travel_min < travel_max");
    }
    if (!std::isfinite(friction) || friction <= 0.0) {
        throw ValidationError("ClampSpec.friction must be finite and > 0");
    }
    if (!std::isfinite(nominal_radius) || nominal_radius <= 0.0) {
        throw ValidationError("ClampSpec.nominal_radius must be finite and > 0");
    }
}

ClampState compression_for_pipe(const ClampSpec& spec, double pipe_radius) {
    spec.validate();
    if (!std::isfinite(pipe_radius) || pipe_radius <= 0.0) {
        throw ValidationError("pipe radius must be finite and > 0");
    }
    ClampState state;
    for (int m = 0; m < 3; ++m) {
        const double c = module_compression(spec, pipe_radius, 0.0, m);
        state.compression[static_cast<std::size_t>(m)] = c;
        state.normal_force[static_cast<std::size_t>(m)] = spring_force(spec, c);
    }
    return state;
}

ClampState asymmetric_compression(const ClampSpec& spec, double pipe_radius,
                                  const std::array<double, 3>& obstructions) {
    spec.validate();
    if (!std::isfinite(pipe_radius) || pipe_radius <= 0.0) {
        throw ValidationError("pipe radius must be finite and > 0");
    }
    ClampState state;
    for (int m = 0; m < 3; ++m) {
        const double obstruction = obstructions[static_cast<std::size_t>(m)];
        if (!std::isfinite(obstruction) || obstruction < 0.0) {
            throw ValidationError("obstruction heights must be finite and >= 0");
        }
        const double c = module_compression(spec, pipe_radius, obstruction, m);
        state.compression[static_cast<std::size_t>(m)] = c;
        state.normal_force[static_cast<std::size_t>(m)] = spring_force(spec, c);
    }
    return state;
}

TractionResult traction_check(const ClampState& state, const ClampSpec& spec,
                              double required_force_n) {
    spec.validate();
    if (!std::isfinite(required_force_n) || required_force_n < 0.0) {
        throw ValidationError("required traction force must be finite and >= 0");
    }
    double total_normal = 0.0;
    for (const double n : state.normal_force) {
        total_normal += n;
    }
    TractionResult result;
    result.capacity_n = spec.friction * total_normal;
    result.margin_n = result.capacity_n - required_force_n;
    result.pass = result.capacity_n >= required_force_n;
    return result;
}

}  // namespace tridiff
