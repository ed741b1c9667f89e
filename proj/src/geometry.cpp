// Copyright (c) 2026 The Orbitbeam Authors
// SPDX-License-Identifier: Apache-2.0
#include "orbitbeam/geometry.hpp"

#include <cmath>

#include "orbitbeam/errors.hpp"

namespace orbitbeam {

namespace {
constexpr double kPi = 3.141592653589793238462643383279503;
}

void SystemParams::validate() const {
    auto pos = [](double v) { return std::isfinite(v) && v > 0.0; };
    if (!pos(altitude_m) || !pos(carrier_hz) || !pos(bandwidth_hz) || !pos(temp_k) ||
        !pos(boltzmann) || !pos(p0_watt) || !pos(light_speed))
        throw ArgumentError("SystemParams: all physical parameters must be positive and finite");
    if (!std::isfinite(g_tx_db) || !std::isfinite(g_rx_db))
        throw ArgumentError("SystemParams: antenna gains must be finite");
}

double slant_distance(GroundPoint p, const SystemParams& sys) {
    return std::hypot(p.radius(), sys.altitude_m);
}

double path_loss(double distance_m, const SystemParams& sys) {
    if (!(distance_m > 0.0)) throw ArgumentError("path_loss: distance must be > 0");
    const double g = sys.light_speed / (4.0 * kPi * sys.carrier_hz * distance_m);
    return g * g;
}

DirectionCosines direction_cosines(GroundPoint p, const SystemParams& sys) {
    const double d = slant_distance(p, sys);
    return {p.x_m / d, p.y_m / d};
}

double noise_normalized_power(const SystemParams& sys) {
    return sys.p0_watt / (sys.boltzmann * sys.temp_k * sys.bandwidth_hz);
}

}  // namespace orbitbeam
