// Copyright (c) 2026 The Orbitbeam Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

namespace orbitbeam {

// Link-budget parameters for a nadir-pointing GEO satellite. Defaults are the
// Ka-band reference setup used throughout (altitude 35786 km, 20 GHz carrier,
// 500 MHz beam bandwidth, 517 K noise temperature, 52/41.7 dBi gains).
// Internal units are meters, hertz, watts and linear gains; dB only appears
// at the config/reporting boundary.
struct SystemParams {
    double altitude_m = 3.5786e7;
    double carrier_hz = 2.0e10;
    double bandwidth_hz = 5.0e8;
    double temp_k = 517.0;
    double boltzmann = 1.3807e-23;
    double g_tx_db = 52.0;
    double g_rx_db = 41.7;
    double p0_watt = 10.0;
    double light_speed = 299792458.0;

    double g_tx_linear() const { return std::pow(10.0, g_tx_db / 10.0); }
    double g_rx_linear() const { return std::pow(10.0, g_rx_db / 10.0); }
    void validate() const;
};

/// Planar coordinates relative to the sub-satellite (nadir) point.
struct GroundPoint {
    double x_m = 0.0;
    double y_m = 0.0;
    double radius() const { return std::hypot(x_m, y_m); }
};

struct DirectionCosines {
    double x = 0.0;  // sin(theta) cos(phi)
    double y = 0.0;  // sin(theta) sin(phi)
};

/// Distance from the satellite to a ground point: sqrt(r^2 + H^2).
double slant_distance(GroundPoint p, const SystemParams& sys);

/// Free-space gain (c0 / (4 pi f_c d))^2, dimensionless.
double path_loss(double distance_m, const SystemParams& sys);

DirectionCosines direction_cosines(GroundPoint p, const SystemParams& sys);

/// Noise-normalized transmit power P = P0 / (kappa T B).
double noise_normalized_power(const SystemParams& sys);

}  // namespace orbitbeam
