// Copyright (c) 2026 The Orbitbeam Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "orbitbeam/geometry.hpp"
#include "orbitbeam/rng.hpp"

namespace orbitbeam {

/// One realization of the homogeneous PPP over a disk centred at nadir.
struct UserDrop {
    std::vector<GroundPoint> users;
    double intensity = 0.0;        // users per m^2
    double region_radius_m = 0.0;  // coverage disk radius
};

struct BeamFootprint {
    GroundPoint center;
    double radius_m = 0.0;
};

/// Poisson(lambda pi R^2) count, points uniform on the disk.
UserDrop sample_ppp(double intensity, double region_radius_m, RandomStream& stream);

struct NearestUser {
    GroundPoint point;
    double distance_m = 0.0;
    std::size_t index = 0;  // index into the drop sequence
};

/// Among users inside the footprint, the one closest to the footprint center.
/// Ties broken by lowest drop index; empty candidate set -> nullopt.
std::optional<NearestUser> nearest_user(const UserDrop& drop, const BeamFootprint& beam);

/// P[R_a < r* < R_b] for the nearest-user distance r* from a disk center:
/// exp(-lambda pi R_a^2) - exp(-lambda pi R_b^2).
double nearest_distance_band_prob(double intensity, double r_a, double r_b);

/// Conditional (on nonempty) nearest-distance density over [0, r1_max]:
/// 2 lambda pi r exp(-lambda pi r^2) / (1 - exp(-lambda pi r1_max^2)).
double nearest_distance_pdf(double intensity, double r1_max, double r);

/// Line-based text serialization: header with intensity, radius, seed, then
/// one "x_m y_m" pair per line.
void save_drop(const UserDrop& drop, std::uint64_t seed, std::ostream& out);
UserDrop load_drop(std::istream& in);

}  // namespace orbitbeam
