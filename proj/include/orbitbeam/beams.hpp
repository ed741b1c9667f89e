// Copyright (c) 2026 The Orbitbeam Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <iosfwd>
#include <vector>

#include "orbitbeam/geometry.hpp"

namespace orbitbeam {

struct Beam {
    int index_n = 0;
    int index_m = 0;
    double cos_x = 0.0;  // 2n / M^ell
    double cos_y = 0.0;  // 2m / M^ell
    GroundPoint ground_center;
    double footprint_radius_m = 0.0;
};

// Fixed-beam grid in directional-cosine space. Beam 0 is always the nadir
// beam (n = m = 0); the rest are ordered by (n^2+m^2, n, m).
struct BeamGrid {
    int m_side = 0;
    double ell = 1.0;
    std::vector<Beam> beams;

    std::size_t size() const { return beams.size(); }
    const Beam& nadir() const { return beams.front(); }
};

/// Beams at (2n/M^ell, 2m/M^ell) whose ground centers lie within r_cov_m.
/// Footprint radius is H / sqrt(M^{2 ell} - 1) for every beam.
BeamGrid build_grid(int m_side, double ell, double r_cov_m, const SystemParams& sys);

/// Normalized magnitude of the length-M steering inner product:
/// (1/M) |sin(pi M d / 2) / sin(pi d / 2)|, 1 at d == 0 (mod 2).
double fejer_kernel(int m_side, double delta);

/// v(a)^H v(b) for delta = a - b, phase retained:
/// exp(j pi (M-1) d / 2) (1/M) sin(pi M d / 2) / sin(pi d / 2).
std::complex<double> dirichlet_complex(int m_side, double delta);

/// Planar-array beam gain in [0, 1]: F^2(ux - cx) * F^2(uy - cy) in cosine space.
double phased_gain_cosines(int m_side, double ux, double uy, double cx, double cy);

/// Same, for a ground-plane user against beam cosines (cx, cy).
double phased_gain(int m_side, GroundPoint user, double cos_x, double cos_y,
                   const SystemParams& sys);

/// Tapered-aperture reflector gain |J1(u)/(2u) + 36 J3(u)/u^3|^2 with
/// u = 2.07123 sin(theta) / sin(theta_3db); gain(0) = 1.
double reflector_gain(double r_m, double phi, double theta3db_rad, const SystemParams& sys);

/// Explicit length-M steering vector (1/sqrt(M)) exp(-j pi k theta_cos),
/// k = 0..M-1. Validation-only; M <= 64.
std::vector<std::complex<double>> steering_vector(int m_side, double theta_cos);

/// Kronecker UPA vector v(cx) (x) v(cy), length M^2. Validation-only; M <= 64.
std::vector<std::complex<double>> upa_steering_vector(int m_side, double cx, double cy);

/// sin(theta) at which the one-dimensional squared kernel crosses 1/2; used to
/// derive the default reflector theta_3db by matching the phased main lobe.
double phased_3db_sine(int m_side);

/// CSV export: k,n,m,cos_x,cos_y,ground_x_m,ground_y_m,footprint_radius_m.
void export_grid_csv(const BeamGrid& grid, std::ostream& out);

}  // namespace orbitbeam
