// Copyright (c) 2026 The Orbitbeam Authors
// SPDX-License-Identifier: Apache-2.0
#include "orbitbeam/beams.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "orbitbeam/errors.hpp"
#include "orbitbeam/specfun.hpp"

namespace orbitbeam {

namespace {

constexpr double kPi = 3.141592653589793238462643383279503;

// Reduce to [-1, 1]; both kernels are exactly 2-periodic in the cosine offset.
double reduce_delta(double delta) { return delta - 2.0 * std::round(0.5 * delta); }

GroundPoint cosine_to_ground(double cx, double cy, double altitude_m) {
    const double s2 = cx * cx + cy * cy;
    const double scale = altitude_m / std::sqrt(1.0 - s2);
    return {scale * cx, scale * cy};
}

}  // namespace

double fejer_kernel(int m_side, double delta) {
    if (m_side == 1) return 1.0;
    const double d = reduce_delta(delta);
    const double den = std::sin(0.5 * kPi * d);
    if (den == 0.0) return 1.0;
    return std::fabs(std::sin(0.5 * kPi * m_side * d) / (m_side * den));
}

std::complex<double> dirichlet_complex(int m_side, double delta) {
    if (m_side == 1) return {1.0, 0.0};
    const double d = reduce_delta(delta);
    const double den = std::sin(0.5 * kPi * d);
    double ratio = 1.0;
    if (den != 0.0) ratio = std::sin(0.5 * kPi * m_side * d) / (m_side * den);
    const double phase = 0.5 * kPi * (m_side - 1) * d;
    return std::polar(ratio, phase);
}

double phased_gain_cosines(int m_side, double ux, double uy, double cx, double cy) {
    const double fx = fejer_kernel(m_side, ux - cx);
    const double fy = fejer_kernel(m_side, uy - cy);
    return fx * fx * fy * fy;
}

double phased_gain(int m_side, GroundPoint user, double cos_x, double cos_y,
                   const SystemParams& sys) {
    const auto u = direction_cosines(user, sys);
    return phased_gain_cosines(m_side, u.x, u.y, cos_x, cos_y);
}

double reflector_gain(double r_m, double /*phi*/, double theta3db_rad, const SystemParams& sys) {
    if (r_m < 0.0) throw ArgumentError("reflector_gain: r must be >= 0");
    const double sin_theta = r_m / std::hypot(r_m, sys.altitude_m);
    const double u = 2.07123 * sin_theta / std::sin(theta3db_rad);
    if (u < 1e-3) {
        // Series limits: J1(u)/(2u) = 1/4 - u^2/32 + ..., 36 J3(u)/u^3 = 3/4 - 3u^2/64 + ...
        const double v = 1.0 - 0.078125 * u * u;
        return v * v;
    }
    const double v = specfun::bessel_j(1, u) / (2.0 * u) +
                     36.0 * specfun::bessel_j(3, u) / (u * u * u);
    return v * v;
}

std::vector<std::complex<double>> steering_vector(int m_side, double theta_cos) {
    if (m_side < 1 || m_side > 64)
        throw ArgumentError("steering_vector: explicit vectors limited to M <= 64");
    std::vector<std::complex<double>> v(m_side);
    const double scale = 1.0 / std::sqrt(static_cast<double>(m_side));
    for (int k = 0; k < m_side; ++k) v[k] = std::polar(scale, -kPi * k * theta_cos);
    return v;
}

std::vector<std::complex<double>> upa_steering_vector(int m_side, double cx, double cy) {
    const auto vx = steering_vector(m_side, cx);
    const auto vy = steering_vector(m_side, cy);
    std::vector<std::complex<double>> v(static_cast<std::size_t>(m_side) * m_side);
    for (int i = 0; i < m_side; ++i)
        for (int j = 0; j < m_side; ++j) v[static_cast<std::size_t>(i) * m_side + j] = vx[i] * vy[j];
    return v;
}

double phased_3db_sine(int m_side) {
    // F^2 is 1 at s = 0 and 0 at the first null 2/M; bisect the half-power point.
    double lo = 0.0, hi = 2.0 / m_side;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double f = fejer_kernel(m_side, mid);
        (f * f > 0.5 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

BeamGrid build_grid(int m_side, double ell, double r_cov_m, const SystemParams& sys) {
    if (m_side < 2) throw ArgumentError("build_grid: M must be >= 2");
    if (!(ell > 0.0 && ell <= 1.0)) throw ArgumentError("build_grid: ell must be in (0, 1]");
    if (!(r_cov_m > 0.0)) throw ArgumentError("build_grid: coverage radius must be > 0");
    BeamGrid grid;
    grid.m_side = m_side;
    grid.ell = ell;
    const double m_ell = std::pow(static_cast<double>(m_side), ell);
    const double spacing = 2.0 / m_ell;
    const double footprint = sys.altitude_m / std::sqrt(m_ell * m_ell - 1.0);
    const int bound = static_cast<int>(std::ceil(0.5 * m_ell)) + 1;
    for (int n = -bound; n <= bound; ++n) {
        for (int m = -bound; m <= bound; ++m) {
            const double cx = n * spacing;
            const double cy = m * spacing;
            if (cx * cx + cy * cy >= 1.0) continue;
            const GroundPoint center = cosine_to_ground(cx, cy, sys.altitude_m);
            if (center.radius() > r_cov_m) continue;
            grid.beams.push_back({n, m, cx, cy, center, footprint});
        }
    }
    if (grid.beams.empty()) throw ConfigError("build_grid: no beams fit the coverage disk");
    std::sort(grid.beams.begin(), grid.beams.end(), [](const Beam& a, const Beam& b) {
        const long ra = static_cast<long>(a.index_n) * a.index_n + static_cast<long>(a.index_m) * a.index_m;
        const long rb = static_cast<long>(b.index_n) * b.index_n + static_cast<long>(b.index_m) * b.index_m;
        if (ra != rb) return ra < rb;
        if (a.index_n != b.index_n) return a.index_n < b.index_n;
        return a.index_m < b.index_m;
    });
    return grid;
}

void export_grid_csv(const BeamGrid& grid, std::ostream& out) {
    out.precision(17);
    out << "k,n,m,cos_x,cos_y,ground_x_m,ground_y_m,footprint_radius_m\n";
    for (std::size_t k = 0; k < grid.beams.size(); ++k) {
        const Beam& b = grid.beams[k];
        out << k + 1 << "," << b.index_n << "," << b.index_m << "," << b.cos_x << "," << b.cos_y
            << "," << b.ground_center.x_m << "," << b.ground_center.y_m << ","
            << b.footprint_radius_m << "\n";
    }
}

}  // namespace orbitbeam
