// Copyright (c) 2026 The Orbitbeam Authors
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>
#include <doctest.h>
#include <sstream>

#include "orbitbeam/beams.hpp"
#include "orbitbeam/errors.hpp"
#include "orbitbeam/rng.hpp"
#include "oracle_values.hpp"

using namespace orbitbeam;

namespace {

std::complex<double> inner(const std::vector<std::complex<double>>& a,
                           const std::vector<std::complex<double>>& b) {
    std::complex<double> s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

}  // namespace

TEST_CASE("fejer_kernel basics") {
    for (int m : {1, 4, 16, 64, 256}) CHECK(fejer_kernel(m, 0.0) == 1.0);
    for (int m : {4, 16, 64}) CHECK(fejer_kernel(m, 2.0 / m) < 1e-14);
    CHECK(fejer_kernel(4, 0.25) == doctest::Approx(oracle::kFejer4_025).epsilon(1e-14));
    RandomStream rng(11);
    for (int i = 0; i < 200; ++i) {
        const double d = rng.uniform(-1.0, 1.0);
        CHECK(fejer_kernel(16, d) == doctest::Approx(fejer_kernel(16, d + 2.0)).epsilon(1e-12));
        CHECK(fejer_kernel(16, d) <= 1.0 + 1e-12);
    }
}

TEST_CASE("dirichlet_complex matches kernel magnitude and explicit sums") {
    CHECK(dirichlet_complex(8, 0.0) == std::complex<double>(1.0, 0.0));
    const auto d41 = dirichlet_complex(4, 0.1);
    CHECK(d41.real() == doctest::Approx(oracle::kDirichlet4_01_re).epsilon(1e-14));
    CHECK(d41.imag() == doctest::Approx(oracle::kDirichlet4_01_im).epsilon(1e-14));
    RandomStream rng(13);
    for (int i = 0; i < 200; ++i) {
        const double d = rng.uniform(-1.5, 1.5);
        CHECK(std::abs(dirichlet_complex(16, d)) ==
              doctest::Approx(fejer_kernel(16, d)).epsilon(1e-12));
        const auto conj_sym = dirichlet_complex(16, -d);
        CHECK(conj_sym.real() == doctest::Approx(dirichlet_complex(16, d).real()).epsilon(1e-12));
        CHECK(conj_sym.imag() == doctest::Approx(-dirichlet_complex(16, d).imag()).epsilon(1e-12));
    }
}

TEST_CASE("steering vectors reproduce the closed-form inner product") {
    const auto v0 = steering_vector(16, 0.0);
    for (const auto& e : v0) CHECK(std::abs(e - 0.25) < 1e-15);
    RandomStream rng(21);
    for (int i = 0; i < 100; ++i) {
        const double a = rng.uniform(-0.9, 0.9);
        const double b = rng.uniform(-0.9, 0.9);
        const auto va = steering_vector(16, a);
        const auto vb = steering_vector(16, b);
        CHECK(std::abs(inner(va, va) - 1.0) < 1e-13);
        const auto expect = dirichlet_complex(16, a - b);
        CHECK(std::abs(inner(va, vb) - expect) < 1e-12);
    }
    CHECK_THROWS_AS(steering_vector(65, 0.0), ArgumentError);
}

TEST_CASE("kernel-vs-vector equivalence for the planar array") {
    RandomStream rng(23);
    for (int m : {4, 8, 32}) {
        for (int i = 0; i < 20; ++i) {
            const double ux = rng.uniform(-0.5, 0.5), uy = rng.uniform(-0.5, 0.5);
            const double cx = rng.uniform(-0.5, 0.5), cy = rng.uniform(-0.5, 0.5);
            const auto vu = upa_steering_vector(m, ux, uy);
            const auto vc = upa_steering_vector(m, cx, cy);
            const double explicit_gain = std::norm(inner(vu, vc));
            CHECK(std::fabs(explicit_gain - phased_gain_cosines(m, ux, uy, cx, cy)) < 1e-10);
        }
    }
}

TEST_CASE("phased_gain landmark values") {
    SystemParams sys;
    const int m = 64;
    CHECK(phased_gain(m, {0.0, 0.0}, 0.0, 0.0, sys) == 1.0);
    // First null: sin(theta) = 2/M on the x axis.
    const double s_null = 2.0 / m;
    const double r_null = sys.altitude_m * s_null / std::sqrt(1.0 - s_null * s_null);
    CHECK(phased_gain(m, {r_null, 0.0}, 0.0, 0.0, sys) < 1e-20);
    // Half-null offset at large M approaches (2/pi)^2.
    const int big = 256;
    const double s_half = 1.0 / big;
    const double r_half = sys.altitude_m * s_half / std::sqrt(1.0 - s_half * s_half);
    CHECK(phased_gain(big, {r_half, 0.0}, 0.0, 0.0, sys) ==
          doctest::Approx(4.0 / (3.141592653589793 * 3.141592653589793)).epsilon(2e-4));
}

TEST_CASE("phased_gain symmetries at the nadir beam") {
    SystemParams sys;
    RandomStream rng(29);
    for (int i = 0; i < 100; ++i) {
        const GroundPoint p{rng.uniform(-1e6, 1e6), rng.uniform(-1e6, 1e6)};
        const double g = phased_gain(32, p, 0.0, 0.0, sys);
        CHECK(g == doctest::Approx(phased_gain(32, {-p.x_m, -p.y_m}, 0.0, 0.0, sys)).epsilon(1e-12));
        CHECK(g == doctest::Approx(phased_gain(32, {p.y_m, p.x_m}, 0.0, 0.0, sys)).epsilon(1e-12));
        CHECK(g >= 0.0);
        CHECK(g <= 1.0 + 1e-12);
    }
}

TEST_CASE("build_grid layout") {
    SystemParams sys;
    const auto grid = build_grid(8, 1.0, 1.5e7, sys);
    CHECK(grid.beams.size() == 9);  // |n|,|m| <= 1 ring fits, (2,0) ring does not
    CHECK(grid.nadir().index_n == 0);
    CHECK(grid.nadir().index_m == 0);
    for (const auto& b : grid.beams) {
        CHECK(b.cos_x == doctest::Approx(b.index_n * 0.25).epsilon(1e-15));
        CHECK(b.cos_y == doctest::Approx(b.index_m * 0.25).epsilon(1e-15));
        CHECK(b.cos_x * b.cos_x + b.cos_y * b.cos_y < 1.0);
        CHECK(b.ground_center.radius() <= 1.5e7);
        CHECK(b.footprint_radius_m ==
              doctest::Approx(sys.altitude_m / std::sqrt(64.0 - 1.0)).epsilon(1e-14));
    }
    // Ground center of beam (1,0): H s / sqrt(1 - s^2) with s = 0.25.
    for (const auto& b : grid.beams) {
        if (b.index_n == 1 && b.index_m == 0) {
            const double expect = sys.altitude_m * 0.25 / std::sqrt(1.0 - 0.0625);
            CHECK(b.ground_center.x_m == doctest::Approx(expect).epsilon(1e-14));
            CHECK(b.ground_center.y_m == 0.0);
        }
    }
}

TEST_CASE("build_grid: smaller ell never increases the beam count") {
    SystemParams sys;
    const double r_cov = 2.0e7;
    std::size_t prev = build_grid(8, 1.0, r_cov, sys).size();
    for (double ell : {0.9, 0.8, 0.7, 0.6, 0.5}) {
        const std::size_t k = build_grid(8, ell, r_cov, sys).size();
        CHECK(k <= prev);
        prev = k;
    }
}

TEST_CASE("build_grid argument and configuration errors") {
    SystemParams sys;
    CHECK_THROWS_AS(build_grid(1, 1.0, 1e6, sys), ArgumentError);
    CHECK_THROWS_AS(build_grid(8, 0.0, 1e6, sys), ArgumentError);
    CHECK_THROWS_AS(build_grid(8, 1.2, 1e6, sys), ArgumentError);
    CHECK_THROWS_AS(build_grid(8, 1.0, -1.0, sys), ArgumentError);
}

TEST_CASE("grid-null property at ell = 1") {
    SystemParams sys;
    for (int m : {8, 16}) {
        const auto grid = build_grid(m, 1.0, 3.0e7, sys);
        REQUIRE(grid.size() > 1);
        for (std::size_t k = 1; k < grid.size(); ++k) {
            const double g =
                phased_gain(m, grid.beams[k].ground_center, 0.0, 0.0, sys);
            CHECK(g < 1e-20);
        }
    }
}

TEST_CASE("reflector_gain pattern") {
    SystemParams sys;
    const double theta3db = std::asin(phased_3db_sine(64));
    CHECK(reflector_gain(0.0, 0.0, theta3db, sys) == doctest::Approx(1.0).epsilon(1e-12));
    // At the matched 3 dB radius the gain is one half (the 2.07123 constant).
    const double s3 = phased_3db_sine(64);
    const double r3 = sys.altitude_m * s3 / std::sqrt(1.0 - s3 * s3);
    CHECK(reflector_gain(r3, 0.0, theta3db, sys) ==
          doctest::Approx(oracle::kReflectorAtU3db).epsilon(1e-9));
    CHECK(phased_3db_sine(64) == doctest::Approx(oracle::kS3dbM64).epsilon(1e-12));

    // Monotone decreasing over the main lobe.
    double prev = 1.1;
    for (double r = 0.0; r <= r3 * 1.5; r += r3 / 50.0) {
        const double g = reflector_gain(r, 0.0, theta3db, sys);
        CHECK(g < prev + 1e-12);
        prev = g;
    }

    // Local minimum ~0 at the first zero of the combined pattern.
    const double sin3 = std::sin(theta3db);
    const double s_zero = oracle::kReflectorFirstZeroU / 2.07123 * sin3;
    const double r_zero = sys.altitude_m * s_zero / std::sqrt(1.0 - s_zero * s_zero);
    double min_gain = 1.0;
    for (double r = 0.9 * r_zero; r <= 1.1 * r_zero; r += r_zero / 2000.0)
        min_gain = std::min(min_gain, reflector_gain(r, 0.0, theta3db, sys));
    CHECK(min_gain < 1e-9);
    CHECK_THROWS_AS(reflector_gain(-1.0, 0.0, theta3db, sys), ArgumentError);
}

TEST_CASE("phased and reflector main lobes agree in 3 dB radius (matched default)") {
    SystemParams sys;
    const int m = 64;
    const double s3 = phased_3db_sine(m);
    const double theta3db = std::asin(s3);
    const double r3_phased = sys.altitude_m * s3 / std::sqrt(1.0 - s3 * s3);
    // Scan the reflector pattern for its half-power radius.
    double r3_refl = 0.0;
    for (double r = 0.0; r < 5.0 * r3_phased; r += r3_phased / 400.0) {
        if (reflector_gain(r, 0.0, theta3db, sys) < 0.5) {
            r3_refl = r;
            break;
        }
    }
    CHECK(std::fabs(r3_refl - r3_phased) / r3_phased < 0.25);
}

TEST_CASE("grid CSV export") {
    SystemParams sys;
    const auto grid = build_grid(8, 1.0, 1.5e7, sys);
    std::ostringstream out;
    export_grid_csv(grid, out);
    const std::string text = out.str();
    CHECK(text.rfind("k,n,m,cos_x,cos_y,ground_x_m,ground_y_m,footprint_radius_m\n", 0) == 0);
    std::size_t lines = 0;
    for (char c : text)
        if (c == '\n') ++lines;
    CHECK(lines == grid.size() + 1);
}
