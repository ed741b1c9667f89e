// Copyright (c) 2026 The Orbitbeam Authors
// SPDX-License-Identifier: Apache-2.0
#include "orbitbeam/pointprocess.hpp"

#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

#include "orbitbeam/errors.hpp"

namespace orbitbeam {

namespace {
constexpr double kPi = 3.141592653589793238462643383279503;
constexpr double kTwoPi = 2.0 * kPi;
}  // namespace

UserDrop sample_ppp(double intensity, double region_radius_m, RandomStream& stream) {
    if (!(intensity > 0.0)) throw ArgumentError("sample_ppp: intensity must be > 0");
    if (!(region_radius_m > 0.0)) throw ArgumentError("sample_ppp: radius must be > 0");
    UserDrop drop;
    drop.intensity = intensity;
    drop.region_radius_m = region_radius_m;
    const double mean = intensity * kPi * region_radius_m * region_radius_m;
    const std::uint64_t n = stream.poisson(mean);
    drop.users.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        const double r = region_radius_m * std::sqrt(stream.uniform());
        const double phi = kTwoPi * stream.uniform();
        drop.users.push_back({r * std::cos(phi), r * std::sin(phi)});
    }
    return drop;
}

std::optional<NearestUser> nearest_user(const UserDrop& drop, const BeamFootprint& beam) {
    const double r2max = beam.radius_m * beam.radius_m;
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_idx = 0;
    bool found = false;
    for (std::size_t i = 0; i < drop.users.size(); ++i) {
        const double dx = drop.users[i].x_m - beam.center.x_m;
        const double dy = drop.users[i].y_m - beam.center.y_m;
        const double d2 = dx * dx + dy * dy;
        if (d2 <= r2max && d2 < best) {
            best = d2;
            best_idx = i;
            found = true;
        }
    }
    if (!found) return std::nullopt;
    return NearestUser{drop.users[best_idx], std::sqrt(best), best_idx};
}

double nearest_distance_band_prob(double intensity, double r_a, double r_b) {
    if (r_a < 0.0 || r_a > r_b) throw ArgumentError("nearest_distance_band_prob: need 0 <= R_a <= R_b");
    const double a = intensity * kPi;
    return std::exp(-a * r_a * r_a) - std::exp(-a * r_b * r_b);
}

double nearest_distance_pdf(double intensity, double r1_max, double r) {
    if (r < 0.0 || r > r1_max) return 0.0;
    const double a = intensity * kPi;
    return 2.0 * a * r * std::exp(-a * r * r) / (1.0 - std::exp(-a * r1_max * r1_max));
}

void save_drop(const UserDrop& drop, std::uint64_t seed, std::ostream& out) {
    out.precision(17);
    out << "# orbitbeam drop intensity=" << drop.intensity
        << " region_radius_m=" << drop.region_radius_m << " seed=" << seed << "\n";
    for (const auto& u : drop.users) out << u.x_m << " " << u.y_m << "\n";
}

UserDrop load_drop(std::istream& in) {
    UserDrop drop;
    std::string line;
    if (!std::getline(in, line) || line.rfind("# orbitbeam drop", 0) != 0)
        throw ConfigError("load_drop: missing header line");
    std::istringstream hdr(line);
    std::string tok;
    while (hdr >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = tok.substr(0, eq);
        const std::string val = tok.substr(eq + 1);
        if (key == "intensity") drop.intensity = std::stod(val);
        if (key == "region_radius_m") drop.region_radius_m = std::stod(val);
    }
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        GroundPoint p;
        if (!(ls >> p.x_m >> p.y_m)) throw ConfigError("load_drop: malformed point line");
        drop.users.push_back(p);
    }
    return drop;
}

}  // namespace orbitbeam
