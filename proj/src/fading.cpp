// Copyright (c) 2026 The Orbitbeam Authors
// SPDX-License-Identifier: Apache-2.0
#include "orbitbeam/fading.hpp"

#include <cmath>

#include "orbitbeam/errors.hpp"
#include "orbitbeam/specfun.hpp"

namespace orbitbeam {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

void ShadowedRicianParams::validate() const {
    if (!(omega >= 0.0) || !(b0 > 0.0) || !(m > 0.0))
        throw ArgumentError("ShadowedRicianParams: need omega >= 0, b0 > 0, m > 0");
}

double sr_pdf(const ShadowedRicianParams& p, double x) {
    if (x < 0.0) throw ArgumentError("sr_pdf: x must be >= 0");
    const double tb = 2.0 * p.b0;
    const double denom = tb * p.m + p.omega;
    const double pre = std::exp(p.m * std::log(tb * p.m / denom)) / tb;
    const double arg = p.omega * x / (tb * denom);
    return pre * std::exp(-x / tb) * specfun::kummer_1f1(p.m, 1.0, arg);
}

double sr_mgf(const ShadowedRicianParams& p, double s) {
    if (s < 0.0) throw ArgumentError("sr_mgf: s must be >= 0");
    const double tb = 2.0 * p.b0;
    const double u = 1.0 + tb * s;
    // (tb m)^m u^{m-1} / [(tb m + omega) u - omega]^m in log space; the m log
    // terms overflow double range near m ~ 20 and s ~ 1e12 otherwise.
    const double logv = p.m * std::log(tb * p.m) + (p.m - 1.0) * std::log(u) -
                        p.m * std::log((tb * p.m + p.omega) * u - p.omega);
    return std::exp(logv);
}

std::complex<double> sr_sample_complex(const ShadowedRicianParams& p, RandomStream& stream) {
    const double sb = std::sqrt(p.b0);
    const std::complex<double> scatter(sb * stream.normal(), sb * stream.normal());
    if (p.omega == 0.0) return scatter;
    const double los_amp = std::sqrt(stream.gamma(p.m, p.omega / p.m));
    const double psi = kTwoPi * stream.uniform();
    return scatter + los_amp * std::complex<double>(std::cos(psi), std::sin(psi));
}

double sr_sample(const ShadowedRicianParams& p, RandomStream& stream) {
    return std::norm(sr_sample_complex(p, stream));
}

}  // namespace orbitbeam
