// Copyright (c) 2026 The Orbitbeam Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>

#include "orbitbeam/rng.hpp"

namespace orbitbeam {

// Shadowed-Rician small-scale fading: circularly symmetric scatter with total
// power 2*b0 plus a line-of-sight component whose power is Gamma(m, omega/m)
// (Nakagami-m amplitude with mean power omega). Mean fading power is
// 2*b0 + omega.
struct ShadowedRicianParams {
    double omega = 0.835;
    double b0 = 0.126;
    double m = 10.1;

    double mean_power() const { return 2.0 * b0 + omega; }
    void validate() const;

    // The three standard land-mobile satellite scenarios.
    static ShadowedRicianParams frequent_heavy() { return {8.97e-4, 0.063, 0.739}; }
    static ShadowedRicianParams average() { return {0.835, 0.126, 10.1}; }
    static ShadowedRicianParams infrequent_light() { return {1.29, 0.158, 19.4}; }
};

/// Density of the fading power X = |g|^2 at x >= 0.
double sr_pdf(const ShadowedRicianParams& p, double x);

/// Laplace transform E[exp(-s X)], s >= 0; evaluated in log space.
double sr_mgf(const ShadowedRicianParams& p, double s);

/// One draw of the fading power X = |g|^2.
double sr_sample(const ShadowedRicianParams& p, RandomStream& stream);

/// One draw of the complex fading coefficient g (scatter + LoS with uniform
/// phase); |g|^2 follows sr_pdf.
std::complex<double> sr_sample_complex(const ShadowedRicianParams& p, RandomStream& stream);

}  // namespace orbitbeam
