// Copyright (c) 2026 The Orbitbeam Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

namespace orbitbeam::specfun {

enum class QuadratureKind { GaussLegendre, GaussLaguerre };

// Nodes strictly increasing, weights all positive. A Laguerre rule integrates
// against weight e^{-t} on [0, inf) (weights sum to 1); a Legendre rule on
// [a, b] has weights summing to b - a.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    QuadratureKind kind = QuadratureKind::GaussLegendre;
};

/// Confluent hypergeometric 1F1(a, b, x) by the ascending series with
/// compensated summation. Intended regime: x >= 0, b = 1, a in (0, 20].
double kummer_1f1(double a, double b, double x);

/// First-kind Bessel J_order(x) for order 1 or 3, x >= 0.
double bessel_j(int order, double x);

QuadratureRule gauss_laguerre(int n);

QuadratureRule gauss_legendre(int n, double a, double b);

}  // namespace orbitbeam::specfun
