// Copyright (c) 2026 The Orbitbeam Authors
// SPDX-License-Identifier: Apache-2.0
#include "orbitbeam/specfun.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>

#include "orbitbeam/errors.hpp"

namespace orbitbeam::specfun {

namespace {

constexpr double kPi = 3.141592653589793238462643383279503;

// J_nu by the ascending power series; adequate for x <= 12 where the largest
// term stays ~4e3 and cancellation costs at most ~5 digits.
double bessel_series(int nu, double x) {
    const double half = 0.5 * x;
    // t_0 = (x/2)^nu / nu!
    double term = 1.0;
    for (int k = 1; k <= nu; ++k) term *= half / k;
    double sum = term;
    double comp = 0.0;
    const double x2 = -half * half;
    for (int k = 1; k <= 200; ++k) {
        term *= x2 / (static_cast<double>(k) * (k + nu));
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (std::fabs(term) < 1e-18 * (std::fabs(sum) + 1e-30)) break;
    }
    return sum;
}

// Hankel asymptotic expansion, truncated at the smallest term. At the x = 12
// crossover the optimal truncation error is ~1e-12.
//   t_j = t_{j-1} * (mu - (2j-1)^2) / (j * 8x),  mu = 4 nu^2
//   P = 1 - t_2 + t_4 - ...,  Q = t_1 - t_3 + t_5 - ...
double bessel_asymptotic(int nu, double x) {
    const double mu = 4.0 * nu * nu;
    const double ax8 = 8.0 * x;
    double p = 1.0, q = 0.0;
    double term = 1.0;
    double prev_mag = std::numeric_limits<double>::max();
    for (int j = 1; j < 80; ++j) {
        const double odd = 2.0 * j - 1.0;
        term *= (mu - odd * odd) / (j * ax8);
        const double mag = std::fabs(term);
        if (mag >= prev_mag) break;
        prev_mag = mag;
        if (j % 2 == 1) {
            q += ((j % 4 == 1) ? term : -term);
        } else {
            p += ((j % 4 == 0) ? term : -term);
        }
        if (mag < 1e-19) break;
    }
    const double chi = x - (0.5 * nu + 0.25) * kPi;
    return std::sqrt(2.0 / (kPi * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

double bessel_j01(int nu, double x) {
    return (x < 12.0) ? bessel_series(nu, x) : bessel_asymptotic(nu, x);
}

void check_rule(const QuadratureRule& rule, double weight_sum, const char* name) {
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        if (rule.weights[i] <= 0.0) throw NumericFailure(std::string(name) + ": nonpositive weight", rule.weights);
        if (i > 0 && rule.nodes[i] <= rule.nodes[i - 1])
            throw NumericFailure(std::string(name) + ": nodes not increasing", rule.nodes);
        sum += rule.weights[i];
    }
    if (std::fabs(sum - weight_sum) > 1e-12 * std::fabs(weight_sum))
        throw NumericFailure(std::string(name) + ": weight sum off", {sum, weight_sum});
}

}  // namespace

double kummer_1f1(double a, double b, double x) {
    if (b <= 0.0 && b == std::floor(b))
        throw ArgumentError("kummer_1f1: b must not be a non-positive integer");
    if (x < 0.0) throw ArgumentError("kummer_1f1: x must be >= 0");
    double term = 1.0;
    double sum = 1.0;
    double comp = 0.0;
    for (int k = 0; k < 1000; ++k) {
        term *= (a + k) * x / ((b + k) * (k + 1));
        const double y = term - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (std::fabs(term) < 1e-15 * std::fabs(sum)) return sum;
    }
    throw NumericFailure("kummer_1f1: series did not converge in 1000 terms", {sum});
}

double bessel_j(int order, double x) {
    if (order != 1 && order != 3) throw ArgumentError("bessel_j: order must be 1 or 3");
    if (x < 0.0) throw ArgumentError("bessel_j: x must be >= 0");
    if (order == 1) return bessel_j01(1, x);
    if (x < 12.0) return bessel_series(3, x);
    // Upward recurrence from J0, J1; stable here since order < x.
    const double j0 = bessel_j01(0, x);
    const double j1 = bessel_j01(1, x);
    const double j2 = 2.0 / x * j1 - j0;
    return 4.0 / x * j2 - j1;
}

QuadratureRule gauss_laguerre(int n) {
    if (n < 1 || n > 128) throw ArgumentError("gauss_laguerre: n must be in [1, 128]");
    QuadratureRule rule;
    rule.kind = QuadratureKind::GaussLaguerre;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    // Laguerre recurrence in long double; magnitudes reach ~1e300 at n = 128.
    auto eval = [n](long double z, long double& ln, long double& lnm1) {
        long double l0 = 1.0L, l1 = 1.0L - z;
        for (int k = 1; k < n; ++k) {
            long double l2 = ((2 * k + 1 - z) * l1 - k * l0) / (k + 1);
            l0 = l1;
            l1 = l2;
        }
        ln = l1;
        lnm1 = l0;
    };
    long double z = 0.0L;
    for (int i = 0; i < n; ++i) {
        if (i == 0) {
            z = 3.0L / (1.0L + 2.4L * n);
        } else if (i == 1) {
            z += 15.0L / (1.0L + 2.5L * n);
        } else {
            const long double ai = i - 1;
            z += ((1.0L + 2.55L * ai) / (1.9L * ai)) * (z - rule.nodes[i - 2]);
        }
        long double ln = 0.0L, lnm1 = 0.0L;
        for (int it = 0; it < 100; ++it) {
            eval(z, ln, lnm1);
            const long double deriv = n * (ln - lnm1) / z;
            const long double dz = ln / deriv;
            z -= dz;
            if (std::fabs(static_cast<double>(dz)) < 1e-15 * static_cast<double>(z) + 1e-300) break;
        }
        eval(z, ln, lnm1);
        // w = z / ((n+1)^2 L_{n+1}(z)^2), with L_{n+1} from one more recurrence step.
        const long double lnp1 = ((2 * n + 1 - z) * ln - n * lnm1) / (n + 1);
        const long double w = z / ((n + 1.0L) * (n + 1.0L) * lnp1 * lnp1);
        rule.nodes[i] = static_cast<double>(z);
        rule.weights[i] = static_cast<double>(w);
    }
    check_rule(rule, 1.0, "gauss_laguerre");
    return rule;
}

QuadratureRule gauss_legendre(int n, double a, double b) {
    if (n < 1 || n > 256) throw ArgumentError("gauss_legendre: n must be in [1, 256]");
    if (!(a < b)) throw ArgumentError("gauss_legendre: need a < b");
    QuadratureRule rule;
    rule.kind = QuadratureKind::GaussLegendre;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int m = (n + 1) / 2;
    const double xm = 0.5 * (b + a);
    const double xl = 0.5 * (b - a);
    for (int i = 0; i < m; ++i) {
        double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int k = 0; k < n; ++k) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * k + 1.0) * z * p1 - k * p2) / (k + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / pp;
            z -= dz;
            if (std::fabs(dz) < 1e-15) break;
        }
        rule.nodes[i] = xm - xl * z;
        rule.nodes[n - 1 - i] = xm + xl * z;
        const double w = 2.0 * xl / ((1.0 - z * z) * pp * pp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    check_rule(rule, b - a, "gauss_legendre");
    return rule;
}

}  // namespace orbitbeam::specfun
