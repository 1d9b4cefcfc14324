#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "error.hpp"

namespace pointkernel::quadrature {

/// Default absolute tolerance for all quadrature oracles.
inline constexpr double default_abs_tol = 1e-9;

struct Result {
    double value = 0.0;
    double error = 0.0;
};

/// Relative accuracy requested from the integrator, measured against the L1 norm.
inline constexpr double relative_floor = 1e-12;

/**
 * Adaptive 31-point Gauss-Kronrod on [a, b] (Boost.Math). Throws QuadratureFailure when the
 * estimated error exceeds both abs_tol and relative_floor * L1.
 */
template <typename F>
Result integrate(F&& f, double a, double b, double abs_tol = default_abs_tol)
{
    using boost::math::quadrature::gauss_kronrod;
    Result r;
    if (a == b)
        return r;
    // Boost reports error estimates on the unit interval, so integrate there and rescale.
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    auto unit = [&](double z) { return half * f(mid + half * z); };
    double l1 = 0.0;
    r.value = gauss_kronrod<double, 31>::integrate(unit, -1.0, 1.0, 15, relative_floor, &r.error, &l1);
    if (!std::isfinite(r.value) || r.error > std::max(abs_tol, relative_floor * l1))
        throw Error(ErrorKind::QuadratureFailure, "adaptive quadrature did not reach tolerance");
    return r;
}

/// Integrates over consecutive panels [b0, b1], [b1, b2], ... and sums the results.
template <typename F>
Result integrate_panels(F&& f, std::span<const double> breakpoints, double abs_tol = default_abs_tol)
{
    Result total;
    if (breakpoints.size() < 2)
        return total;
    const double per_panel = abs_tol / static_cast<double>(breakpoints.size() - 1);
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        const Result part = integrate(f, breakpoints[i], breakpoints[i + 1], per_panel);
        total.value += part.value;
        total.error += part.error;
    }
    return total;
}

/**
 * Panels on [0, length] for an integrand in an elapsed-time variable u that is
 * concentrated where u is comparable to `scale`: geometric breakpoints from
 * scale/1000 upwards. Below scale/1000 Gaussian factors exp(-scale/4u) are
 * negligible.
 */
inline std::vector<double> geometric_breakpoints(double length, double scale)
{
    std::vector<double> points{0.0};
    for (double u = scale / 1000.0; u < length; u *= 4.0)
        points.push_back(u);
    points.push_back(length);
    return points;
}

/// As geometric_breakpoints, resolving scale_low near 0 and scale_high near length.
inline std::vector<double> two_sided_breakpoints(double length, double scale_low, double scale_high)
{
    std::vector<double> all = geometric_breakpoints(length, scale_low);
    for (double b : geometric_breakpoints(length, scale_high))
        all.push_back(length - b);
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    all.front() = 0.0;
    all.back() = length;
    return all;
}

} // namespace pointkernel::quadrature
