#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <span>
#include <vector>

#include "born.hpp"
#include "core.hpp"
#include "propagator.hpp"
#include "quadrature.hpp"
#include "richardson.hpp"

/**
 * Numerical oracles for the closed forms. Everything here runs in imaginary
 * time. Rotation table (real time -> imaginary time):
 *
 *   t -> -i T,   d tau -> -i d theta,   psi0 -> heat kernel p0,
 *   -i d/dt -> +d/dT   (p0'' = d_T p0 replaces psi0'' = -i d_t psi0),
 *   f = -i \int psi0 g d tau   ->   f = -\int p0 g d theta.
 *
 * Under this table the layer jumps read [f^(k)] = 0 for even k and
 * [f^(k)] = (d/dT)^((k-1)/2) g(T) for odd k.
 */
namespace pointkernel {

namespace detail {

/// d^k/dy^k of the heat kernel (4 pi u)^{-1/2} exp(-y^2 / 4u), via Hermite polynomials.
inline double heat_kernel_dy(int k, double y, double u)
{
    const double root = 2.0 * std::sqrt(u);
    const double z = y / root;
    double h_prev = 1.0;
    double h = 2.0 * z;
    if (k == 0)
        h = 1.0;
    for (int n = 1; n < k; ++n) {
        const double next = 2.0 * z * h - 2.0 * n * h_prev;
        h_prev = h;
        h = next;
    }
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    return sign * h * std::exp(-z * z) / (std::sqrt(4.0 * std::numbers::pi * u) * std::pow(root, k));
}

} // namespace detail

/// Density of a layer potential together with its analytic time derivatives.
struct LayerDensity {
    std::function<double(double)> value;
    std::function<double(int, double)> derivative; // (order, t)
};

struct LayerJump {
    int order = 0;
    double plus = 0.0;  // extrapolated f^(k)(0+)
    double minus = 0.0; // extrapolated f^(k)(0-)
    double jump = 0.0;
    double expected = 0.0;
    double extrapolation_error = 0.0;
    bool passed = false;
};

struct LayerJumpReport {
    std::vector<LayerJump> jumps;
    bool passed = false;

    double max_error() const
    {
        double m = 0.0;
        for (const auto& j : jumps)
            m = std::max(m, std::abs(j.jump - j.expected));
        return m;
    }
};

/// f^(k)(y) = -\int_s^t d^k_y p0(y, t | 0, tau) g(tau) d tau at y != 0, integrated in u = t - tau.
inline double layer_potential_derivative(const LayerDensity& g, int k, double y, double t, double s)
{
    auto integrand = [&](double u) {
        if (!(u > 0.0))
            return 0.0;
        return -detail::heat_kernel_dy(k, y, u) * g.value(t - u);
    };
    const auto breaks = quadrature::geometric_breakpoints(t - s, y * y);
    return quadrature::integrate_panels(integrand, breaks, 1e-11).value;
}

/**
 * Checks the jump lemma of the single-layer potential for orders 0..k_max.
 * One-sided derivatives come from quadrature at y = +-eps and Richardson
 * extrapolation to eps -> 0.
 */
inline LayerJumpReport layer_jump_check(const LayerDensity& g, int k_max, double t, double s, double tol = 1e-6,
                                        const JumpProbe& probe = JumpProbe::defaults())
{
    detail::require_time_order(t, s);
    probe.validate();
    if (k_max < 0)
        throw Error(ErrorKind::InvalidArgument, "k_max must be >= 0");

    const auto& eps = probe.epsilon_ladder;
    LayerJumpReport report;
    report.passed = true;
    for (int k = 0; k <= k_max; ++k) {
        std::vector<double> plus, minus;
        for (double e : eps) {
            plus.push_back(layer_potential_derivative(g, k, e, t, s));
            minus.push_back(layer_potential_derivative(g, k, -e, t, s));
        }
        const auto lim_plus = richardson_limit(eps, plus, probe.richardson_order);
        const auto lim_minus = richardson_limit(eps, minus, probe.richardson_order);

        LayerJump j;
        j.order = k;
        j.plus = lim_plus.value;
        j.minus = lim_minus.value;
        j.jump = j.plus - j.minus;
        j.expected = (k % 2 == 0) ? 0.0 : g.derivative((k - 1) / 2, t);
        j.extrapolation_error = lim_plus.error + lim_minus.error;
        if (j.extrapolation_error > tol)
            throw Error(ErrorKind::ExtrapolationUnstable, "layer potential limit did not settle");
        j.passed = std::abs(j.jump - j.expected) <= tol;
        report.passed = report.passed && j.passed;
        report.jumps.push_back(j);
    }
    return report;
}

/**
 * Max over probes of |p - (p0 - c \int\int p0 delta' p)| for the closed-form
 * imaginary-time delta-prime propagator p. Averages at the origin are taken
 * from propagator_boundary_data.
 */
inline double integral_equation_residual(double c, std::span<const KernelProbe> probes,
                                         double abs_tol = quadrature::default_abs_tol)
{
    constexpr TimeAxis axis = TimeAxis::ImaginaryTime;
    double worst = 0.0;
    for (const auto& probe : probes) {
        detail::require_off_origin(probe.x, probe.y);
        detail::require_time_order(probe.t, probe.s);
        const double lhs = delta_prime_propagator(c, probe.y, probe.t, probe.x, probe.s, axis).real();
        auto averages = [&](double theta) { return propagator_boundary_data(c, theta, probe.x, probe.s, axis); };
        const double interaction = c == 0.0 ? 0.0 : detail::delta_prime_convolution(c, probe, averages, abs_tol);
        const double rhs = free_kernel(probe.y, probe.t, probe.x, probe.s, axis).real() - interaction;
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

/// Boundary data of the delta-prime propagator reconstructed by one-sided extrapolation.
struct ExtrapolatedBoundary {
    BoundaryData data;
    double error = 0.0; // largest extrapolation error estimate
};

/**
 * Values: psi(+-eps) -> psi(0+-). Derivatives: the difference quotient
 * (psi(+-2 eps) - psi(+-eps)) / (+-eps) -> psi'(0+-). Both are smooth in eps,
 * so the same Richardson table applies.
 */
inline ExtrapolatedBoundary extrapolate_boundary(double c, double t, double x, double s, TimeAxis axis,
                                                 const JumpProbe& probe = JumpProbe::defaults())
{
    probe.validate();
    const auto& eps = probe.epsilon_ladder;
    ExtrapolatedBoundary out;

    auto limit = [&](auto&& sample) -> complex {
        std::vector<double> re, im;
        for (double e : eps) {
            const complex v = sample(e);
            re.push_back(v.real());
            im.push_back(v.imag());
        }
        const auto lr = richardson_limit(eps, re, probe.richardson_order);
        const auto li = richardson_limit(eps, im, probe.richardson_order);
        out.error = std::max({out.error, lr.error, li.error});
        return {lr.value, li.value};
    };
    auto psi = [&](double y) { return delta_prime_propagator(c, y, t, x, s, axis); };

    out.data.value_plus = limit([&](double e) { return psi(e); });
    out.data.value_minus = limit([&](double e) { return psi(-e); });
    out.data.deriv_plus = limit([&](double e) { return (psi(2.0 * e) - psi(e)) / e; });
    out.data.deriv_minus = limit([&](double e) { return (psi(-2.0 * e) - psi(-e)) / (-e); });
    return out;
}

struct FdBoundaryReport {
    BoundaryData numeric;
    BoundaryData analytic;
    double mismatch = 0.0;            // max one-sided difference numeric vs analytic
    JumpAverageReport jump_average;   // on the numeric data, pi = (0, c, 0)
    double extrapolation_error = 0.0;
    bool passed = false;
};

inline FdBoundaryReport fd_boundary_check(double c, double t, double x, const JumpProbe& probe = JumpProbe::defaults(),
                                          double tol = 1e-8, TimeAxis axis = TimeAxis::ImaginaryTime)
{
    constexpr double s = 0.0;
    detail::require_time_order(t, s);
    if (x == 0.0)
        throw Error(ErrorKind::OnBoundary, "source point must be off the origin");

    FdBoundaryReport report;
    const auto numeric = extrapolate_boundary(c, t, x, s, axis, probe);
    if (numeric.error > tol)
        throw Error(ErrorKind::ExtrapolationUnstable, "one-sided limits did not settle");
    report.numeric = numeric.data;
    report.extrapolation_error = numeric.error;
    report.analytic = propagator_boundary_data(c, t, x, s, axis);
    report.mismatch = std::max({std::abs(report.numeric.value_plus - report.analytic.value_plus),
                                std::abs(report.numeric.value_minus - report.analytic.value_minus),
                                std::abs(report.numeric.deriv_plus - report.analytic.deriv_plus),
                                std::abs(report.numeric.deriv_minus - report.analytic.deriv_minus)});
    report.jump_average = check_jump_average(report.numeric, PointInteraction{0.0, complex{c, 0.0}, 0.0}, tol);
    report.passed = report.mismatch <= tol && report.jump_average.satisfied;
    return report;
}

} // namespace pointkernel
