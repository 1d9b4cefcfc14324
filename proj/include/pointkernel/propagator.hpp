#pragma once

#include <cmath>
#include <numbers>

#include "core.hpp"

namespace pointkernel {

/// Units: hbar = 1, m = 1/2.
enum class TimeAxis { RealTime, ImaginaryTime };

struct SpaceTimePoint {
    double position = 0.0;
    double time = 0.0;
};

namespace detail {

inline void require_time_order(double t, double s)
{
    if (!(t > s))
        throw Error(ErrorKind::InvalidTimeOrder, "propagators require t > s");
}

/// 4 (t-s) on the imaginary axis, 4 i (t-s) on the real axis.
inline complex kernel_width(double elapsed, TimeAxis axis)
{
    return axis == TimeAxis::RealTime ? complex{0.0, 4.0 * elapsed} : complex{4.0 * elapsed, 0.0};
}

inline void require_off_origin(double x, double y)
{
    if (x == 0.0 || y == 0.0)
        throw Error(ErrorKind::OnBoundary, "x and y must be nonzero; use propagator_boundary_data at the origin");
}

} // namespace detail

/// Free kernel at separation d = y - x after elapsed time (t - s) > 0.
inline complex free_kernel_elapsed(double d, double elapsed, TimeAxis axis)
{
    if (axis == TimeAxis::ImaginaryTime)
        return {std::exp(-d * d / (4.0 * elapsed)) / std::sqrt(4.0 * std::numbers::pi * elapsed), 0.0};
    const complex width = detail::kernel_width(elapsed, axis);
    return std::exp(-d * d / width) / std::sqrt(std::numbers::pi * width);
}

/// d/dy of free_kernel_elapsed, d = y - x.
inline complex free_kernel_elapsed_dy(double d, double elapsed, TimeAxis axis)
{
    return -2.0 * d / detail::kernel_width(elapsed, axis) * free_kernel_elapsed(d, elapsed, axis);
}

/**
 * Free kernel, real time:  (4 pi i (t-s))^{-1/2} exp(-(y-x)^2 / (4 i (t-s))),
 * principal square root. Imaginary time gives the heat kernel
 * (4 pi (t-s))^{-1/2} exp(-(y-x)^2 / (4 (t-s))).
 */
inline complex free_kernel(double y, double t, double x, double s, TimeAxis axis)
{
    detail::require_time_order(t, s);
    return free_kernel_elapsed(y - x, t - s, axis);
}

/**
 * Quadrant coefficients of the delta-prime propagator. They depend on the
 * coupling only:
 *
 *   x>0, y>0:  psi0(y|x) + mirror * psi0(y|-x)
 *   x<0, y<0:  psi0(y|x) - mirror * psi0(y|-x)
 *   opposite:  (1 + cross) psi0(y|x)
 */
struct DeltaPrimeCoefficients {
    double mirror = 0.0; // 4c / (4 + c^2)
    double cross = 0.0;  // -2c^2 / (4 + c^2)
};

inline DeltaPrimeCoefficients delta_prime_coefficients(double c) noexcept
{
    const double denom = 4.0 + c * c;
    return {4.0 * c / denom, -2.0 * c * c / denom};
}

inline complex delta_prime_propagator(double c, double y, double t, double x, double s, TimeAxis axis)
{
    detail::require_time_order(t, s);
    detail::require_off_origin(x, y);
    const auto coeff = delta_prime_coefficients(c);
    const complex direct = free_kernel(y, t, x, s, axis);
    if ((x > 0.0) != (y > 0.0))
        return direct + coeff.cross * direct;
    const double sign = x > 0.0 ? 1.0 : -1.0;
    return direct + sign * coeff.mirror * free_kernel(y, t, -x, s, axis);
}

/// d/dy of the free kernel.
inline complex free_kernel_dy(double y, double t, double x, double s, TimeAxis axis)
{
    detail::require_time_order(t, s);
    return free_kernel_elapsed_dy(y - x, t - s, axis);
}

/// One-sided limits y -> 0+- of the delta-prime propagator and its y-derivative.
inline BoundaryData propagator_boundary_data(double c, double t, double x, double s, TimeAxis axis)
{
    detail::require_time_order(t, s);
    if (x == 0.0)
        throw Error(ErrorKind::OnBoundary, "source point must be off the origin");

    const auto coeff = delta_prime_coefficients(c);
    // Both the direct and mirror kernels equal g at y = 0; their slopes are +-slope.
    const complex g = free_kernel(0.0, t, x, s, axis);
    const complex slope = free_kernel_dy(0.0, t, x, s, axis);

    BoundaryData bd;
    if (x > 0.0) {
        bd.value_plus = (1.0 + coeff.mirror) * g;
        bd.deriv_plus = (1.0 - coeff.mirror) * slope;
        bd.value_minus = (1.0 + coeff.cross) * g;
        bd.deriv_minus = (1.0 + coeff.cross) * slope;
    } else {
        bd.value_minus = (1.0 - coeff.mirror) * g;
        bd.deriv_minus = (1.0 + coeff.mirror) * slope;
        bd.value_plus = (1.0 + coeff.cross) * g;
        bd.deriv_plus = (1.0 + coeff.cross) * slope;
    }
    return bd;
}

} // namespace pointkernel
