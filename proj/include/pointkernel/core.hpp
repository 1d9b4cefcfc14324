#pragma once

#include <cmath>
#include <complex>

#include "error.hpp"

namespace pointkernel {

using complex = std::complex<double>;

/**
 * A point interaction at the origin, given by the jump-average coupling triple.
 *
 *   [u']  =  c1 {u} - conj(c2) {u'}
 *   [u]   =  c2 {u} + c3 {u'}
 *
 * where [.] is the jump u(0+) - u(0-) and {.} the average of the one-sided
 * limits. c1 and c3 are even under parity, c2 is odd.
 */
struct PointInteraction {
    double c1 = 0.0;
    complex c2{0.0, 0.0};
    double c3 = 0.0;

    friend bool operator==(const PointInteraction&, const PointInteraction&) = default;
};

/// One-sided values and derivatives at the origin.
struct BoundaryData {
    complex value_plus{};
    complex value_minus{};
    complex deriv_plus{};
    complex deriv_minus{};

    complex value_jump() const { return value_plus - value_minus; }
    complex value_avg() const { return 0.5 * (value_plus + value_minus); }
    complex deriv_jump() const { return deriv_plus - deriv_minus; }
    complex deriv_avg() const { return 0.5 * (deriv_plus + deriv_minus); }

    BoundaryData scaled(complex factor) const
    {
        return {factor * value_plus, factor * value_minus, factor * deriv_plus, factor * deriv_minus};
    }
};

/// Kurasov's (X1, X2, X3, X4) parameterization of the same operator family.
struct KurasovParams {
    double x1 = 0.0;
    double x2 = 0.0;
    double x3 = 0.0;
    double x4 = 0.0;

    friend bool operator==(const KurasovParams&, const KurasovParams&) = default;
};

/// D = c1 c3 + |c2|^2. Real by construction and even under parity.
inline double determinant(const PointInteraction& pi) noexcept
{
    return pi.c1 * pi.c3 + std::norm(pi.c2);
}

inline PointInteraction parity(const PointInteraction& pi) noexcept
{
    return {pi.c1, -pi.c2, pi.c3};
}

inline PointInteraction from_kurasov(const KurasovParams& x) noexcept
{
    return {x.x1, complex{x.x2, x.x3}, -x.x4};
}

inline KurasovParams to_kurasov(const PointInteraction& pi) noexcept
{
    return {pi.c1, pi.c2.real(), pi.c2.imag(), -pi.c3};
}

struct JumpAverageReport {
    bool satisfied = false;
    double deriv_residual = 0.0; // |[u'] - (c1{u} - conj(c2){u'})|
    double value_residual = 0.0; // |[u] - (c2{u} + c3{u'})|

    double max_residual() const { return std::fmax(deriv_residual, value_residual); }
};

/// Residuals are absolute; normalize bd first if a relative test is wanted.
inline JumpAverageReport check_jump_average(const BoundaryData& bd, const PointInteraction& pi, double tol)
{
    if (!(tol > 0.0))
        throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");

    const complex avg_u = bd.value_avg();
    const complex avg_du = bd.deriv_avg();

    JumpAverageReport report;
    report.deriv_residual = std::abs(bd.deriv_jump() - (pi.c1 * avg_u - std::conj(pi.c2) * avg_du));
    report.value_residual = std::abs(bd.value_jump() - (pi.c2 * avg_u + pi.c3 * avg_du));
    report.satisfied = report.deriv_residual <= tol && report.value_residual <= tol;
    return report;
}

} // namespace pointkernel
