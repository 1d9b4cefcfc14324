#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>

#include "core.hpp"

namespace pointkernel {

/// S = [[T+, R-], [R+, T-]] at wavenumber k (energy k^2).
struct ScatteringMatrix {
    double k = 1.0;
    complex t_plus{};
    complex t_minus{};
    complex r_plus{};
    complex r_minus{};

    /// max_ij |(S S^dagger - I)_ij|
    double unitarity_defect() const
    {
        const complex s11 = t_plus, s12 = r_minus, s21 = r_plus, s22 = t_minus;
        const complex d11 = std::norm(s11) + std::norm(s12) - 1.0;
        const complex d22 = std::norm(s21) + std::norm(s22) - 1.0;
        const complex d12 = s11 * std::conj(s21) + s12 * std::conj(s22);
        return std::max({std::abs(d11), std::abs(d22), std::abs(d12)});
    }
};

/// V = c delta^(n), n >= 1.
struct SuperSingularSpec {
    int n = 1;
    double c = 0.0;
};

enum class Incidence { FromLeft, FromRight };

namespace detail {

inline void require_wavenumber(double k)
{
    if (!(k > 0.0) || !std::isfinite(k))
        throw Error(ErrorKind::InvalidWavenumber, "wavenumber must be finite and positive");
}

/// Real value of i^m (m >= 0), exact.
constexpr int i_power_sign(int m) noexcept
{
    constexpr std::array<int, 4> table = {1, 0, -1, 0};
    return table[static_cast<std::size_t>(m % 4)];
}

inline double two_pow(int m) { return std::ldexp(1.0, m); }

/// (i sign k)^m with the power of i taken from the sign table.
inline complex imaginary_power(double k, int m)
{
    const double mag = std::pow(k, m);
    return {i_power_sign(m) * mag, i_power_sign(m + 3) * mag};
}

} // namespace detail

inline ScatteringMatrix scattering(const PointInteraction& pi, double k)
{
    detail::require_wavenumber(k);
    const double quarter_d = determinant(pi) / 4.0;
    const complex denom{1.0 + quarter_d, 0.5 * (pi.c1 / k - k * pi.c3)};
    const double reflect_im = -0.5 * (pi.c1 / k + k * pi.c3);

    ScatteringMatrix s;
    s.k = k;
    s.t_plus = complex{1.0 - quarter_d, pi.c2.imag()} / denom;
    s.t_minus = complex{1.0 - quarter_d, -pi.c2.imag()} / denom;
    s.r_plus = complex{-pi.c2.real(), reflect_im} / denom;
    s.r_minus = complex{pi.c2.real(), reflect_im} / denom;
    return s;
}

inline double transmission_probability(const PointInteraction& pi, double k)
{
    detail::require_wavenumber(k);
    const double q = 1.0 - determinant(pi) / 4.0;
    const double im = pi.c2.imag();
    const double e = pi.c1 / k + k * pi.c3;
    return (q * q + im * im) / (q * q + std::norm(pi.c2) + 0.25 * e * e);
}

struct StationarySolution {
    complex transmission{};
    complex reflection{};
    BoundaryData boundary;
};

/**
 * Imposes the jump-average conditions on the plane-wave ansatz and solves the
 * resulting 2x2 complex system for (T, R) directly.
 *
 * From the left:  e^{ikx} + R e^{-ikx} (x < 0),  T e^{ikx} (x > 0).
 * From the right: e^{-ikx} + R e^{ikx} (x > 0),  T e^{-ikx} (x < 0).
 */
inline StationarySolution solve_stationary(const PointInteraction& pi, double k, Incidence direction)
{
    detail::require_wavenumber(k);
    const complex ik{0.0, k};

    // Boundary data is affine in (T, R): bd = base + T * dT + R * dR.
    BoundaryData base, d_t, d_r;
    if (direction == Incidence::FromLeft) {
        base = {0.0, 1.0, 0.0, ik};
        d_t = {1.0, 0.0, ik, 0.0};
        d_r = {0.0, 1.0, 0.0, -ik};
    } else {
        base = {1.0, 0.0, -ik, 0.0};
        d_t = {0.0, 1.0, 0.0, -ik};
        d_r = {1.0, 0.0, ik, 0.0};
    }

    // Residual rows of the two conditions, linear in bd.
    auto rows = [&](const BoundaryData& bd) -> std::array<complex, 2> {
        const complex avg_u = bd.value_avg();
        const complex avg_du = bd.deriv_avg();
        return {bd.deriv_jump() - (pi.c1 * avg_u - std::conj(pi.c2) * avg_du),
                bd.value_jump() - (pi.c2 * avg_u + pi.c3 * avg_du)};
    };

    const auto r0 = rows(base);
    const auto rt = rows(d_t);
    const auto rr = rows(d_r);

    const complex det = rt[0] * rr[1] - rr[0] * rt[1];
    const double scale = std::max({std::abs(rt[0]) * std::abs(rr[1]), std::abs(rr[0]) * std::abs(rt[1]),
                                   std::numeric_limits<double>::min()});
    if (std::abs(det) <= 1e-14 * scale)
        throw Error(ErrorKind::SingularSystem, "stationary-state system is singular");

    StationarySolution sol;
    sol.transmission = (-r0[0] * rr[1] + rr[0] * r0[1]) / det;
    sol.reflection = (-rt[0] * r0[1] + r0[0] * rt[1]) / det;

    auto combine = [&](complex BoundaryData::*field) {
        return base.*field + sol.transmission * (d_t.*field) + sol.reflection * (d_r.*field);
    };
    sol.boundary.value_plus = combine(&BoundaryData::value_plus);
    sol.boundary.value_minus = combine(&BoundaryData::value_minus);
    sol.boundary.deriv_plus = combine(&BoundaryData::deriv_plus);
    sol.boundary.deriv_minus = combine(&BoundaryData::deriv_minus);
    return sol;
}

/**
 * Energy-dependent couplings of c delta^(n):
 *
 *   n even:  c1 = c 2^{n-1} (ik)^n,  c2 = 0,  c3 = -c 2^{n-1} (ik)^{n-2}
 *   n odd:   c1 = c3 = 0,            c2 = c (2ik)^{n-1}
 *
 * Powers of i are taken from an exact sign table so the results are real.
 */
inline PointInteraction super_singular_interaction(const SuperSingularSpec& spec, double k)
{
    if (spec.n < 1)
        throw Error(ErrorKind::InvalidOrder, "derivative order must be >= 1");
    detail::require_wavenumber(k);

    const int n = spec.n;
    const double prefactor = spec.c * detail::two_pow(n - 1);
    PointInteraction pi;
    if (n % 2 == 0) {
        pi.c1 = prefactor * detail::i_power_sign(n) * std::pow(k, n);
        pi.c3 = -prefactor * detail::i_power_sign(n - 2) * std::pow(k, n - 2);
    } else {
        pi.c2 = complex{prefactor * detail::i_power_sign(n - 1) * std::pow(k, n - 1), 0.0};
    }
    return pi;
}

struct GriffithsReport {
    bool satisfied = false;
    double deriv_residual = 0.0; // relative residual of [psi'] = c 2^{n-1} (-1)^n {psi^(n)}
    double value_residual = 0.0; // relative residual of [psi] = c 2^{n-1} (-1)^{n-1} {psi^(n-1)}
};

/**
 * Builds both stationary states for the energy-dependent couplings and checks
 * the higher-derivative form of the boundary conditions, using one-sided
 * derivatives of the plane waves computed in closed form.
 */
inline GriffithsReport check_griffiths_form(const SuperSingularSpec& spec, double k, double tol = 1e-10)
{
    const PointInteraction pi = super_singular_interaction(spec, k);
    const ScatteringMatrix s = scattering(pi, k);
    const int n = spec.n;
    const double weight = spec.c * detail::two_pow(n - 1);
    const double sign_n = (n % 2 == 0) ? 1.0 : -1.0;

    GriffithsReport report;
    for (Incidence dir : {Incidence::FromLeft, Incidence::FromRight}) {
        // m-th one-sided derivatives at 0 of the piecewise plane wave.
        auto side = [&](int m, bool plus) -> complex {
            const complex up = detail::imaginary_power(k, m);
            const complex down = detail::imaginary_power(-k, m);
            if (dir == Incidence::FromLeft)
                return plus ? s.t_plus * up : up + s.r_plus * down;
            return plus ? down + s.r_minus * up : s.t_minus * down;
        };
        auto jump = [&](int m) { return side(m, true) - side(m, false); };
        auto avg = [&](int m) { return 0.5 * (side(m, true) + side(m, false)); };

        const complex deriv_rhs = weight * sign_n * avg(n);
        const complex value_rhs = -weight * sign_n * avg(n - 1);
        const double deriv_scale = 1.0 + std::abs(jump(1)) + std::abs(deriv_rhs);
        const double value_scale = 1.0 + std::abs(jump(0)) + std::abs(value_rhs);
        report.deriv_residual = std::max(report.deriv_residual, std::abs(jump(1) - deriv_rhs) / deriv_scale);
        report.value_residual = std::max(report.value_residual, std::abs(jump(0) - value_rhs) / value_scale);
    }
    report.satisfied = report.deriv_residual <= tol && report.value_residual <= tol;
    return report;
}

} // namespace pointkernel
