#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "propagator.hpp"
#include "quadrature.hpp"

namespace pointkernel {

/// Quadrants in the order (sign x, sign y) = (+,+), (+,-), (-,+), (-,-).
enum class Quadrant { PlusPlus = 0, PlusMinus = 1, MinusPlus = 2, MinusMinus = 3 };

inline constexpr Quadrant quadrant_of(double x, double y) noexcept
{
    if (x > 0.0)
        return y > 0.0 ? Quadrant::PlusPlus : Quadrant::PlusMinus;
    return y > 0.0 ? Quadrant::MinusPlus : Quadrant::MinusMinus;
}

/**
 * A kernel combination resolved by quadrant: in quadrant q the function is
 * direct[q] * psi0(y,t|x,s) + mirror[q] * psi0(y,t|-x,s).
 */
struct QuadrantKernelState {
    std::array<double, 4> direct{};
    std::array<double, 4> mirror{};

    static QuadrantKernelState free()
    {
        return {{1.0, 1.0, 1.0, 1.0}, {0.0, 0.0, 0.0, 0.0}};
    }

    double direct_at(Quadrant q) const { return direct[static_cast<std::size_t>(q)]; }
    double mirror_at(Quadrant q) const { return mirror[static_cast<std::size_t>(q)]; }

    bool pure_direct() const
    {
        return std::all_of(mirror.begin(), mirror.end(), [](double v) { return v == 0.0; });
    }
    bool pure_mirror() const
    {
        return std::all_of(direct.begin(), direct.end(), [](double v) { return v == 0.0; });
    }

    double max_abs() const
    {
        double m = 0.0;
        for (std::size_t i = 0; i < 4; ++i)
            m = std::max({m, std::abs(direct[i]), std::abs(mirror[i])});
        return m;
    }

    /// Largest coefficient difference.
    double distance(const QuadrantKernelState& other) const
    {
        double m = 0.0;
        for (std::size_t i = 0; i < 4; ++i)
            m = std::max({m, std::abs(direct[i] - other.direct[i]), std::abs(mirror[i] - other.mirror[i])});
        return m;
    }

    QuadrantKernelState& operator+=(const QuadrantKernelState& rhs)
    {
        for (std::size_t i = 0; i < 4; ++i) {
            direct[i] += rhs.direct[i];
            mirror[i] += rhs.mirror[i];
        }
        return *this;
    }

    friend QuadrantKernelState operator*(double a, QuadrantKernelState s)
    {
        for (std::size_t i = 0; i < 4; ++i) {
            s.direct[i] *= a;
            s.mirror[i] *= a;
        }
        return s;
    }

    /// Evaluates the combination at a point off the axes.
    complex evaluate(double y, double t, double x, double s, TimeAxis axis) const
    {
        detail::require_off_origin(x, y);
        const Quadrant q = quadrant_of(x, y);
        complex out{};
        if (direct_at(q) != 0.0)
            out += direct_at(q) * free_kernel(y, t, x, s, axis);
        if (mirror_at(q) != 0.0)
            out += mirror_at(q) * free_kernel(y, t, -x, s, axis);
        return out;
    }

    /// One-sided limits at the origin (in y) for a source at x.
    BoundaryData boundary_data(double t, double x, double s, TimeAxis axis) const
    {
        detail::require_time_order(t, s);
        const complex g = free_kernel(0.0, t, x, s, axis);
        const complex slope = free_kernel_dy(0.0, t, x, s, axis);
        const Quadrant up = quadrant_of(x, 1.0);
        const Quadrant down = quadrant_of(x, -1.0);
        BoundaryData bd;
        bd.value_plus = (direct_at(up) + mirror_at(up)) * g;
        bd.deriv_plus = (direct_at(up) - mirror_at(up)) * slope;
        bd.value_minus = (direct_at(down) + mirror_at(down)) * g;
        bd.deriv_minus = (direct_at(down) - mirror_at(down)) * slope;
        return bd;
    }

    friend bool operator==(const QuadrantKernelState&, const QuadrantKernelState&) = default;
};

/// The closed-form delta-prime propagator as a quadrant state.
inline QuadrantKernelState delta_prime_state(double c)
{
    const auto coeff = delta_prime_coefficients(c);
    return {{1.0, 1.0 + coeff.cross, 1.0 + coeff.cross, 1.0}, {coeff.mirror, 0.0, 0.0, -coeff.mirror}};
}

using BornMatrix = std::array<std::array<double, 8>, 8>;

/**
 * One Born step  psi_i = c i \int d tau \int d alpha psi0 delta' psi_{i-1}  as a
 * linear map on (direct[0..3], mirror[0..3]).
 *
 * Collapsing the alpha integral with \int delta' u = -{u'(0)} leaves two time
 * convolutions of kernels pinned at the origin, and both reduce to half of
 * psi0(|y| + |x|) times sign(y) resp. sign(x). With sigma, delta the averages of
 * (direct + mirror) and (direct - mirror) over the two y-sides of a source x,
 *
 *   psi_i(x, y) = -(c/2) (sigma sign(y) + delta sign(x)) psi0(|y| + |x|),
 *
 * which lands in the mirror slot for same-side quadrants and in the direct slot
 * otherwise. The same coefficients hold on both time axes.
 */
inline BornMatrix born_step_matrix(double c)
{
    BornMatrix m{};
    const double h = 0.5 * c;
    constexpr std::size_t D = 0, M = 4;
    constexpr std::size_t pp = 0, pm = 1, mp = 2, mm = 3;

    m[M + pp][D + pp] = -h;
    m[M + pp][D + pm] = -h;
    m[D + pm][M + pp] = h;
    m[D + pm][M + pm] = h;
    m[D + mp][M + mp] = -h;
    m[D + mp][M + mm] = -h;
    m[M + mm][D + mp] = h;
    m[M + mm][D + mm] = h;
    return m;
}

inline QuadrantKernelState born_step(const QuadrantKernelState& prev, double c)
{
    if (!prev.pure_direct() && !prev.pure_mirror())
        throw Error(ErrorKind::AlternationViolated, "Born term mixes direct and mirror kernels");

    const BornMatrix m = born_step_matrix(c);
    std::array<double, 8> in{};
    std::copy(prev.direct.begin(), prev.direct.end(), in.begin());
    std::copy(prev.mirror.begin(), prev.mirror.end(), in.begin() + 4);

    QuadrantKernelState next;
    for (std::size_t row = 0; row < 8; ++row) {
        double acc = 0.0;
        for (std::size_t col = 0; col < 8; ++col)
            acc += m[row][col] * in[col];
        (row < 4 ? next.direct[row] : next.mirror[row - 4]) = acc;
    }
    return next;
}

struct BornSeries {
    double coupling = 0.0;
    std::vector<QuadrantKernelState> terms; // psi_1, psi_2, ...
    QuadrantKernelState partial_sum;        // psi_0 + sum (-1)^i psi_i
    double ratio = 0.0;                     // |c|/2
    bool converges = false;                 // ratio < 1
    double error = 0.0;                     // partial_sum vs closed form
};

/// Each term is built from the completed previous term; no reordering of integrals.
inline BornSeries born_series(double c, int n_terms)
{
    if (n_terms < 0)
        throw Error(ErrorKind::InvalidArgument, "number of terms must be >= 0");

    BornSeries series;
    series.coupling = c;
    series.partial_sum = QuadrantKernelState::free();
    QuadrantKernelState term = QuadrantKernelState::free();
    double sign = 1.0;
    for (int i = 1; i <= n_terms; ++i) {
        term = born_step(term, c);
        sign = -sign;
        series.partial_sum += sign * term;
        series.terms.push_back(term);
    }
    series.ratio = std::abs(c) / 2.0;
    series.converges = series.ratio < 1.0;
    series.error = series.partial_sum.distance(delta_prime_state(c));
    return series;
}

inline QuadrantKernelState born_partial_sum(double c, int n_terms)
{
    return born_series(c, n_terms).partial_sum;
}

/// A point (y, T) receiving from a source (x, S).
struct KernelProbe {
    double y = 1.0;
    double t = 1.0;
    double x = 1.0;
    double s = 0.0;
};

namespace detail {

/**
 * Imaginary-time value of  c \int_S^T d theta \int d alpha p0(y,T|alpha,theta) delta'(alpha) u(alpha,theta),
 * with the alpha integral collapsed to
 *
 *   -c \int_S^T [ d_alpha p0(y,T|0,theta) {u(0,theta)} + p0(y,T|0,theta) {u'(0,theta)} ] d theta
 *
 * and the averages of u supplied by `averages(theta)` as a BoundaryData.
 */
template <typename Averages>
double delta_prime_convolution(double c, const KernelProbe& probe, Averages&& averages,
                               double abs_tol = quadrature::default_abs_tol)
{
    constexpr TimeAxis axis = TimeAxis::ImaginaryTime;
    // Integrate in the elapsed time u = T - theta so the receiver kernel keeps full precision near theta -> T.
    auto integrand = [&](double u) {
        const double theta = probe.t - u;
        if (!(u > 0.0) || !(theta > probe.s))
            return 0.0;
        const BoundaryData avg = averages(theta);
        const double kernel = free_kernel_elapsed(probe.y, u, axis).real();
        // d/d alpha p0(y|alpha) = -d/dy p0(y|alpha)
        const double kernel_da = -free_kernel_elapsed_dy(probe.y, u, axis).real();
        return kernel_da * avg.value_avg().real() + kernel * avg.deriv_avg().real();
    };
    // The receiver end decays on the scale y^2, the source end on x^2.
    const auto breaks =
        quadrature::two_sided_breakpoints(probe.t - probe.s, probe.y * probe.y, probe.x * probe.x);
    const auto r = quadrature::integrate_panels(integrand, breaks, abs_tol);
    return -c * r.value;
}

} // namespace detail

/**
 * Independent check of born_step: one recursion step evaluated at a probe by
 * explicit time quadrature, imaginary time. The averages of `prev` at the
 * origin come from its closed-form kernel combination.
 */
inline double born_step_oracle(const QuadrantKernelState& prev, double c, const KernelProbe& probe)
{
    detail::require_off_origin(probe.x, probe.y);
    detail::require_time_order(probe.t, probe.s);
    if (c == 0.0)
        return 0.0;
    auto averages = [&](double theta) {
        return prev.boundary_data(theta, probe.x, probe.s, TimeAxis::ImaginaryTime);
    };
    return detail::delta_prime_convolution(c, probe, averages);
}

} // namespace pointkernel
