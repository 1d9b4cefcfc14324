#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "error.hpp"

namespace pointkernel {

/// One-sided offsets for limit extrapolation.
struct JumpProbe {
    std::vector<double> epsilon_ladder;
    int richardson_order = 4;

    /// eps0 = 1e-2, ratio 1/2, 6 rungs, order 4.
    static JumpProbe defaults() { return geometric(1e-2, 0.5, 6, 4); }

    static JumpProbe geometric(double eps0, double ratio, int rungs, int order)
    {
        JumpProbe probe;
        probe.richardson_order = order;
        double eps = eps0;
        for (int i = 0; i < rungs; ++i, eps *= ratio)
            probe.epsilon_ladder.push_back(eps);
        return probe;
    }

    void validate() const
    {
        if (richardson_order < 2)
            throw Error(ErrorKind::InvalidArgument, "richardson order must be >= 2");
        if (epsilon_ladder.size() < static_cast<std::size_t>(richardson_order) + 1)
            throw Error(ErrorKind::InvalidArgument, "ladder needs at least richardson_order + 1 rungs");
        for (std::size_t i = 0; i < epsilon_ladder.size(); ++i) {
            if (!(epsilon_ladder[i] > 0.0))
                throw Error(ErrorKind::InvalidArgument, "ladder offsets must be positive");
            if (i > 0 && !(epsilon_ladder[i] < epsilon_ladder[i - 1]))
                throw Error(ErrorKind::InvalidArgument, "ladder must be strictly decreasing");
        }
    }
};

struct Extrapolation {
    double value = 0.0;
    double error = 0.0; // difference between the two finest windows
};

namespace detail {

/// Neville evaluation at eps = 0 of the interpolating polynomial through the points.
inline double neville_at_zero(std::span<const double> eps, std::span<const double> values)
{
    std::vector<double> p(values.begin(), values.end());
    const std::size_t n = p.size();
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = 0; i + level < n; ++i) {
            const double hi = eps[i];
            const double hj = eps[i + level];
            p[i] = (hi * p[i + 1] - hj * p[i]) / (hi - hj);
        }
    }
    return p[0];
}

} // namespace detail

/**
 * Limit of values(eps) as eps -> 0 assuming a power series in eps. Uses the
 * `order` finest rungs; the error estimate compares with the window shifted
 * one rung coarser.
 */
inline Extrapolation richardson_limit(std::span<const double> eps, std::span<const double> values, int order)
{
    const auto n = eps.size();
    const auto m = static_cast<std::size_t>(order);
    if (values.size() != n || n < m + 1)
        throw Error(ErrorKind::InvalidArgument, "ladder too short for the requested order");

    const double fine = detail::neville_at_zero(eps.subspan(n - m, m), values.subspan(n - m, m));
    const double coarse = detail::neville_at_zero(eps.subspan(n - m - 1, m), values.subspan(n - m - 1, m));
    if (!std::isfinite(fine) || !std::isfinite(coarse))
        throw Error(ErrorKind::ExtrapolationUnstable, "non-finite extrapolation");
    return {fine, std::abs(fine - coarse)};
}

} // namespace pointkernel
