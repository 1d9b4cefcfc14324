#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

#include "core.hpp"

namespace pointkernel {

/// Relative threshold deciding the separated stratum and the non-representable strata.
inline constexpr double degeneracy_threshold = 1e-9;

/**
 * Connected self-adjoint extension:
 *
 *   (u'(0+), u(0+))^T = e^{i theta} A (u'(0-), u(0-))^T,   det A = 1.
 *
 * theta is kept in (-pi, pi].
 */
struct ConnectedSAE {
    double theta = 0.0;
    double a11 = 1.0;
    double a12 = 0.0;
    double a21 = 0.0;
    double a22 = 1.0;

    double det() const noexcept { return a11 * a22 - a12 * a21; }
};

/// Homogeneous Robin condition p u' = q u on one side, stored with p^2 + q^2 = 1, p >= 0.
class ProjectivePair {
public:
    ProjectivePair() = default;

    ProjectivePair(double p, double q)
    {
        const double norm = std::hypot(p, q);
        if (!(norm > 0.0) || !std::isfinite(norm))
            throw Error(ErrorKind::InvalidArgument, "projective pair must be finite and nonzero");
        p /= norm;
        q /= norm;
        if (p < 0.0 || (p == 0.0 && q < 0.0)) {
            p = -p;
            q = -q;
        }
        p_ = p + 0.0;
        q_ = q + 0.0;
    }

    static ProjectivePair dirichlet() { return {0.0, 1.0}; }
    static ProjectivePair neumann() { return {1.0, 0.0}; }
    /// u' = b u
    static ProjectivePair from_derivative_ratio(double b) { return {1.0, b}; }
    /// u = b~ u'
    static ProjectivePair from_value_ratio(double b_tilde) { return {b_tilde, 1.0}; }

    double p() const noexcept { return p_; }
    double q() const noexcept { return q_; }

    bool is_dirichlet() const noexcept { return p_ == 0.0; }
    bool is_neumann() const noexcept { return q_ == 0.0; }

    /// b = q/p; empty for Dirichlet.
    std::optional<double> derivative_ratio() const
    {
        if (p_ == 0.0)
            return std::nullopt;
        return q_ / p_;
    }

    /// b~ = p/q; empty for Neumann.
    std::optional<double> value_ratio() const
    {
        if (q_ == 0.0)
            return std::nullopt;
        return p_ / q_;
    }

    /// Sine of the angle between two pairs; zero iff they are the same condition.
    double cross(const ProjectivePair& other) const noexcept { return p_ * other.q_ - other.p_ * q_; }

private:
    double p_ = 1.0;
    double q_ = 0.0;
};

/// Independent Robin conditions on each side of the origin.
struct SeparatedSAE {
    ProjectivePair side_plus;
    ProjectivePair side_minus;
};

enum class SeparatedCase {
    ValueRatio = 1,       // c1 != 0, written via b~
    DerivativeRatio = 2,  // c3 != 0, written via b
    DirichletNeumann = 3, // c1 = c3 = 0, c2 = +-2
};

struct SeparatedConversion {
    SeparatedSAE sae;
    SeparatedCase which = SeparatedCase::DirichletNeumann;
    /// Largest disagreement between the two charts when both apply, else 0.
    double chart_disagreement = 0.0;
};

namespace detail {

inline double coupling_scale(const PointInteraction& pi) noexcept
{
    return std::max({std::abs(pi.c1), std::abs(pi.c2), std::abs(pi.c3)});
}

/// (D/4 - 1)^2 + Im(c2)^2, the squared radius appearing in the connected map.
inline double connected_radius_sq(const PointInteraction& pi) noexcept
{
    const double q = determinant(pi) / 4.0 - 1.0;
    return q * q + pi.c2.imag() * pi.c2.imag();
}

inline bool in_separated_stratum(const PointInteraction& pi) noexcept
{
    const double scale = coupling_scale(pi);
    const double band = degeneracy_threshold * degeneracy_threshold * (1.0 + scale * scale);
    return connected_radius_sq(pi) <= band;
}

inline double canonical_angle(double theta) noexcept
{
    constexpr double pi = std::numbers::pi;
    if (theta <= -pi)
        theta += 2.0 * pi;
    if (theta > pi)
        theta -= 2.0 * pi;
    return theta;
}

} // namespace detail

inline bool is_connected(const PointInteraction& pi) noexcept
{
    return !detail::in_separated_stratum(pi);
}

inline ConnectedSAE to_connected(const PointInteraction& pi)
{
    if (detail::in_separated_stratum(pi))
        throw Error(ErrorKind::NotConnected, "(D/4-1)^2 + Im(c2)^2 vanishes; interaction is separated");

    const double quarter_d = determinant(pi) / 4.0;
    const double radius = std::sqrt(detail::connected_radius_sq(pi));

    ConnectedSAE conn;
    conn.theta = detail::canonical_angle(std::atan2(pi.c2.imag(), 1.0 - quarter_d));
    conn.a11 = (quarter_d + 1.0 - pi.c2.real()) / radius;
    conn.a12 = pi.c1 / radius;
    conn.a21 = pi.c3 / radius;
    conn.a22 = (quarter_d + 1.0 + pi.c2.real()) / radius;
    return conn;
}

inline PointInteraction from_connected(const ConnectedSAE& conn)
{
    const double scale = std::max({1.0, std::abs(conn.a11), std::abs(conn.a12), std::abs(conn.a21),
                                   std::abs(conn.a22)});
    if (std::abs(conn.det() - 1.0) > 1e-12 * scale * scale)
        throw Error(ErrorKind::InvalidArgument, "connected matrix must be unimodular");

    const double delta = conn.a11 + conn.a22 + 2.0 * std::cos(conn.theta);
    if (std::abs(delta) <= degeneracy_threshold * (2.0 + std::abs(conn.a11) + std::abs(conn.a22)))
        throw Error(ErrorKind::NotRepresentable, "a11 + a22 + 2 cos(theta) vanishes");

    PointInteraction pi;
    pi.c1 = 4.0 * conn.a12 / delta;
    pi.c2 = 2.0 * complex{conn.a22 - conn.a11, 2.0 * std::sin(conn.theta)} / delta;
    pi.c3 = 4.0 * conn.a21 / delta;
    return pi;
}

inline bool is_separated(const PointInteraction& pi) noexcept
{
    return detail::in_separated_stratum(pi);
}

/**
 * Classifies a separated interaction and builds the Robin pairs.
 *
 * When both c1 and c3 are nonzero the chart dividing by the larger of the two
 * is used, and the other chart is evaluated to report the disagreement.
 */
inline SeparatedConversion classify_separated(const PointInteraction& pi)
{
    if (!detail::in_separated_stratum(pi))
        throw Error(ErrorKind::NotSeparated, "D != 4 or Im(c2) != 0; interaction is connected");

    const double c1 = pi.c1;
    const double c2 = pi.c2.real();
    const double c3 = pi.c3;

    // Case 1: b~+ = (c2+2)/c1, b~- = (c2-2)/c1, as pairs (p, q) = (b~, 1) ~ (c2 +- 2, c1).
    auto value_chart = [&] {
        return SeparatedSAE{ProjectivePair(c2 + 2.0, c1), ProjectivePair(c2 - 2.0, c1)};
    };
    // Case 2: b+ = (2-c2)/c3, b- = (-2-c2)/c3, as pairs (p, q) = (1, b) ~ (c3, +-2 - c2).
    auto derivative_chart = [&] {
        return SeparatedSAE{ProjectivePair(c3, 2.0 - c2), ProjectivePair(c3, -2.0 - c2)};
    };

    SeparatedConversion out;
    if (c1 == 0.0 && c3 == 0.0) {
        out.which = SeparatedCase::DirichletNeumann;
        if (c2 > 0.0)
            out.sae = {ProjectivePair::neumann(), ProjectivePair::dirichlet()};
        else
            out.sae = {ProjectivePair::dirichlet(), ProjectivePair::neumann()};
        return out;
    }

    if (std::abs(c1) >= std::abs(c3)) {
        out.which = SeparatedCase::ValueRatio;
        out.sae = value_chart();
    } else {
        out.which = SeparatedCase::DerivativeRatio;
        out.sae = derivative_chart();
    }

    if (c1 != 0.0 && c3 != 0.0) {
        const SeparatedSAE other =
            out.which == SeparatedCase::ValueRatio ? derivative_chart() : value_chart();
        out.chart_disagreement = std::max(std::abs(out.sae.side_plus.cross(other.side_plus)),
                                          std::abs(out.sae.side_minus.cross(other.side_minus)));
    }
    return out;
}

inline SeparatedSAE to_separated(const PointInteraction& pi)
{
    return classify_separated(pi).sae;
}

/**
 * Inverse of to_separated. Written homogeneously in the pair components, so the
 * b and b~ charts coincide:
 *
 *   W = p+ q- - p- q+,  c1 = 4 q+ q- / W,  c2 = 2 (p+ q- + p- q+) / W,  c3 = -4 p+ p- / W.
 */
inline PointInteraction from_separated(const SeparatedSAE& sep)
{
    const auto& plus = sep.side_plus;
    const auto& minus = sep.side_minus;
    const double w = plus.cross(minus);
    if (std::abs(w) <= degeneracy_threshold)
        throw Error(ErrorKind::NotRepresentable, "identical Robin conditions on both sides (b+ = b-)");

    PointInteraction pi;
    pi.c1 = 4.0 * plus.q() * minus.q() / w;
    pi.c2 = complex{2.0 * (plus.p() * minus.q() + minus.p() * plus.q()) / w, 0.0};
    pi.c3 = -4.0 * plus.p() * minus.p() / w;
    return pi;
}

} // namespace pointkernel
