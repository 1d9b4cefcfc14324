#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

#include <pointkernel/core.hpp>

namespace pktest {

using pointkernel::complex;
using pointkernel::PointInteraction;

/// Fixed-seed generator shared by the property tests.
class Draws {
public:
    explicit Draws(std::uint64_t seed = 42) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

    /// c1, c3 in [-bound, bound], |c2| <= bound.
    PointInteraction interaction(double bound)
    {
        const double r = bound * std::sqrt(uniform(0.0, 1.0));
        const double phi = uniform(-3.141592653589793, 3.141592653589793);
        return {uniform(-bound, bound), std::polar(r, phi), uniform(-bound, bound)};
    }

    complex complex_value(double bound) { return {uniform(-bound, bound), uniform(-bound, bound)}; }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

} // namespace pktest
