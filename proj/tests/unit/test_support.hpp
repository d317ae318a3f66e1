#pragma once

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "switchosc/profile.hpp"

namespace switchosc::test {

inline OscParams figure_params() { return {.m = 1.0, .hbar = 1.0, .alpha = 0.5, .omega = 1.0}; }

inline std::vector<double> linspace(double a, double b, std::size_t n) {
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
    out.back() = b;
    return out;
}

/// Random valid parameter sets for property checks (fixed seed).
inline std::vector<OscParams> random_params(std::size_t count, unsigned seed = 20261016) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> mass(0.2, 5.0), hbar(0.1, 3.0), omega(0.3, 4.0),
        frac(0.0, 0.95);
    std::vector<OscParams> out;
    for (std::size_t i = 0; i < count; ++i) {
        OscParams p;
        p.m = mass(rng);
        p.hbar = hbar(rng);
        p.omega = omega(rng);
        p.alpha = frac(rng) / p.omega;
        out.push_back(p);
    }
    return out;
}

}  // namespace switchosc::test
