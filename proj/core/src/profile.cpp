#include "switchosc/profile.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "switchosc/errors.hpp"

namespace switchosc {

std::string_view to_string(Region r) {
    switch (r) {
        case Region::Before: return "before";
        case Region::Switching: return "switching";
        case Region::After: return "after";
    }
    return "unknown";
}

OscParams validate_params(const OscParams& p) {
    if (!std::isfinite(p.m) || !(p.m > 0.0))
        throw DomainError("mass must be positive and finite, got " + std::to_string(p.m));
    if (!std::isfinite(p.hbar) || !(p.hbar > 0.0))
        throw DomainError("hbar must be positive and finite, got " + std::to_string(p.hbar));
    if (!std::isfinite(p.omega) || !(p.omega > 0.0))
        throw DomainError("omega must be positive and finite, got " + std::to_string(p.omega));
    if (!std::isfinite(p.alpha) || p.alpha < 0.0)
        throw DomainError("alpha must be non-negative, got " + std::to_string(p.alpha));
    const double k = p.alpha * p.omega;
    if (!(k < 1.0))
        throw DomainError("alpha*omega must be < 1 (got " + std::to_string(k) +
                          "); the after-switch frequency omega*sqrt(1 - alpha*omega) "
                          "would not be real and positive");
    return p;
}

double switch_end(const OscParams& p) { return std::numbers::pi / (2.0 * p.omega); }

Region region_of(double t, const OscParams& p) {
    validate_params(p);
    if (t < 0.0) return Region::Before;
    if (t > switch_end(p)) return Region::After;
    return Region::Switching;
}

double omega_before(const OscParams& p) {
    validate_params(p);
    const double k = p.alpha * p.omega;
    return p.omega * std::sqrt(1.0 - k / ((1.0 + k) * (1.0 + k)));
}

double omega_after(const OscParams& p) {
    validate_params(p);
    return p.omega * std::sqrt(1.0 - p.alpha * p.omega);
}

double omega_on_branch(Region branch, double t, const OscParams& p) {
    switch (branch) {
        case Region::Before: return omega_before(p);
        case Region::After: return omega_after(p);
        case Region::Switching: break;
    }
    validate_params(p);
    const double k = p.alpha * p.omega;
    const double c = std::cos(p.omega * t);
    const double d = 1.0 + k * c * c;
    return p.omega * std::sqrt(1.0 - k / (d * d));
}

double omega_of(double t, const OscParams& p) { return omega_on_branch(region_of(t, p), t, p); }

QuadraticCoefficients hamiltonian_coefficients(double t, const OscParams& p) {
    const double w = omega_of(t, p);
    return {.a = 1.0 / (2.0 * p.m), .b = 0.0, .c = 0.5 * p.m * w * w, .a_dot = 0.0};
}

}  // namespace switchosc
