#pragma once

#include <string_view>

namespace switchosc {

/// Physical constants and switch parameters for
///   H = p^2/(2m) + m Omega(t)^2 q^2 / 2
/// where Omega(t) is switched smoothly from Omega_0 (t < 0) to
/// omega*sqrt(1 - alpha*omega) (t > pi/(2 omega)).
///
/// Units are whatever the caller uses consistently.
struct OscParams {
    double m = 1.0;
    double hbar = 1.0;
    double alpha = 0.5;
    double omega = 1.0;

    friend bool operator==(const OscParams&, const OscParams&) = default;
};

enum class Region { Before, Switching, After };

std::string_view to_string(Region r);

/// Coefficients of the general quadratic Hamiltonian
///   H = a p^2 + b (pq + qp) + c q^2.
struct QuadraticCoefficients {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double a_dot = 0.0;
};

/// Returns p unchanged, or throws DomainError naming the violated constraint.
/// Requires m, hbar, omega > 0 and 0 <= alpha*omega < 1.
OscParams validate_params(const OscParams& p);

/// End of the switching interval, pi/(2 omega).
double switch_end(const OscParams& p);

/// Before for t < 0, After for t > pi/(2 omega), Switching otherwise.
/// Both boundary instants belong to Switching.
Region region_of(double t, const OscParams& p);

/// Frequency before switching, Omega_0 = Omega(0).
double omega_before(const OscParams& p);

/// Frequency after switching, omega*sqrt(1 - alpha*omega).
double omega_after(const OscParams& p);

/// Omega(t), evaluated on the branch selected by region_of.
double omega_of(double t, const OscParams& p);

/// Omega(t) evaluated with the formula of a given branch regardless of
/// which region t lies in. Used for one-sided checks at the junctions.
double omega_on_branch(Region branch, double t, const OscParams& p);

QuadraticCoefficients hamiltonian_coefficients(double t, const OscParams& p);

}  // namespace switchosc
