#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "switchosc/classical.hpp"
#include "switchosc/profile.hpp"

// Independent numerical machinery used to check the closed forms:
// Runge-Kutta integration of eps'' + Omega^2 eps = 0, adaptive quadrature,
// root finding and finite differences. Nothing in here calls the closed-form
// solution in classical.hpp.

namespace switchosc::oracle {

struct OdeState {
    Complex eps;
    Complex eps_dot;
};

struct Trajectory {
    std::vector<double> times;
    std::vector<OdeState> states;
    double tol = 0.0;
    std::size_t rejected_steps = 0;

    std::size_t size() const { return times.size(); }
    const OdeState& back() const { return states.back(); }
};

struct IntegrateOptions {
    /// Put step boundaries exactly at t = 0 and t = pi/(2 omega).
    bool force_junctions = true;
    /// Additional times that must appear in the trajectory.
    std::span<const double> stops = {};
    /// If set, take uniform steps of at most this size per segment instead
    /// of adapting (Dormand-Prince fifth-order solution, no error control).
    std::optional<double> fixed_step = std::nullopt;
};

/// Integrates eps'' + Omega(t)^2 eps = 0 from t0 to t1 with an embedded
/// Dormand-Prince 5(4) pair. The estimated local error of each accepted step
/// is at most tol in every component of (Re eps, Im eps, Re eps', Im eps').
///
/// Requires tol in [1e-13, 1e-3] and t1 > t0; throws DomainError otherwise
/// and ToleranceNotMet if the step size underflows.
Trajectory integrate_ode(const OscParams& p, double t0, double t1, OdeState init, double tol,
                         const IntegrateOptions& options = {});

/// Adaptive Gauss-Kronrod quadrature of f over [a, b]. Throws
/// ToleranceNotMet when the error estimate exceeds tol.
double quadrature(const std::function<double(double)>& f, double a, double b, double tol);

/// Root of f inside [lo, hi] to within tol, by a bracketing
/// bisection/secant hybrid (TOMS 748). Throws NoSignChange if f(lo) and
/// f(hi) have the same sign.
double find_root(const std::function<double(double)>& f, double lo, double hi, double tol);

/// Second-order central difference; works for real or complex valued f.
template <class F>
auto central_difference(F&& f, double t, double h) {
    return (f(t + h) - f(t - h)) / (2.0 * h);
}

}  // namespace switchosc::oracle
