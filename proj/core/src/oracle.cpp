#include "switchosc/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/toms748_solve.hpp>

#include "switchosc/errors.hpp"

namespace switchosc::oracle {
namespace {

using State = std::array<double, 4>;  // Re eps, Im eps, Re eps', Im eps'

State to_state(const OdeState& s) {
    return {s.eps.real(), s.eps.imag(), s.eps_dot.real(), s.eps_dot.imag()};
}

OdeState from_state(const State& y) { return {{y[0], y[1]}, {y[2], y[3]}}; }

State rhs(double t, const State& y, const OscParams& p) {
    const double w = omega_of(t, p);
    const double w2 = w * w;
    return {y[2], y[3], -w2 * y[0], -w2 * y[1]};
}

// y + h * sum_j a_j k_j
template <std::size_t N>
State combine(const State& y, double h, const std::array<double, N>& a,
              const std::array<const State*, N>& k) {
    State out = y;
    for (std::size_t j = 0; j < N; ++j) {
        if (a[j] == 0.0) continue;
        for (std::size_t i = 0; i < 4; ++i) out[i] += h * a[j] * (*k[j])[i];
    }
    return out;
}

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr std::array<double, 1> a2{1.0 / 5};
constexpr std::array<double, 2> a3{3.0 / 40, 9.0 / 40};
constexpr std::array<double, 3> a4{44.0 / 45, -56.0 / 15, 32.0 / 9};
constexpr std::array<double, 4> a5{19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729};
constexpr std::array<double, 5> a6{9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176,
                                   -5103.0 / 18656};
constexpr std::array<double, 6> b5{35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784,
                                   11.0 / 84};
// fifth-order minus embedded fourth-order weights
constexpr std::array<double, 7> err_w{71.0 / 57600,  0.0,          -71.0 / 16695, 71.0 / 1920,
                                      -17253.0 / 339200, 22.0 / 525, -1.0 / 40};

struct StepResult {
    State y;
    State k_end;  // f(t + h, y), reused as the next first stage
    double err;   // max-norm local error estimate in units of tol
};

StepResult dopri_step(double t, double h, const State& y, const State& k1, double tol,
                      const OscParams& p) {
    const State k2 = rhs(t + c2 * h, combine(y, h, a2, {&k1}), p);
    const State k3 = rhs(t + c3 * h, combine(y, h, a3, {&k1, &k2}), p);
    const State k4 = rhs(t + c4 * h, combine(y, h, a4, {&k1, &k2, &k3}), p);
    const State k5 = rhs(t + c5 * h, combine(y, h, a5, {&k1, &k2, &k3, &k4}), p);
    const State k6 = rhs(t + h, combine(y, h, a6, {&k1, &k2, &k3, &k4, &k5}), p);
    const State y_new = combine(y, h, b5, {&k1, &k2, &k3, &k4, &k5, &k6});
    const State k7 = rhs(t + h, y_new, p);

    const std::array<const State*, 7> ks{&k1, &k2, &k3, &k4, &k5, &k6, &k7};
    double worst = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        double e = 0.0;
        for (std::size_t j = 0; j < ks.size(); ++j) e += err_w[j] * (*ks[j])[i];
        worst = std::max(worst, std::abs(h * e) / tol);
    }
    return {y_new, k7, worst};
}

void integrate_segment(const OscParams& p, double t0, double t1, double tol,
                       const IntegrateOptions& opt, Trajectory& out, double& h_hint) {
    State y = to_state(out.states.back());
    State k1 = rhs(t0, y, p);
    double t = t0;
    const double len = t1 - t0;

    if (opt.fixed_step) {
        const auto n = static_cast<std::int64_t>(std::ceil(len / *opt.fixed_step));
        const double h = len / static_cast<double>(std::max<std::int64_t>(n, 1));
        for (std::int64_t i = 1; i <= n; ++i) {
            const StepResult r = dopri_step(t, h, y, k1, tol, p);
            t = (i == n) ? t1 : t0 + static_cast<double>(i) * h;
            y = r.y;
            k1 = r.k_end;
            out.times.push_back(t);
            out.states.push_back(from_state(y));
        }
        return;
    }

    double h = std::min(h_hint, len);
    while (t < t1) {
        const bool last = t + h >= t1;
        if (last) h = t1 - t;
        const double h_min = 16.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(t));
        if (h < h_min) {
            std::ostringstream msg;
            msg << "integrate_ode: step size underflow at t=" << t << " (tol=" << tol << ")";
            throw ToleranceNotMet(msg.str());
        }
        const StepResult r = dopri_step(t, h, y, k1, tol, p);
        const double fac =
            r.err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(r.err, -0.2), 0.2, 5.0);
        if (r.err <= 1.0) {
            t = last ? t1 : t + h;
            y = r.y;
            k1 = r.k_end;
            out.times.push_back(t);
            out.states.push_back(from_state(y));
            if (!last) h *= fac;
            else h_hint = h * fac;
        } else {
            ++out.rejected_steps;
            h *= std::min(fac, 1.0);
        }
    }
}

}  // namespace

Trajectory integrate_ode(const OscParams& p, double t0, double t1, OdeState init, double tol,
                         const IntegrateOptions& options) {
    validate_params(p);
    if (!(tol >= 1e-13 && tol <= 1e-3))
        throw DomainError("integrate_ode: tol must lie in [1e-13, 1e-3]");
    if (!(t1 > t0)) throw DomainError("integrate_ode: require t1 > t0");
    if (options.fixed_step && !(*options.fixed_step > 0.0))
        throw DomainError("integrate_ode: fixed_step must be positive");

    std::vector<double> marks{t0, t1};
    if (options.force_junctions) {
        for (const double j : {0.0, switch_end(p)})
            if (j > t0 && j < t1) marks.push_back(j);
    }
    for (const double s : options.stops)
        if (s > t0 && s < t1) marks.push_back(s);
    std::sort(marks.begin(), marks.end());
    marks.erase(std::unique(marks.begin(), marks.end()), marks.end());

    Trajectory out;
    out.tol = tol;
    out.times.push_back(t0);
    out.states.push_back(init);

    double h_hint = 0.01 / p.omega;
    for (std::size_t i = 0; i + 1 < marks.size(); ++i)
        integrate_segment(p, marks[i], marks[i + 1], tol, options, out, h_hint);
    return out;
}

double quadrature(const std::function<double(double)>& f, double a, double b, double tol) {
    using boost::math::quadrature::gauss_kronrod;
    if (!(a <= b)) throw DomainError("quadrature: require a <= b");
    if (!(tol > 0.0)) throw DomainError("quadrature: tol must be positive");
    if (a == b) return 0.0;

    // Boost's tolerance is relative to the L1 norm; get that first and
    // convert the absolute tolerance.
    double l1 = 0.0;
    double err = 0.0;
    gauss_kronrod<double, 15>::integrate(f, a, b, 0, 0.0, &err, &l1);
    const double rel = l1 > 0.0 ? 0.5 * tol / l1 : tol;
    const double result = gauss_kronrod<double, 15>::integrate(f, a, b, 15, rel, &err, &l1);
    if (!std::isfinite(result) || err > tol) {
        std::ostringstream msg;
        msg << "quadrature: error estimate " << err << " exceeds tol " << tol;
        throw ToleranceNotMet(msg.str());
    }
    return result;
}

double find_root(const std::function<double(double)>& f, double lo, double hi, double tol) {
    if (lo > hi) std::swap(lo, hi);
    const double f_lo = f(lo);
    const double f_hi = f(hi);
    if (f_lo == 0.0) return lo;
    if (f_hi == 0.0) return hi;
    if (std::signbit(f_lo) == std::signbit(f_hi)) {
        std::ostringstream msg;
        msg << "find_root: f(" << lo << ")=" << f_lo << " and f(" << hi << ")=" << f_hi
            << " have the same sign";
        throw NoSignChange(msg.str());
    }
    std::uintmax_t max_iter = 200;
    const auto done = [tol](double x, double y) { return std::abs(y - x) <= tol; };
    const auto [x0, x1] = boost::math::tools::toms748_solve(f, lo, hi, f_lo, f_hi, done, max_iter);
    const double floor = 4.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(x0), std::abs(x1));
    if (std::abs(x1 - x0) > std::max(tol, floor))
        throw ToleranceNotMet("find_root: bracket did not shrink to tol");
    return 0.5 * (x0 + x1);
}

}  // namespace switchosc::oracle
