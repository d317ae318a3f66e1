#include "switchosc/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "switchosc/errors.hpp"
#include "switchosc/oracle.hpp"

namespace switchosc {
namespace {

constexpr Complex kI{0.0, 1.0};

// eps z* + eps* z, which is real.
double symmetric_sum(Complex eps, Complex z) { return 2.0 * std::real(eps * std::conj(z)); }

void require_positive_a(const QuadraticCoefficients& c) {
    if (!(c.a > 0.0)) throw DomainError("quadratic coefficient a must be positive");
}

}  // namespace

InvariantCoefficients invariant_coefficients(const ClassicalAmplitude& amp, double omega0) {
    const double s = std::sqrt(omega0);
    return {.u = 0.5 * (s * amp.eps - kI * amp.eps_dot / s),
            .v = -0.5 * (s * amp.eps + kI * amp.eps_dot / s),
            .omega0 = omega0};
}

InvariantCoefficients invariant_coefficients(double t, const OscParams& p) {
    return invariant_coefficients(epsilon(t, p), omega_before(p));
}

FirstMoments first_moments(SmusState s, const ClassicalAmplitude& amp, const OscParams& p) {
    return {.q_mean = std::sqrt(p.hbar / (2.0 * p.m)) * symmetric_sum(amp.eps, s.z),
            .p_mean = std::sqrt(p.hbar * p.m / 2.0) * symmetric_sum(amp.eps_dot, s.z)};
}

FirstMoments first_moments(SmusState s, double t, const OscParams& p) {
    return first_moments(s, epsilon(t, p), p);
}

FirstMoments general_first_moments(SmusState s, const ClassicalAmplitude& amp,
                                   const QuadraticCoefficients& coeffs, double hbar) {
    require_positive_a(coeffs);
    const double a = coeffs.a;
    const Complex x = coeffs.b * amp.eps - 0.5 * amp.eps_dot - 0.25 * coeffs.a_dot / a * amp.eps;
    return {.q_mean = std::sqrt(hbar * a) * symmetric_sum(amp.eps, s.z),
            .p_mean = -std::sqrt(hbar / a) * symmetric_sum(x, s.z)};
}

ConservedPair conserved_pair(SmusState s, double t, const OscParams& p) {
    const ClassicalAmplitude amp = epsilon(t, p);
    const FirstMoments fm = first_moments(s, amp, p);
    const double root_w0 = std::sqrt(omega_before(p));
    return {.q0 = (amp.eps_dot.imag() * fm.q_mean - amp.eps.imag() * fm.p_mean / p.m) / root_w0,
            .p0 = root_w0 * (-p.m * amp.eps_dot.real() * fm.q_mean + amp.eps.real() * fm.p_mean)};
}

CovarianceState second_moments(const ClassicalAmplitude& amp, const OscParams& p) {
    const Envelope e = envelope(amp);
    const double r2 = e.r * e.r;
    return {.sq2 = p.hbar * r2 / (2.0 * p.m),
            .sp2 = 0.5 * p.hbar * p.m * (1.0 / r2 + e.r_dot * e.r_dot),
            .cqp = 0.5 * p.hbar * e.r * e.r_dot};
}

CovarianceState second_moments(double t, const OscParams& p) {
    return second_moments(epsilon(t, p), p);
}

CovarianceState general_second_moments(const ClassicalAmplitude& amp,
                                       const QuadraticCoefficients& coeffs, double hbar) {
    require_positive_a(coeffs);
    const double a = coeffs.a;
    const Envelope e = envelope(amp);
    const double x = coeffs.b * e.r - 0.5 * e.r_dot - 0.25 * coeffs.a_dot / a * e.r;
    return {.sq2 = hbar * a * e.r * e.r,
            .sp2 = hbar / a * (0.25 / (e.r * e.r) + x * x),
            .cqp = -hbar * e.r * x};
}

SqueezeRatios squeeze_ratios(double t, const OscParams& p) {
    const CovarianceState cov = second_moments(t, p);
    const double w = omega_of(t, p);
    return {.sq = p.m * w * cov.sq2 / (0.5 * p.hbar), .sp = cov.sp2 / (0.5 * p.m * w * p.hbar)};
}

double printed_coherence_time(int n, const OscParams& p) {
    return switch_end(p) + (0.5 + n) * std::numbers::pi / (4.0 * omega_before(p));
}

CoherenceScan coherence_scan(const OscParams& p, double t_lo, double t_hi) {
    validate_params(p);
    const double end = switch_end(p);
    if (!(t_lo >= end) || !(t_hi > t_lo)) {
        std::ostringstream msg;
        msg << "coherence_scan: need " << end << " <= t_lo < t_hi, got [" << t_lo << ", " << t_hi
            << "]";
        throw RangeError(msg.str());
    }

    CoherenceScan scan;
    if (p.alpha * p.omega == 0.0) {
        scan.always_coherent = true;
        return scan;
    }

    // Extrema of |eps| after the switch are pi/(2 Omega_after) apart; sample
    // finely enough that each bracket holds one sign change.
    const double spacing = std::numbers::pi / (2.0 * omega_after(p));
    const auto slope = [&p](double t) { return envelope(t, p).r_dot; };
    const auto n = static_cast<std::size_t>(std::ceil((t_hi - t_lo) / (spacing / 16.0)));
    std::vector<double> ts(n + 1);
    std::vector<double> fs(n + 1);
    double scale = 0.0;
    for (std::size_t i = 0; i <= n; ++i) {
        ts[i] = i == n ? t_hi : t_lo + (t_hi - t_lo) * static_cast<double>(i) / static_cast<double>(n);
        fs[i] = slope(ts[i]);
        scale = std::max(scale, std::abs(fs[i]));
    }
    // Samples this close to zero are zeros; they are never used as bracket ends.
    const double zero_tol = 64.0 * std::numeric_limits<double>::epsilon() * std::max(scale, 1.0);
    const auto is_zero = [&](std::size_t i) { return std::abs(fs[i]) <= zero_tol; };

    std::vector<double> roots;
    std::size_t prev = n + 1;  // last non-zero sample
    for (std::size_t i = 0; i <= n; ++i) {
        if (is_zero(i)) {
            if (ts[i] > end) roots.push_back(ts[i]);
            continue;
        }
        if (prev <= n && (i == prev + 1) && std::signbit(fs[prev]) != std::signbit(fs[i]))
            roots.push_back(oracle::find_root(slope, ts[prev], ts[i], 1e-13 * std::max(1.0, ts[i])));
        prev = i;
    }

    for (const double t : roots) {
        const CovarianceState cov = second_moments(t, p);
        const SqueezeRatios ratios = squeeze_ratios(t, p);
        CoherenceEvent ev;
        ev.index = static_cast<int>(std::lround((t - end) / spacing));
        ev.t = t;
        ev.sq_ratio = ratios.sq;
        ev.sp_ratio = ratios.sp;
        ev.cqp = cov.cqp;
        ev.det_residual = std::abs(cov.det() - 0.25 * p.hbar * p.hbar);
        ev.printed_t = printed_coherence_time(ev.index, p);
        ev.printed_offset = std::abs(ev.t - ev.printed_t);
        scan.events.push_back(ev);
    }
    return scan;
}

}  // namespace switchosc
