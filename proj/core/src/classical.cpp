#include "switchosc/classical.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "switchosc/errors.hpp"

namespace switchosc {
namespace {

constexpr Complex kI{0.0, 1.0};

// Antiderivative of 1/(1 + k cos^2 u), continuous for all real u:
// atan(tan(u)/s)/s on each period of tan, shifted by n*pi/s.
double unwrapped_phase(double u, double k) {
    const double s = std::sqrt(1.0 + k);
    const double n = std::round(u / std::numbers::pi);
    const double r = u - n * std::numbers::pi;  // in [-pi/2, pi/2]
    return (n * std::numbers::pi + std::atan2(std::sin(r), s * std::cos(r))) / s;
}

ClassicalAmplitude before_branch(double t, const OscParams& p) {
    const double w = p.omega;
    const double k = p.alpha * w;
    const double w0 = omega_before(p);
    const double amp_re = std::sqrt((1.0 + k) / w);
    const double amp_im = std::sqrt((1.0 + k) / (w * (1.0 + k + k * k)));
    const double c = std::cos(w0 * t);
    const double s = std::sin(w0 * t);
    return {t, {amp_re * c, amp_im * s}, {-amp_re * w0 * s, amp_im * w0 * c}};
}

ClassicalAmplitude switching_branch(double t, const OscParams& p, Transcription variant) {
    const double w = p.omega;
    const double k = p.alpha * w;
    const double c = std::cos(w * t);
    const double sigma = std::sqrt(1.0 / w + p.alpha * c * c);
    // sigma * dsigma/dt = -(alpha omega / 2) sin(2 omega t)
    const double slope_factor = variant == Transcription::PrintedDerivative ? k : 0.5 * k;
    const double sigma_sigma_dot = -slope_factor * std::sin(2.0 * w * t);
    // The phase is the integral of 1/sigma^2 = omega / (1 + k cos^2(omega t)).
    const Complex rot = std::polar(1.0, unwrapped_phase(w * t, k));
    return {t, sigma * rot, rot * (sigma_sigma_dot + kI) / sigma};
}

ClassicalAmplitude after_branch(double t, const OscParams& p, Transcription variant) {
    const double w = p.omega;
    const double k = p.alpha * w;
    const double w3 = omega_after(p);
    const double tau = t - switch_end(p);
    const double c = std::cos(w3 * tau);
    const double s = std::sin(w3 * tau);
    const double phase =
        variant == Transcription::PrintedPhase ? printed_junction_phase(p) : junction_phase(p);
    const Complex rot = std::polar(1.0, phase);
    const Complex eps{c / std::sqrt(w), s / std::sqrt(w * (1.0 - k))};
    const Complex eps_dot{-std::sqrt(w * (1.0 - k)) * s, std::sqrt(w) * c};
    return {t, rot * eps, rot * eps_dot};
}

}  // namespace

ClassicalAmplitude epsilon_on_branch(Region branch, double t, const OscParams& p,
                                     Transcription variant) {
    validate_params(p);
    switch (branch) {
        case Region::Before: return before_branch(t, p);
        case Region::Switching: return switching_branch(t, p, variant);
        case Region::After: return after_branch(t, p, variant);
    }
    throw DomainError("unknown region");
}

ClassicalAmplitude epsilon(double t, const OscParams& p, Transcription variant) {
    return epsilon_on_branch(region_of(t, p), t, p, variant);
}

double phase_integral(double t, const OscParams& p) {
    validate_params(p);
    const double end = switch_end(p);
    if (!(t >= 0.0 && t <= end)) {
        std::ostringstream msg;
        msg << "phase_integral: t=" << t << " outside [0, " << end << "]";
        throw RangeError(msg.str());
    }
    const double k = p.alpha * p.omega;
    // tan(omega t) has a removable singularity at the endpoint.
    if (t == end) return std::numbers::pi / (2.0 * std::sqrt(1.0 + k));
    return unwrapped_phase(p.omega * t, k);
}

double junction_phase(const OscParams& p) { return phase_integral(switch_end(p), p); }

double printed_junction_phase(const OscParams& p) {
    validate_params(p);
    return std::numbers::pi / std::sqrt(1.0 + p.alpha * p.omega);
}

Complex wronskian(const ClassicalAmplitude& s) {
    return s.eps * std::conj(s.eps_dot) - s.eps_dot * std::conj(s.eps);
}

Envelope envelope(const ClassicalAmplitude& s) {
    const double r = std::abs(s.eps);
    return {r, std::real(s.eps * std::conj(s.eps_dot)) / r};
}

Envelope envelope(double t, const OscParams& p) { return envelope(epsilon(t, p)); }

}  // namespace switchosc
