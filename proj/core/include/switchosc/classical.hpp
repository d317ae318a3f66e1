#pragma once

#include <complex>

#include "switchosc/profile.hpp"

namespace switchosc {

using Complex = std::complex<double>;

/// Complex solution eps(t) of  eps'' + Omega(t)^2 eps = 0  and its
/// derivative. This pair determines every quantum quantity of the
/// oscillator.
struct ClassicalAmplitude {
    double t = 0.0;
    Complex eps;
    Complex eps_dot;
};

/// Polar envelope |eps| and its time derivative.
struct Envelope {
    double r = 0.0;
    double r_dot = 0.0;
};

/// Which closed form to use on the two branches where the published
/// expressions disagree with the continuous solution. Derived is the
/// correct solution; the other two reproduce one printed variant each so
/// that the discrepancy can be measured.
enum class Transcription {
    Derived,
    PrintedPhase,       ///< after-switch phase pi/sqrt(1 + alpha omega)
    PrintedDerivative,  ///< switching slope term -alpha omega sin(2 omega t)
};

/// eps(t) and eps'(t) on the branch selected by region_of(t).
ClassicalAmplitude epsilon(double t, const OscParams& p,
                           Transcription variant = Transcription::Derived);

/// eps(t) and eps'(t) evaluated with one branch's closed form irrespective
/// of region. Outside its own region a branch is still a solution of the
/// constant- or switching-frequency equation it was built for.
ClassicalAmplitude epsilon_on_branch(Region branch, double t, const OscParams& p,
                                     Transcription variant = Transcription::Derived);

/// Integral of ds / (1/omega + alpha cos^2(omega s)) from 0 to t, for t in
/// [0, pi/(2 omega)]. Throws RangeError outside that interval.
double phase_integral(double t, const OscParams& p);

/// Constant phase of the after-switch branch that makes eps continuous at
/// t = pi/(2 omega); equals pi / (2 sqrt(1 + alpha omega)).
double junction_phase(const OscParams& p);

/// The after-switch phase as printed, pi / sqrt(1 + alpha omega).
double printed_junction_phase(const OscParams& p);

/// eps conj(eps') - eps' conj(eps). Equals -2i for every solution produced
/// by epsilon().
Complex wronskian(const ClassicalAmplitude& s);

Envelope envelope(const ClassicalAmplitude& s);
Envelope envelope(double t, const OscParams& p);

}  // namespace switchosc
