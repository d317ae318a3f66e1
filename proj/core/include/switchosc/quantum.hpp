#pragma once

#include <vector>

#include "switchosc/classical.hpp"
#include "switchosc/profile.hpp"

namespace switchosc {

/// Eigenstate of the linear invariant A(t) with eigenvalue z
/// (a Schroedinger minimum uncertainty state).
struct SmusState {
    Complex z;
};

/// A(t) = u(t) a + v(t) a^dagger, with a built on the reference
/// frequency omega0 = Omega(0).
struct InvariantCoefficients {
    Complex u;
    Complex v;
    double omega0 = 0.0;

    /// |u|^2 - |v|^2, which is 1 for every solution with Wronskian -2i.
    double commutator() const { return std::norm(u) - std::norm(v); }
};

struct FirstMoments {
    double q_mean = 0.0;
    double p_mean = 0.0;
};

/// Position variance, momentum variance and the symmetrised covariance
/// c_qp = <qp + pq>/2 - <q><p>.
struct CovarianceState {
    double sq2 = 0.0;
    double sp2 = 0.0;
    double cqp = 0.0;

    double det() const { return sq2 * sp2 - cqp * cqp; }
};

/// Expectations of the two Hermitian invariants Q0(t), P0(t).
struct ConservedPair {
    double q0 = 0.0;
    double p0 = 0.0;
};

InvariantCoefficients invariant_coefficients(const ClassicalAmplitude& amp, double omega0);
InvariantCoefficients invariant_coefficients(double t, const OscParams& p);

ConservedPair conserved_pair(SmusState s, double t, const OscParams& p);

/// <q> = sqrt(hbar/2m) (eps z* + eps* z),  <p> = sqrt(hbar m/2) (eps' z* + eps'* z).
FirstMoments first_moments(SmusState s, double t, const OscParams& p);
FirstMoments first_moments(SmusState s, const ClassicalAmplitude& amp, const OscParams& p);

/// First moments for an arbitrary quadratic Hamiltonian with coefficients
/// a(t), b(t) and a'(t). Requires coeffs.a > 0.
FirstMoments general_first_moments(SmusState s, const ClassicalAmplitude& amp,
                                   const QuadraticCoefficients& coeffs, double hbar);

/// sq2 = hbar |eps|^2 / 2m,  sp2 = (hbar m / 2)(1/|eps|^2 + r'^2),
/// cqp = (hbar / 2) |eps| r'  with r = |eps|.
CovarianceState second_moments(double t, const OscParams& p);
CovarianceState second_moments(const ClassicalAmplitude& amp, const OscParams& p);

/// Second moments for an arbitrary quadratic Hamiltonian. The covariance
/// carries the sign of -(b r - r'/2 - a' r / 4a). Requires coeffs.a > 0.
CovarianceState general_second_moments(const ClassicalAmplitude& amp,
                                       const QuadraticCoefficients& coeffs, double hbar);

/// Variances in units of the instantaneous coherent-state values:
/// sq = m Omega(t) sq2 / (hbar/2) and sp = sp2 / (m Omega(t) hbar/2).
/// Both are 1 for a coherent state.
struct SqueezeRatios {
    double sq = 0.0;
    double sp = 0.0;
};

SqueezeRatios squeeze_ratios(double t, const OscParams& p);

/// A zero of c_qp(t) after the switch.
struct CoherenceEvent {
    int index = 0;            ///< k in t = pi/(2w) + k pi/(2 Omega_after)
    double t = 0.0;           ///< located zero
    double sq_ratio = 0.0;    ///< m Omega(t) sq2 / (hbar/2)
    double sp_ratio = 0.0;    ///< sp2 / (m Omega(t) hbar/2)
    double cqp = 0.0;
    double det_residual = 0.0;  ///< |sq2 sp2 - cqp^2 - hbar^2/4|
    double printed_t = 0.0;     ///< printed_coherence_time(index)
    double printed_offset = 0.0;
};

struct CoherenceScan {
    /// alpha == 0: c_qp vanishes identically and squeeze_ratios() is (1, 1)
    /// everywhere, so no events are listed.
    bool always_coherent = false;
    std::vector<CoherenceEvent> events;
};

/// Finds every zero of c_qp(t) with t in (pi/(2 omega), t_hi] intersected
/// with [t_lo, t_hi], by sign-bracketed root finding on d|eps|/dt.
/// Requires pi/(2 omega) <= t_lo < t_hi; throws RangeError otherwise.
CoherenceScan coherence_scan(const OscParams& p, double t_lo, double t_hi);

/// The closed-form instants printed for the coherent states,
///   t_n = pi/(2w) + (1/2 + n) pi / (4 w sqrt(1 - a w/(1 + a w)^2)),  n >= 1.
double printed_coherence_time(int n, const OscParams& p);

}  // namespace switchosc
