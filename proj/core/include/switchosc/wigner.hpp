#pragma once

#include <cstddef>
#include <iosfwd>
#include <utility>
#include <vector>

#include "switchosc/classical.hpp"
#include "switchosc/profile.hpp"
#include "switchosc/quantum.hpp"

namespace switchosc {

/// Gaussian Wigner function of a pure state with the given moments,
///   W = 1/(pi hbar) exp{-(2/hbar^2)[sq2 dp^2 - 2 cqp dp dq + sp2 dq^2]}.
/// Throws DomainError if sq2 sp2 - cqp^2 differs from hbar^2/4 by more than
/// a relative 1e-6.
double wigner_value(double q, double p, const FirstMoments& fm, const CovarianceState& cov,
                    double hbar);

/// The prefactor normalising wigner_value, 1/(pi hbar).
double wigner_peak(double hbar);

/// Uniform axis x_i = start + i * step, i in [0, size).
struct Axis {
    double start = 0.0;
    double step = 0.0;
    std::size_t size = 0;

    double operator[](std::size_t i) const { return start + static_cast<double>(i) * step; }
};

struct WignerMeta {
    double t = 0.0;
    OscParams params;
    Complex z;
};

/// Row-major samples: values[iq * p_axis.size + ip] = W(q_i, p_j).
struct WignerGrid {
    Axis q_axis;
    Axis p_axis;
    std::vector<double> values;
    WignerMeta meta;

    double at(std::size_t iq, std::size_t ip) const { return values[iq * p_axis.size + ip]; }
};

/// Samples W on nq x np points spanning +-n_sigma standard deviations around
/// (<q>(t), <p>(t)). Requires nq, np >= 16 and n_sigma >= 3.
WignerGrid wigner_grid(double t, SmusState s, const OscParams& p, double n_sigma_q,
                       double n_sigma_p, std::size_t nq, std::size_t np);

/// Composite Simpson weights for n >= 3 uniformly spaced points (the last
/// three intervals use Simpson's 3/8 rule when n - 1 is odd).
std::vector<double> simpson_weights(std::size_t n, double step);

/// Integral of the grid values by composite Simpson in both directions.
double grid_integral(const WignerGrid& g);

/// Means and covariances of the grid, by the same quadrature. Throws
/// NotNormalized if the integral is not within 1e-4 of one.
std::pair<FirstMoments, CovarianceState> grid_moments(const WignerGrid& g);

/// CSV: '#' metadata comments, a "q,p,W" header, then one row per sample
/// in row-major order, 17 significant digits.
void write_grid_csv(std::ostream& os, const WignerGrid& g);
WignerGrid read_grid_csv(std::istream& is);

/// JSON object with "meta", "q_axis", "p_axis" and row-major "values".
void write_grid_json(std::ostream& os, const WignerGrid& g);

}  // namespace switchosc
