#include "switchosc/wigner.hpp"

#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "switchosc/errors.hpp"
#include "switchosc/format.hpp"

namespace switchosc {

double wigner_peak(double hbar) { return 1.0 / (std::numbers::pi * hbar); }

double wigner_value(double q, double p, const FirstMoments& fm, const CovarianceState& cov,
                    double hbar) {
    const double pure_det = 0.25 * hbar * hbar;
    if (!(std::abs(cov.det() / pure_det - 1.0) <= 1e-6)) {
        std::ostringstream msg;
        msg << "wigner_value: covariance determinant " << cov.det()
            << " is not hbar^2/4 = " << pure_det << "; the state is not a pure SMUS";
        throw DomainError(msg.str());
    }
    const double dq = q - fm.q_mean;
    const double dp = p - fm.p_mean;
    const double quad = cov.sq2 * dp * dp - 2.0 * cov.cqp * dp * dq + cov.sp2 * dq * dq;
    return wigner_peak(hbar) * std::exp(-2.0 / (hbar * hbar) * quad);
}

WignerGrid wigner_grid(double t, SmusState s, const OscParams& p, double n_sigma_q,
                       double n_sigma_p, std::size_t nq, std::size_t np) {
    validate_params(p);
    if (nq < 16 || np < 16) throw DomainError("wigner_grid: need at least 16 points per axis");
    if (!(n_sigma_q >= 3.0) || !(n_sigma_p >= 3.0))
        throw DomainError("wigner_grid: half widths must be at least 3 standard deviations");

    const ClassicalAmplitude amp = epsilon(t, p);
    const FirstMoments fm = first_moments(s, amp, p);
    const CovarianceState cov = second_moments(amp, p);
    const double hq = n_sigma_q * std::sqrt(cov.sq2);
    const double hp = n_sigma_p * std::sqrt(cov.sp2);

    WignerGrid g;
    g.q_axis = {fm.q_mean - hq, 2.0 * hq / static_cast<double>(nq - 1), nq};
    g.p_axis = {fm.p_mean - hp, 2.0 * hp / static_cast<double>(np - 1), np};
    g.meta = {t, p, s.z};
    g.values.resize(nq * np);
    for (std::size_t i = 0; i < nq; ++i)
        for (std::size_t j = 0; j < np; ++j)
            g.values[i * np + j] = wigner_value(g.q_axis[i], g.p_axis[j], fm, cov, p.hbar);
    return g;
}

std::vector<double> simpson_weights(std::size_t n, double step) {
    if (n < 3) throw DomainError("simpson_weights: need at least 3 points");
    std::vector<double> w(n, 0.0);
    const std::size_t intervals = n - 1;
    const std::size_t simpson_intervals = intervals % 2 == 0 ? intervals : intervals - 3;
    for (std::size_t i = 0; i + 2 <= simpson_intervals; i += 2) {
        w[i] += step / 3.0;
        w[i + 1] += 4.0 * step / 3.0;
        w[i + 2] += step / 3.0;
    }
    if (simpson_intervals != intervals) {
        const std::size_t i = simpson_intervals;
        w[i] += 3.0 * step / 8.0;
        w[i + 1] += 9.0 * step / 8.0;
        w[i + 2] += 9.0 * step / 8.0;
        w[i + 3] += 3.0 * step / 8.0;
    }
    return w;
}

double grid_integral(const WignerGrid& g) {
    const auto wq = simpson_weights(g.q_axis.size, g.q_axis.step);
    const auto wp = simpson_weights(g.p_axis.size, g.p_axis.step);
    double sum = 0.0;
    for (std::size_t i = 0; i < wq.size(); ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < wp.size(); ++j) row += wp[j] * g.at(i, j);
        sum += wq[i] * row;
    }
    return sum;
}

std::pair<FirstMoments, CovarianceState> grid_moments(const WignerGrid& g) {
    const double norm = grid_integral(g);
    if (!(std::abs(norm - 1.0) <= 1e-4)) {
        std::ostringstream msg;
        msg << "grid_moments: grid integrates to " << norm << ", not 1";
        throw NotNormalized(msg.str());
    }
    const auto wq = simpson_weights(g.q_axis.size, g.q_axis.step);
    const auto wp = simpson_weights(g.p_axis.size, g.p_axis.step);

    const auto integrate = [&](auto&& f) {
        double sum = 0.0;
        for (std::size_t i = 0; i < wq.size(); ++i)
            for (std::size_t j = 0; j < wp.size(); ++j)
                sum += wq[i] * wp[j] * g.at(i, j) * f(g.q_axis[i], g.p_axis[j]);
        return sum / norm;
    };
    FirstMoments fm;
    fm.q_mean = integrate([](double q, double) { return q; });
    fm.p_mean = integrate([](double, double p) { return p; });
    CovarianceState cov;
    cov.sq2 = integrate([&](double q, double) { return (q - fm.q_mean) * (q - fm.q_mean); });
    cov.sp2 = integrate([&](double, double p) { return (p - fm.p_mean) * (p - fm.p_mean); });
    cov.cqp = integrate([&](double q, double p) { return (q - fm.q_mean) * (p - fm.p_mean); });
    return {fm, cov};
}

void write_grid_csv(std::ostream& os, const WignerGrid& g) {
    const auto& m = g.meta;
    os << "# switchosc wigner grid\n"
       << "# t=" << format_number(m.t) << '\n'
       << "# mass=" << format_number(m.params.m) << " hbar=" << format_number(m.params.hbar)
       << " alpha=" << format_number(m.params.alpha) << " omega=" << format_number(m.params.omega)
       << '\n'
       << "# z_re=" << format_number(m.z.real()) << " z_im=" << format_number(m.z.imag()) << '\n'
       << "# q_axis start=" << format_number(g.q_axis.start)
       << " step=" << format_number(g.q_axis.step) << " size=" << g.q_axis.size << '\n'
       << "# p_axis start=" << format_number(g.p_axis.start)
       << " step=" << format_number(g.p_axis.step) << " size=" << g.p_axis.size << '\n'
       << "q,p,W\n";
    for (std::size_t i = 0; i < g.q_axis.size; ++i)
        for (std::size_t j = 0; j < g.p_axis.size; ++j)
            os << format_number(g.q_axis[i]) << ',' << format_number(g.p_axis[j]) << ','
               << format_number(g.at(i, j)) << '\n';
}

namespace {

// Reads "key=value" tokens following a fixed prefix in a comment line.
double read_field(const std::string& line, const std::string& key) {
    const auto pos = line.find(' ' + key + '=');
    if (pos == std::string::npos) throw DomainError("read_grid_csv: missing field " + key);
    return std::stod(line.substr(pos + key.size() + 2));
}

Axis read_axis(const std::string& line) {
    return {read_field(line, "start"), read_field(line, "step"),
            static_cast<std::size_t>(read_field(line, "size"))};
}

}  // namespace

WignerGrid read_grid_csv(std::istream& is) {
    WignerGrid g;
    std::string line;
    bool header_seen = false;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line.front() == '#') {
            if (line.rfind("# t=", 0) == 0) g.meta.t = std::stod(line.substr(4));
            else if (line.rfind("# mass=", 0) == 0) {
                const std::string padded = ' ' + line.substr(2);
                g.meta.params = {read_field(padded, "mass"), read_field(padded, "hbar"),
                                 read_field(padded, "alpha"), read_field(padded, "omega")};
            } else if (line.rfind("# z_re=", 0) == 0) {
                const std::string padded = ' ' + line.substr(2);
                g.meta.z = {read_field(padded, "z_re"), read_field(padded, "z_im")};
            } else if (line.rfind("# q_axis", 0) == 0) g.q_axis = read_axis(line);
            else if (line.rfind("# p_axis", 0) == 0) g.p_axis = read_axis(line);
            continue;
        }
        if (!header_seen) {
            if (line != "q,p,W") throw DomainError("read_grid_csv: expected header q,p,W");
            header_seen = true;
            g.values.reserve(g.q_axis.size * g.p_axis.size);
            continue;
        }
        const auto last = line.rfind(',');
        if (last == std::string::npos) throw DomainError("read_grid_csv: malformed row");
        g.values.push_back(std::stod(line.substr(last + 1)));
    }
    if (g.values.size() != g.q_axis.size * g.p_axis.size)
        throw DomainError("read_grid_csv: row count does not match axis sizes");
    return g;
}

void write_grid_json(std::ostream& os, const WignerGrid& g) {
    using nlohmann::ordered_json;
    const auto axis = [](const Axis& a) {
        return ordered_json{{"start", a.start}, {"step", a.step}, {"size", a.size}};
    };
    ordered_json doc;
    doc["meta"] = {{"t", g.meta.t},
                   {"mass", g.meta.params.m},
                   {"hbar", g.meta.params.hbar},
                   {"alpha", g.meta.params.alpha},
                   {"omega", g.meta.params.omega},
                   {"z_re", g.meta.z.real()},
                   {"z_im", g.meta.z.imag()}};
    doc["q_axis"] = axis(g.q_axis);
    doc["p_axis"] = axis(g.p_axis);
    doc["values"] = g.values;
    os << doc.dump() << '\n';
}

}  // namespace switchosc
