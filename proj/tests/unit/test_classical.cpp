#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "switchosc/classical.hpp"
#include "switchosc/errors.hpp"
#include "switchosc/oracle.hpp"
#include "test_support.hpp"

using namespace switchosc;
using switchosc::test::figure_params;

namespace {

constexpr Complex kI{0.0, 1.0};
const double kPi = std::numbers::pi;

void check_close(Complex got, Complex want, double tol) {
    INFO("got " << got << " want " << want);
    CHECK(std::abs(got - want) < tol);
}

}  // namespace

TEST_CASE("epsilon at t = 0 matches the initial conditions") {
    const auto s = epsilon(0.0, figure_params());
    check_close(s.eps, std::sqrt(1.5), 1e-15);
    check_close(s.eps_dot, kI * std::sqrt(1.0 / 1.5), 1e-15);
    const auto before = epsilon_on_branch(Region::Before, 0.0, figure_params());
    check_close(before.eps, s.eps, 1e-15);
    check_close(before.eps_dot, s.eps_dot, 1e-15);
}

TEST_CASE("epsilon against an independent high-precision ODE solution") {
    // mpmath odefun, 25 digits, restarted at each junction.
    const auto p = figure_params();
    struct Ref {
        double t;
        Complex eps, eps_dot;
    };
    const Ref refs[] = {
        {-1.0, {0.7785364969659427545, -0.7146951089768473965}, {0.8338109604729886293, 0.5190243313106285030}},
        {1.0, {0.7916515809029674452, 0.7205907752095129292}, {-0.7858475648862589750, 0.5478742220502990048}},
        {kPi / 2, {0.2842715024847009866, 0.9587438202539251000}, {-0.9587438202539251000, 0.2842715024847009866}},
        {3.0, {-0.9975763506118864051, 0.8500032736564514076}, {-0.6797172712146430840, -0.4232639376903170212}},
    };
    for (const auto& r : refs) {
        const auto s = epsilon(r.t, p);
        INFO("t = " << r.t);
        check_close(s.eps, r.eps, 1e-14);
        check_close(s.eps_dot, r.eps_dot, 1e-14);
    }
}

TEST_CASE("stationary oscillator: eps = exp(i omega t)/sqrt(omega)") {
    for (const double w : {1.0, 2.0, 0.5}) {
        const OscParams p{.m = 1, .hbar = 1, .alpha = 0, .omega = w};
        for (const double t : test::linspace(-6.0, 9.0, 61)) {
            const auto s = epsilon(t, p);
            const Complex want = std::exp(kI * w * t) / std::sqrt(w);
            check_close(s.eps, want, 1e-14);
            check_close(s.eps_dot, kI * w * want, 1e-14);
        }
    }
}

TEST_CASE("phase_integral closed form") {
    const auto p = figure_params();
    CHECK(phase_integral(0.0, p) == 0.0);
    CHECK(phase_integral(kPi / 2, p) == doctest::Approx(1.28254983016186409554).epsilon(1e-15));
    CHECK(phase_integral(kPi / 4, {.m = 1, .hbar = 1, .alpha = 0, .omega = 1}) ==
          doctest::Approx(kPi / 4).epsilon(1e-15));
    // mpmath quadrature at t = 1
    CHECK(phase_integral(1.0, p) == doctest::Approx(0.73844234866073544165).epsilon(1e-15));
}

TEST_CASE("phase_integral rejects times outside the switching interval") {
    const auto p = figure_params();
    CHECK_THROWS_AS(phase_integral(-1e-9, p), RangeError);
    CHECK_THROWS_AS(phase_integral(switch_end(p) + 1e-9, p), RangeError);
}

TEST_CASE("phase_integral agrees with adaptive quadrature and increases") {
    for (const auto& p : test::random_params(20)) {
        const auto integrand = [&p](double s) {
            const double c = std::cos(p.omega * s);
            return 1.0 / (1.0 / p.omega + p.alpha * c * c);
        };
        double prev = -1.0;
        for (const double t : test::linspace(0.0, switch_end(p), 25)) {
            const double closed = phase_integral(t, p);
            CHECK(std::abs(closed - oracle::quadrature(integrand, 0.0, t, 1e-13)) < 1e-12);
            CHECK(closed > prev);
            prev = closed;
        }
    }
}

TEST_CASE("junction_phase") {
    CHECK(junction_phase(figure_params()) == doctest::Approx(1.28254983016186409554).epsilon(1e-15));
    CHECK(junction_phase({.m = 1, .hbar = 1, .alpha = 0, .omega = 1}) ==
          doctest::Approx(kPi / 2).epsilon(1e-15));
    CHECK(junction_phase({.m = 1, .hbar = 1, .alpha = 0.1, .omega = 1}) ==
          doctest::Approx(1.49769553292332770955).epsilon(1e-15));
    CHECK(printed_junction_phase(figure_params()) ==
          doctest::Approx(2.56509966032372819109).epsilon(1e-15));
}

TEST_CASE("wronskian") {
    check_close(wronskian({0.0, 1.0, kI}), -2.0 * kI, 1e-15);
    check_close(wronskian(epsilon(0.0, figure_params())), -2.0 * kI, 1e-14);
    check_close(wronskian(epsilon(3.0, figure_params())), -2.0 * kI, 1e-10);
    // The conjugate solution has the opposite Wronskian.
    const auto s = epsilon(1.3, figure_params());
    check_close(wronskian({s.t, std::conj(s.eps), std::conj(s.eps_dot)}), 2.0 * kI, 1e-14);
}

TEST_CASE("wronskian is -2i everywhere for random parameters") {
    for (const auto& p : test::random_params(40)) {
        for (const double t : test::linspace(-5.0, 10.0, 151))
            CHECK(std::abs(wronskian(epsilon(t, p)) + 2.0 * kI) < 1e-10);
    }
}

TEST_CASE("printed switching derivative keeps the Wronskian but not the derivative") {
    // eps conj(eps') = (sigma sigma') - i for any real slope term, so the
    // Wronskian cannot tell the two factors apart; finite differences can.
    const auto p = figure_params();
    const auto printed = epsilon(0.7, p, Transcription::PrintedDerivative);
    CHECK(std::abs(wronskian(printed) + 2.0 * kI) < 1e-14);
    const auto f = [&](double x) { return epsilon(x, p).eps; };
    const Complex fd = oracle::central_difference(f, 0.7, 1e-5);
    CHECK(std::abs(fd - epsilon(0.7, p).eps_dot) < 1e-9);
    CHECK(std::abs(fd - printed.eps_dot) > 1e-2);
}

TEST_CASE("C1 continuity at both junctions") {
    for (const auto& p : test::random_params(40)) {
        for (const auto [t0, lhs, rhs] : {std::tuple{0.0, Region::Before, Region::Switching},
                                          std::tuple{switch_end(p), Region::Switching, Region::After}}) {
            const auto a = epsilon_on_branch(lhs, t0, p);
            const auto b = epsilon_on_branch(rhs, t0, p);
            CHECK(std::abs(a.eps - b.eps) < 1e-10);
            CHECK(std::abs(a.eps_dot - b.eps_dot) < 1e-10);
        }
    }
}

TEST_CASE("printed after-switch phase is discontinuous") {
    const auto p = figure_params();
    const double end = switch_end(p);
    const auto a = epsilon_on_branch(Region::Switching, end, p);
    const auto b = epsilon_on_branch(Region::After, end, p, Transcription::PrintedPhase);
    CHECK(std::abs(a.eps - b.eps) > 1.0);
}

TEST_CASE("eps' matches central differences of eps") {
    const auto p = figure_params();
    const double h = 1e-5;
    for (const double t : test::linspace(-5.0, 10.0, 301)) {
        // Stay on one branch near the junctions.
        const Region r = region_of(t, p);
        const auto f = [&](double x) { return epsilon_on_branch(r, x, p).eps; };
        const Complex fd = oracle::central_difference(f, t, h);
        CHECK(std::abs(fd - epsilon(t, p).eps_dot) < 1e-7);
    }
}

TEST_CASE("envelope") {
    const auto p = figure_params();
    const auto e0 = envelope(0.0, p);
    CHECK(e0.r == doctest::Approx(std::sqrt(1.5)).epsilon(1e-15));
    CHECK(std::abs(e0.r_dot) < 1e-15);
    const OscParams flat{.m = 1, .hbar = 1, .alpha = 0, .omega = 4};
    for (const double t : {-2.0, 0.3, 7.0}) {
        CHECK(envelope(t, flat).r == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(std::abs(envelope(t, flat).r_dot) < 1e-14);
    }
    // After-switch extremum at a quarter period of Omega_after.
    const double t_ext = kPi / 2 + kPi / (2 * std::sqrt(0.5));
    CHECK(std::abs(envelope(t_ext, p).r_dot) < 1e-14);
    const double found = oracle::find_root([&](double t) { return envelope(t, p).r_dot; },
                                           t_ext - 0.3, t_ext + 0.3, 1e-13);
    CHECK(std::abs(found - t_ext) < 1e-10);
}

TEST_CASE("envelope slope matches finite differences of |eps|") {
    const auto p = figure_params();
    for (const double t : test::linspace(-4.9, 9.9, 149)) {
        const Region r = region_of(t, p);
        const auto f = [&](double x) { return std::abs(epsilon_on_branch(r, x, p).eps); };
        CHECK(std::abs(oracle::central_difference(f, t, 1e-5) - envelope(t, p).r_dot) < 1e-8);
    }
}

TEST_CASE("switching envelope solves the Ermakov equation") {
    for (const auto& p : test::random_params(20)) {
        const double k = p.alpha * p.omega;
        for (const double t : test::linspace(0.0, switch_end(p), 50)) {
            const double w = p.omega;
            const double c = std::cos(w * t);
            const double sigma = std::sqrt(1.0 / w + p.alpha * c * c);
            const double sigma_dot = -0.5 * k * std::sin(2 * w * t) / sigma;
            const double sigma_ddot = (-k * w * std::cos(2 * w * t) - sigma_dot * sigma_dot) / sigma;
            const double om = omega_of(t, p);
            const double residual = sigma_ddot + om * om * sigma - 1.0 / std::pow(sigma, 3);
            CHECK(std::abs(residual) < 1e-9 * std::max(1.0, w * w * sigma));
            CHECK(std::abs(epsilon(t, p).eps) == doctest::Approx(sigma).epsilon(1e-14));
        }
    }
}

TEST_CASE("|eps| never vanishes") {
    for (const auto& p : test::random_params(20))
        for (const double t : test::linspace(-10.0, 20.0, 301)) CHECK(std::abs(epsilon(t, p).eps) > 0.0);
}
