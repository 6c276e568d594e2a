#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "zetafunc/differentiation.hpp"
#include "zetafunc/special.hpp"

using namespace zetafunc;
using oracles::kPi;

TEST_CASE("cauchy_derivative on polynomials is exact") {
    // f(z) = z^3, third derivative = 6 anywhere
    auto cube = [](Cplx z) { return z * z * z; };
    auto d = cauchy_derivative(cube, {Cplx{0.7, 0.0}, 0.5, 128}, 3);
    CHECK(std::abs(d.value - Cplx{6.0, 0.0}) <= 1e-12);

    // general polynomials of degree <= 8, any order <= 8, radii in [0.1, 1]:
    // the trapezoid rule has no truncation error here, so the result must be
    // exact up to the rounding envelope m! * max|f| * eps / r^m.
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> coef(-3.0, 3.0), rad(0.1, 1.0);
    for (int trial = 0; trial < 15; ++trial) {
        std::vector<double> c(9);
        for (auto& v : c) v = coef(rng);
        auto poly = [&c](Cplx z) {
            Cplx acc{0, 0};
            for (int i = 8; i >= 0; --i) acc = acc * z + c[i];
            return acc;
        };
        Cplx center{coef(rng) * 0.3, coef(rng) * 0.3};
        double r = rad(rng);
        double ring_max = 0.0;
        for (int j = 0; j < 32; ++j) {
            double th = 2 * oracles::kPi * j / 32;
            ring_max = std::max(ring_max, std::abs(poly(center + r * Cplx{std::cos(th), std::sin(th)})));
        }
        for (int order = 1; order <= 8; ++order) {
            std::vector<double> dc(c.begin(), c.end());
            for (int rep = 0; rep < order; ++rep) {
                for (std::size_t i = 1; i < dc.size(); ++i) dc[i - 1] = dc[i] * double(i);
                dc.pop_back();
            }
            Cplx expect{0, 0};
            for (int i = int(dc.size()) - 1; i >= 0; --i) expect = expect * center + dc[i];
            auto got = cauchy_derivative(poly, {center, r, 64}, order);
            double fact = 1.0;
            for (int i = 2; i <= order; ++i) fact *= i;
            double rounding = 64.0 * 2.2e-16 * fact * ring_max / std::pow(r, order);
            CHECK(std::abs(got.value - expect) <= 1e-12 * std::max(1.0, std::abs(expect)) + rounding);
        }
    }
}

TEST_CASE("cauchy_derivative of exp and ln_gamma") {
    auto d = cauchy_derivative([](Cplx z) { return std::exp(z); }, {Cplx{0, 0}, 1.0, 128}, 5);
    CHECK(std::abs(d.value - Cplx{1.0, 0.0}) <= 1e-13);

    // d^3/ds^3 lnGamma at 1/2 equals psi''(1/2) = -14 zeta(3)
    auto lg = [](Cplx z) { return ln_gamma(z).value; };
    auto d3 = cauchy_derivative(lg, {Cplx{0.5, 0.0}, 0.4, 128}, 3);
    long double brute = -2.0L * oracles::hurwitz_direct(3, 0.5L);
    CHECK(std::abs(d3.value - Cplx{(double)brute, 0.0}) <= 1e-9);

    // matches polygamma for m in {2,4,6} at several abscissae
    for (int m : {2, 4, 6}) {
        for (double x : {0.25, 1.0 / 3.0, 0.5, 0.75, 2.0}) {
            auto dm = cauchy_derivative(lg, {Cplx{x, 0.0}, 0.8 * std::min(0.4, x), 256}, m + 1);
            Cplx ref = polygamma(m, Cplx{x, 0.0}).value;
            CHECK(std::abs(dm.value - ref) <=
                  std::max(1e-9, dm.error_estimate) * std::max(1.0, std::abs(ref)));
        }
    }
}

TEST_CASE("cauchy_derivative guards") {
    auto f = [](Cplx z) { return 1.0 / z; };
    std::vector<Cplx> sing{Cplx{0.0, 0.0}};
    CHECK_THROWS_AS(
        cauchy_derivative(f, {Cplx{0.1, 0.0}, 0.5, 128}, 2, std::span<const Cplx>(sing)),
        singularity_error);
    CHECK_THROWS_AS(cauchy_derivative(f, {Cplx{1.0, 0.0}, 0.5, 100}, 2), std::invalid_argument);
    CHECK_THROWS_AS(cauchy_derivative(f, {Cplx{1.0, 0.0}, 0.5, 128}, 0), std::invalid_argument);
    // a branch cut crossing the disk trips the two-resolution check
    auto cut = [](Cplx z) { return std::sqrt(z); };
    CHECK_THROWS_AS(cauchy_derivative(cut, {Cplx{0.1, 0.0}, 0.5, 128}, 2), non_convergent_error);
}

TEST_CASE("trig_log_derivative closed forms") {
    // first derivative of log sin(pi s/2) at 1/2: (pi/2) cot(pi/4) = pi/2
    Cplx d1 = trig_log_derivative(TrigKind::sin_half, Cplx{0.5, 0}, 1);
    CHECK(std::abs(d1 - Cplx{kPi / 2, 0}) <= 1e-13);

    // third derivative of log cos(pi s/2) at 1/2 -> -pi^3/2, finite-difference oracle
    Cplx d3 = trig_log_derivative(TrigKind::cos_half, Cplx{0.5, 0}, 3);
    CHECK(std::abs(d3 - Cplx{-kPi * kPi * kPi / 2.0, 0}) <= 1e-11);
    auto logcos = [](long double s) { return logl(cosl(oracles::kPi * s / 2.0L)); };
    long double fd = oracles::central_derivative(logcos, 0.5L, 3, 1e-2L);
    CHECK(std::abs(d3 - Cplx{(double)fd, 0}) <= 1e-7);

    // log tan = log sin - log cos termwise
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> sx(0.05, 0.95), sy(-1.0, 1.0);
    for (int trial = 0; trial < 25; ++trial) {
        Cplx s{sx(rng), sy(rng)};
        for (int m : {1, 3, 5}) {
            Cplx t = trig_log_derivative(TrigKind::tan_half, s, m);
            Cplx diff = trig_log_derivative(TrigKind::sin_half, s, m) -
                        trig_log_derivative(TrigKind::cos_half, s, m);
            CHECK(std::abs(t - diff) <= 1e-12 * std::max(1.0, std::abs(t)));
            Cplx c = trig_log_derivative(TrigKind::cot_half, s, m);
            CHECK(std::abs(c + t) <= 1e-12 * std::max(1.0, std::abs(t)));
        }
    }
}

TEST_CASE("trig_log_derivative matches finite differences") {
    // the oracle runs in double-double so the stencil noise stays below the
    // 1e-7 agreement requirement even at order 5
    using zetafunc::detail::dd;
    auto logsin_dd = [](dd s) {
        dd u = zetafunc::detail::DD_PI * s * 0.5;
        dd sn, cs;
        zetafunc::detail::dd_sincos(u, sn, cs);
        return zetafunc::detail::dd_log(sn);
    };
    auto fd_oracle = [&](double x, int m, double h) {
        auto diff = [&](double step) {
            dd acc(0.0);
            double binom = 1.0;
            for (int i = 0; i <= m; ++i) {
                double node = m / 2.0 - i;
                double sgn = (i % 2 == 0) ? 1.0 : -1.0;
                acc = acc + logsin_dd(dd(x) + dd(node * step)) * (sgn * binom);
                binom = binom * (m - i) / (i + 1.0);
            }
            dd hp(1.0);
            for (int i = 0; i < m; ++i) hp = hp * step;
            return acc / hp;
        };
        dd tab[4];
        for (int k = 0; k < 4; ++k) tab[k] = diff(h / std::pow(2.0, k));
        int len = 4;
        for (int lev = 1; lev < 4; ++lev) {
            double fac = std::pow(4.0, lev);
            for (int i = 0; i + 1 < len; ++i)
                tab[i] = (tab[i + 1] * fac - tab[i]) / (fac - 1.0);
            --len;
        }
        return zetafunc::detail::to_double(tab[0]);
    };

    std::mt19937 rng(23);
    std::uniform_real_distribution<double> sx(0.1, 0.9);
    for (int trial = 0; trial < 20; ++trial) {
        double s = sx(rng);
        for (int m = 2; m <= 5; ++m) {
            Cplx got = trig_log_derivative(TrigKind::sin_half, Cplx{s, 0}, m);
            double fd = fd_oracle(s, m, 1e-2);
            CHECK(std::abs(got - Cplx{fd, 0}) <= 1e-7 * std::max(1.0, std::abs(got)));
        }
    }
}

TEST_CASE("trig derivative reflection route equals the polygamma chain") {
    // d^m/ds^m log sin(pi s/2) = (pi/2)^m / pi^m [(-1)^{m-1} psi^{(m-1)}(1-s/2)
    //                                             - psi^{(m-1)}(s/2)]
    std::mt19937 rng(29);
    std::uniform_real_distribution<double> sx(0.1, 1.9);
    for (int trial = 0; trial < 20; ++trial) {
        double s = sx(rng);
        if (std::fabs(s - 1.0) < 0.05 || s < 0.05) continue;
        for (int m : {2, 3, 4, 5}) {
            Cplx lhs = trig_log_derivative(TrigKind::sin_half, Cplx{s, 0}, m);
            double sgn = (m % 2 == 0) ? -1.0 : 1.0;
            Cplx rhs = std::pow(0.5, m) *
                       (sgn * polygamma(m - 1, Cplx{1.0 - s / 2.0, 0}).value -
                        polygamma(m - 1, Cplx{s / 2.0, 0}).value);
            CHECK(std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, std::abs(lhs)));
        }
    }
}

TEST_CASE("trig_log_derivative pole lattice") {
    CHECK_THROWS_AS(trig_log_derivative(TrigKind::sin_half, Cplx{0.0, 0.0}, 3), pole_error);
    CHECK_THROWS_AS(trig_log_derivative(TrigKind::cos_half, Cplx{1.0, 0.0}, 3), pole_error);
    CHECK_THROWS_AS(trig_log_derivative(TrigKind::tan_half, Cplx{1.0, 0.0}, 2), pole_error);
}

TEST_CASE("log_zeta_ratio values") {
    CHECK(std::abs(log_zeta_ratio(Cplx{0.5, 0})) <= 1e-13);

    // s=2: log(zeta(2)/zeta(-1)) = log(-2 pi^2), imaginary part +pi
    Cplx v = log_zeta_ratio(Cplx{2, 0});
    CHECK(std::abs(v - Cplx{std::log(2.0 * kPi * kPi), kPi}) <= 1e-12);

    CHECK_THROWS_AS(log_zeta_ratio(Cplx{-2, 0}), near_zero_error);  // trivial zero
    CHECK_THROWS_AS(log_zeta_ratio(Cplx{1.0, 0}), pole_error);
}

TEST_CASE("log_zeta_ratio_derivative closed form at s=1/2") {
    // psi''(1/2) + d^3 log cos(pi s/2)|_{1/2} = -14 zeta(3) - pi^3/2
    auto d = log_zeta_ratio_derivative(Cplx{0.5, 0}, 1, DerivMethod::closed_form);
    long double brute = -2.0L * oracles::hurwitz_direct(3, 0.5L);  // psi''(1/2)
    Cplx expect{(double)brute - kPi * kPi * kPi / 2.0, 0.0};
    CHECK(std::abs(d.value - expect) <= 1e-10);
    CHECK(std::abs(d.value - Cplx{-32.331934984384235, 0}) <= 1e-10);
}

TEST_CASE("log_zeta_ratio_derivative contour agrees with closed form") {
    for (double s : {0.5, 0.25, 0.7, 0.05, 0.95}) {
        for (int n : {1, 2, 3}) {
            auto cf = log_zeta_ratio_derivative(Cplx{s, 0}, n, DerivMethod::closed_form);
            auto ct = log_zeta_ratio_derivative(Cplx{s, 0}, n, DerivMethod::contour);
            double budget = cf.error_estimate + ct.error_estimate +
                            1e-10 * std::max(1.0, std::abs(cf.value));
            CHECK(std::abs(cf.value - ct.value) <= budget);
        }
    }
    // and off the real axis inside the branch window
    auto cf = log_zeta_ratio_derivative(Cplx{0.4, 0.3}, 1, DerivMethod::closed_form);
    auto ct = log_zeta_ratio_derivative(Cplx{0.4, 0.3}, 1, DerivMethod::contour);
    CHECK(std::abs(cf.value - ct.value) <=
          cf.error_estimate + ct.error_estimate + 1e-10 * std::abs(cf.value));
}

TEST_CASE("log_zeta_ratio_derivative at s=1/4 against brute polygamma") {
    // closed form: psi''(1/4) + d^3 log cos(pi s/2)|_{1/4}
    auto d = log_zeta_ratio_derivative(Cplx{0.25, 0}, 1, DerivMethod::closed_form);
    long double psi2 = -2.0L * oracles::hurwitz_direct(3, 0.25L);
    auto logcos = [](long double s) { return logl(cosl(oracles::kPi * s / 2.0L)); };
    long double trig = oracles::central_derivative(logcos, 0.25L, 3, 1e-2L);
    CHECK(std::abs(d.value - Cplx{(double)(psi2 + trig), 0}) <= 1e-6);
}

TEST_CASE("log_zeta_ratio_derivative input validation") {
    CHECK_THROWS_AS(log_zeta_ratio_derivative(Cplx{0.5, 0}, 6, DerivMethod::closed_form),
                    std::invalid_argument);
    CHECK_THROWS_AS(log_zeta_ratio_derivative(Cplx{0.5, 3.0}, 1, DerivMethod::contour),
                    std::invalid_argument);
}
