#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "zetafunc/numerics.hpp"

using namespace zetafunc;

TEST_CASE("compensated_sum basics") {
    std::vector<Cplx> v{{1, 0}, {2, 0}, {3, 0}};
    CHECK(compensated_sum(std::span<const Cplx>(v)) == Cplx{6.0, 0.0});

    std::vector<Cplx> empty;
    CHECK(compensated_sum(std::span<const Cplx>(empty)) == Cplx{0.0, 0.0});

    // exact in rational arithmetic: 1e16 + 1 - 1e16 = 1
    std::vector<Cplx> hard{{1e16, 0}, {1, 0}, {-1e16, 0}};
    CHECK(compensated_sum(std::span<const Cplx>(hard)) == Cplx{1.0, 0.0});
}

TEST_CASE("compensated_sum is permutation-invariant for mild condition numbers") {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> mag(-6.0, 6.0);
    std::uniform_real_distribution<double> sgn(-1.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Cplx> v;
        for (int i = 0; i < 300; ++i)
            v.push_back({sgn(rng) * std::pow(10.0, mag(rng)), sgn(rng) * std::pow(10.0, mag(rng))});
        Cplx base = compensated_sum(std::span<const Cplx>(v));
        for (int rep = 0; rep < 5; ++rep) {
            std::shuffle(v.begin(), v.end(), rng);
            Cplx again = compensated_sum(std::span<const Cplx>(v));
            CHECK(std::abs(again - base) <= 1e-13 * std::max(1.0, std::abs(base)));
        }
    }
}

TEST_CASE("accelerate_alternating on classic real series") {
    // ln 2 = sum (-1)^k/(k+1); oracle value from direct partial sums
    long double ln2_oracle = oracles::alternating_direct([](long k) { return 1.0L / (k + 1); });
    auto r = accelerate_alternating([](long k) { return Cplx{1.0 / (k + 1), 0.0}; }, 1e-12);
    CHECK(std::abs(r.value.real() - static_cast<double>(ln2_oracle)) <= 1e-12);
    CHECK(std::abs(r.value.real() - 0.6931471805599453) <= 1e-12);
    CHECK(r.error_bound <= 1e-12);

    // eta(2) = pi^2/12
    auto r2 = accelerate_alternating([](long k) { return Cplx{1.0 / ((k + 1.0) * (k + 1.0)), 0.0}; },
                                     1e-12);
    CHECK(std::abs(r2.value.real() - oracles::kPi * oracles::kPi / 12.0) <= 1e-12);

    // geometric: sum (-1)^k 2^-k = 2/3
    auto r3 = accelerate_alternating([](long k) { return Cplx{std::pow(2.0, -double(k)), 0.0}; },
                                     1e-12);
    CHECK(std::abs(r3.value.real() - 2.0 / 3.0) <= 1e-12);
}

TEST_CASE("accelerate_alternating reproduces direct partial sums") {
    // random inverse-power series checked against the long-double oracle
    for (double p : {1.5, 2.5, 3.0}) {
        long double direct = oracles::alternating_direct(
            [p](long k) { return powl(k + 1.0L, (long double)-p); });
        auto acc = accelerate_alternating(
            [p](long k) { return Cplx{std::pow(k + 1.0, -p), 0.0}; }, 1e-12);
        CHECK(std::abs(acc.value.real() - double(direct)) <= 1e-12);
    }
}

TEST_CASE("accelerate_alternating complex path") {
    // sum (-1)^k (k+1)^{-s} at s = 0.8 + 1.3i, oracle at long-double via averaging
    Cplx s{0.8, 1.3};
    auto term = [s](long k) { return std::pow(Cplx(k + 1.0, 0.0), -s); };
    auto est = accelerate_alternating(term, 1e-11);
    long double re = oracles::alternating_direct(
        [s](long k) { return (long double)std::pow(Cplx(k + 1.0, 0.0), -s).real(); });
    long double im = oracles::alternating_direct(
        [s](long k) { return (long double)std::pow(Cplx(k + 1.0, 0.0), -s).imag(); });
    CHECK(std::abs(est.value - Cplx{double(re), double(im)}) <= 1e-10);
}

TEST_CASE("accelerate_alternating flags divergence") {
    CHECK_THROWS_AS(accelerate_alternating([](long k) { return Cplx{std::exp(0.1 * k), 1.0}; },
                                           1e-10, 4096),
                    non_convergent_error);
}

TEST_CASE("bilateral_power_sum matches 1/sin^2 at m=2") {
    // sum_{k in Z} 1/(u+k pi)^2 = 1/sin^2(u)
    double pi = oracles::kPi;
    CHECK(std::abs(bilateral_power_sum(Cplx{pi / 2, 0}, 2) - Cplx{1.0, 0.0}) <= 1e-12);
    CHECK(std::abs(bilateral_power_sum(Cplx{pi / 4, 0}, 2) - Cplx{2.0, 0.0}) <= 1e-12);

    std::mt19937 rng(55);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    int done = 0;
    while (done < 100) {
        double ur = (u01(rng) - 0.5) * 20.0;
        double dist = std::fabs(ur - pi * std::nearbyint(ur / pi));
        if (dist < 0.1) continue;
        Cplx v = bilateral_power_sum(Cplx{ur, 0}, 2);
        double ref = 1.0 / (std::sin(ur) * std::sin(ur));
        CHECK(std::abs(v - Cplx{ref, 0.0}) <= 1e-12 * std::max(1.0, ref));
        ++done;
    }
}

TEST_CASE("bilateral_power_sum against brute force at higher order") {
    // m = 3 and m = 5 at a few complex points, brute symmetric sum oracle
    auto brute = [](Cplx u, int m, long K) {
        std::complex<long double> acc{0.0L, 0.0L};
        std::complex<long double> ul{(long double)u.real(), (long double)u.imag()};
        for (long k = -K; k <= K; ++k) {
            std::complex<long double> d = ul + (long double)(k)*3.14159265358979323846264338328L;
            std::complex<long double> p = d * d * d;
            if (m == 5) p *= d * d;
            acc += 1.0L / p;
        }
        return Cplx{(double)acc.real(), (double)acc.imag()};
    };
    for (Cplx u : {Cplx{1.0, 0.0}, Cplx{0.4, 0.3}, Cplx{-2.2, -0.7}}) {
        for (int m : {3, 5}) {
            Cplx v = bilateral_power_sum(u, m);
            Cplx b = brute(u, m, 2'000'000);
            CHECK(std::abs(v - b) <= 2e-12 * std::max(1.0, std::abs(b)));
        }
    }
}

TEST_CASE("bilateral_power_sum rejects lattice nodes") {
    CHECK_THROWS_AS(bilateral_power_sum(Cplx{0.0, 0.0}, 2), pole_error);
    CHECK_THROWS_AS(bilateral_power_sum(Cplx{oracles::kPi, 0.0}, 3), pole_error);
    CHECK_THROWS_AS(bilateral_power_sum(Cplx{0.5, 0.0}, 1), std::invalid_argument);
}
