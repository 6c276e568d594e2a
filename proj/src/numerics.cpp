#include "zetafunc/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace zetafunc {

namespace {

struct NeumaierAcc {
    double sum = 0.0;
    double comp = 0.0;
    void add(double v) {
        double t = sum + v;
        if (std::fabs(sum) >= std::fabs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }
    double total() const { return sum + comp; }
};

struct CplxAcc {
    NeumaierAcc re, im;
    void add(Cplx v) {
        re.add(v.real());
        im.add(v.imag());
    }
    Cplx total() const { return {re.total(), im.total()}; }
};

// One CVZ pass with n Chebyshev-derived coefficients.
Cplx cvz_pass(const std::function<Cplx(long)>& term, long n) {
    double d = std::pow(3.0 + std::sqrt(8.0), static_cast<double>(n));
    d = (d + 1.0 / d) / 2.0;
    double b = -1.0;
    double c = -d;
    CplxAcc acc;
    for (long k = 0; k < n; ++k) {
        c = b - c;
        acc.add(term(k) * c);
        double kd = static_cast<double>(k);
        double nd = static_cast<double>(n);
        b = (kd + nd) * (kd - nd) * b / ((kd + 0.5) * (kd + 1.0));
    }
    Cplx s = acc.total();
    return s / d;
}

// Euler transform by iterated averaging of partial sums; also reports the
// value one averaging level earlier for the error estimate.
void euler_pass(const std::vector<Cplx>& terms, Cplx& best, Cplx& prev) {
    std::vector<Cplx> row(terms.size());
    Cplx acc{0.0, 0.0};
    double sign = 1.0;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        acc += sign * terms[k];
        row[k] = acc;
        sign = -sign;
    }
    best = row.back();
    prev = best;
    while (row.size() > 1) {
        for (std::size_t i = 0; i + 1 < row.size(); ++i) row[i] = 0.5 * (row[i] + row[i + 1]);
        row.pop_back();
        prev = best;
        best = row.back();
    }
}

bool terms_look_real(const std::function<Cplx(long)>& term) {
    for (long k = 0; k < 6; ++k) {
        Cplx t = term(k);
        if (std::fabs(t.imag()) > 1e-14 * (1.0 + std::fabs(t.real()))) return false;
    }
    return true;
}

}  // namespace

double compensated_sum(std::span<const double> terms) {
    NeumaierAcc acc;
    for (double t : terms) acc.add(t);
    return acc.total();
}

Cplx compensated_sum(std::span<const Cplx> terms) {
    CplxAcc acc;
    for (Cplx t : terms) acc.add(t);
    return acc.total();
}

SeriesEstimate accelerate_alternating(const std::function<Cplx(long)>& term, double target_error,
                                      long cap) {
    if (!(target_error > 0.0)) throw std::invalid_argument("target_error must be positive");

    if (terms_look_real(term)) {
        double scale = std::max({std::abs(term(0)), std::abs(term(1)), 1e-30});
        // relative error of the scheme decays like 2 * (3+sqrt 8)^-n
        long n =
            static_cast<long>(std::ceil(std::log(8.0 * scale / target_error) / 1.7627471740390861)) +
            4;
        n = std::clamp(n, 8L, cap);
        Cplx first = cvz_pass(term, n);
        long n2 = std::min(n + 10, cap);
        Cplx second = cvz_pass(term, n2);
        double est = std::abs(first - second) + 0.125 * target_error;
        if (est > target_error && n2 < cap) {
            long n3 = std::min(n2 + n2 / 2, cap);
            Cplx third = cvz_pass(term, n3);
            est = std::abs(second - third) + 0.125 * target_error;
            return {third, est, n3};
        }
        return {second, est, n2};
    }

    // Complex path: iterated-averaging Euler transform over a growing window.
    long window = 32;
    std::vector<Cplx> terms;
    while (true) {
        while (static_cast<long>(terms.size()) < window)
            terms.push_back(term(static_cast<long>(terms.size())));

        // terms must not keep growing across the window
        double first_mag = std::abs(terms.front());
        double tail_mag = std::abs(terms.back());
        double quarter_mag = std::abs(terms[terms.size() - terms.size() / 4 - 1]);
        if (tail_mag > 1.5 * quarter_mag && tail_mag > 4.0 * first_mag + 1.0)
            throw non_convergent_error("alternating series terms fail to decay");

        Cplx best, prev;
        euler_pass(terms, best, prev);
        double est = 2.0 * std::abs(best - prev) + 1e-18;
        if (est <= target_error || window >= cap) return {best, est, static_cast<long>(terms.size())};
        window = std::min(window * 2, cap);
    }
}

Cplx bilateral_power_sum(Cplx u, int m, double tol) {
    if (m < 2) throw std::invalid_argument("bilateral_power_sum requires m >= 2");
    const double pi = 3.14159265358979323846;
    double knear = std::nearbyint(u.real() / pi);
    Cplx unode = u - pi * knear;
    if (std::abs(unode) < 1e-6) throw pole_error("bilateral sum pole at a lattice node k*pi", u);

    auto ipow = [](Cplx z, int p) {
        Cplx r{1.0, 0.0};
        Cplx b = z;
        int e = p;
        while (e > 0) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    };

    long K = std::lround(std::max(40.0, std::ceil(std::abs(u) / pi) + 40.0));
    for (int attempt = 0; attempt < 10; ++attempt) {
        // Euler-Maclaurin tail from k = K+1 for g(x) = (w + x pi)^-m, applied
        // at w = u (right tail) and w = -u (left tail, times (-1)^m).
        auto tail = [&](Cplx w) {
            Cplx base = w + pi * static_cast<double>(K + 1);
            Cplx inv = 1.0 / base;
            Cplx g = ipow(inv, m);
            double md = static_cast<double>(m);
            Cplx t = g * base / ((md - 1.0) * pi);  // integral term
            t += 0.5 * g;
            t += (1.0 / 12.0) * md * pi * g * inv;
            t -= (1.0 / 720.0) * md * (md + 1.0) * (md + 2.0) * (pi * pi * pi) * g * inv * inv * inv;
            Cplx inv5 = inv * inv * inv * inv * inv;
            t += (1.0 / 30240.0) * md * (md + 1.0) * (md + 2.0) * (md + 3.0) * (md + 4.0) *
                 std::pow(pi, 5) * g * inv5;
            return t;
        };
        // first omitted correction (the B8 term) bounds the truncation error
        double base_mag = std::abs(u + pi * static_cast<double>(K + 1));
        double fac = 1.0;
        for (int i = 0; i < 7; ++i) fac *= static_cast<double>(m + i);
        double err_est =
            2.0 * (1.0 / 1209600.0) * fac * std::pow(pi, 7) * std::pow(base_mag, -(m + 7.0));
        if (err_est > tol) {
            K += K / 2;
            continue;
        }

        std::vector<Cplx> window;
        window.reserve(2 * K + 1);
        for (long k = -K; k <= K; ++k) {
            Cplx denom = u + pi * static_cast<double>(k);
            window.push_back(ipow(1.0 / denom, m));
        }
        Cplx s = compensated_sum(std::span<const Cplx>(window));
        s += tail(u);
        double sgn = (m % 2 == 0) ? 1.0 : -1.0;
        s += sgn * tail(-u);
        return s;
    }
    throw non_convergent_error("bilateral_power_sum window did not satisfy the tail bound");
}

}  // namespace zetafunc
