#include "zetafunc/special.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "zetafunc/multiprec.hpp"
#include "zetafunc/numerics.hpp"

namespace zetafunc {

namespace detail {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 6.28318530717958647692;
constexpr double kHalfLog2Pi = 0.91893853320467274178;  // log(2 pi)/2

template <class R>
cx<R> cx_from(Cplx z) {
    using F = fp_ops<R>;
    return {F::from(z.real()), F::from(z.imag())};
}

template <class R>
Cplx cx_to(const cx<R>& z) {
    using F = fp_ops<R>;
    return {F::value(z.re), F::value(z.im)};
}

template <class R>
double cx_mag(const cx<R>& z) {
    return std::abs(cx_to(z));
}

// B_{2j}/(2j)! at the working precision, cached per instantiation.
template <class R>
const std::vector<R>& em_coeffs() {
    static const std::vector<R> c = [] {
        std::vector<R> v(kBernoulliTableMax + 1);
        qd f(2.0);  // (2j)! accumulated incrementally, starting at (2*1)! = 2
        for (int j = 1; j <= kBernoulliTableMax; ++j) {
            qd coeff = bernoulli_qd(j) / f;
            if constexpr (std::is_same_v<R, qd>) {
                v[j] = coeff;
            } else if constexpr (std::is_same_v<R, dd>) {
                v[j] = dd(coeff.x[0], coeff.x[1]);
            } else {
                v[j] = to_double(coeff);
            }
            f = f * static_cast<double>(2 * j + 1) * static_cast<double>(2 * j + 2);
        }
        return v;
    }();
    return c;
}

struct EmOutcome {
    Cplx value;
    double trunc_est;
    double round_est;
};

// Euler-Maclaurin for sum_{k>=0} (k+a)^-s, analytically continued:
//   sum_{k<N} (k+a)^-s + (N+a)^{1-s}/(s-1) + (N+a)^{-s}/2
//   + sum_{j=1..M} B_{2j}/(2j)! (s)_{2j-1} (N+a)^{-s-2j+1}
template <class R>
EmOutcome em_hurwitz_core(Cplx s, Cplx a, int n_total, int M) {
    using F = fp_ops<R>;
    using C = cx<R>;
    const C one{F::from(1.0), F::from(0.0)};
    const C sC = cx_from<R>(s);
    const C minus_s = cx_neg(sC);
    const C aC = cx_from<R>(a);

    C acc{F::from(0.0), F::from(0.0)};
    double max_mag = 0.0;
    for (int k = 0; k < n_total; ++k) {
        C base = aC + C{F::from(static_cast<double>(k)), F::from(0.0)};
        C t = cx_pow(base, minus_s);
        acc = acc + t;
        max_mag = std::max(max_mag, cx_mag(t));
        max_mag = std::max(max_mag, cx_mag(acc));
    }

    C na = aC + C{F::from(static_cast<double>(n_total)), F::from(0.0)};
    C lg_na = cx_log(na);
    C pw = cx_exp(minus_s * lg_na);  // na^{-s}
    C tail = cx_exp((one - sC) * lg_na) / (sC - one);
    acc = acc + tail;
    max_mag = std::max(max_mag, cx_mag(tail));
    C half = pw * F::from(0.5);
    acc = acc + half;

    const auto& coeff = em_coeffs<R>();
    C inv = one / na;
    C inv2 = inv * inv;
    C cur = pw * inv;  // na^{-s-1}
    C poch = sC;       // (s)_1
    double last_term = 0.0;
    for (int j = 1; j <= M; ++j) {
        C term = cur * poch * coeff[j];
        acc = acc + term;
        last_term = cx_mag(term);
        max_mag = std::max(max_mag, last_term);
        C f1 = sC + C{F::from(2.0 * j - 1.0), F::from(0.0)};
        C f2 = sC + C{F::from(2.0 * j), F::from(0.0)};
        poch = poch * f1 * f2;
        cur = cur * inv2;
    }

    double r_em = std::abs(a + static_cast<double>(n_total));
    double rho = (std::abs(s) + 2.0 * M) / (kTwoPi * r_em);
    rho *= rho;
    double trunc = (rho < 0.999) ? last_term * rho / (1.0 - rho)
                                 : std::numeric_limits<double>::infinity();
    double round = max_mag * F::eps * 16.0;
    return {cx_to(acc), trunc, round};
}

enum class Tier { dbl, ddp, qdp };

Tier pick_tier(double sigma) {
    if (sigma >= -0.6) return Tier::dbl;
    if (sigma >= -9.0) return Tier::ddp;
    return Tier::qdp;
}

FunctionValue hurwitz_em(Cplx s, Cplx a, const EvalContext& ctx) {
    if (std::abs(s - Cplx{1.0, 0.0}) < ctx.pole_exclusion_radius)
        throw pole_error("zeta pole at s=1", s);

    int n_shift = std::max(0, static_cast<int>(std::ceil(1.0 - a.real())));
    for (int k = 0; k <= n_shift; ++k) {
        if (std::abs(a + static_cast<double>(k)) < ctx.pole_exclusion_radius)
            throw pole_error("hurwitz shift hits a non-positive integer", a);
    }

    Tier tier = pick_tier(s.real());
    int M = ctx.bernoulli_order;
    if (tier == Tier::qdp) M = std::max(M, 25);
    M = std::min(M, kBernoulliTableMax);

    double r_target = std::max({static_cast<double>(ctx.euler_maclaurin_shift),
                                1.2 * std::abs(s.imag()), 0.55 * (std::abs(s) + 2.0 * M)});
    EmOutcome out{};
    for (int attempt = 0; attempt < 4; ++attempt) {
        int n_total = std::max(n_shift, static_cast<int>(std::ceil(r_target - a.real())));
        switch (tier) {
            case Tier::dbl: out = em_hurwitz_core<double>(s, a, n_total, M); break;
            case Tier::ddp: out = em_hurwitz_core<dd>(s, a, n_total, M); break;
            case Tier::qdp: out = em_hurwitz_core<qd>(s, a, n_total, M); break;
        }
        double scale = std::max(std::abs(out.value), 1e-300);
        if (out.trunc_est <= std::max(1e-17 * scale, 0.5 * out.round_est)) break;
        r_target *= 1.6;
    }
    double hint = (out.trunc_est + out.round_est) / std::max(std::abs(out.value), 1e-300);
    return {out.value, hint};
}

// Merged Euler-Maclaurin difference zeta(s,1/4) - zeta(s,3/4); the two pole
// terms combine into an expression finite at s = 1.
template <class R>
EmOutcome em_beta_core(Cplx s, int n_total, int M) {
    using F = fp_ops<R>;
    using C = cx<R>;
    const C one{F::from(1.0), F::from(0.0)};
    const C sC = cx_from<R>(s);
    const C minus_s = cx_neg(sC);
    const C q1{F::from(0.25), F::from(0.0)};
    const C q3{F::from(0.75), F::from(0.0)};

    C acc{F::from(0.0), F::from(0.0)};
    double max_mag = 0.0;
    for (int k = 0; k < n_total; ++k) {
        C kc{F::from(static_cast<double>(k)), F::from(0.0)};
        C t = cx_pow(q1 + kc, minus_s) - cx_pow(q3 + kc, minus_s);
        acc = acc + t;
        max_mag = std::max(max_mag, cx_mag(acc));
    }

    C na1 = q1 + C{F::from(static_cast<double>(n_total)), F::from(0.0)};
    C na2 = q3 + C{F::from(static_cast<double>(n_total)), F::from(0.0)};
    C lg1 = cx_log(na1), lg2 = cx_log(na2);
    C pw1 = cx_exp(minus_s * lg1), pw2 = cx_exp(minus_s * lg2);

    // [na1^{1-s} - na2^{1-s}]/(s-1) = -na2^{1-s} * log(na1/na2) * E(u),
    // E(u) = (e^u - 1)/u at u = (1-s) log(na1/na2).
    C dl = lg1 - lg2;
    C u = (one - sC) * dl;
    C eu;
    if (cx_mag(u) < 0.5) {
        C term = one;
        eu = one;
        for (int j = 2; j <= 24; ++j) {
            term = term * u * (one / C{F::from(static_cast<double>(j)), F::from(0.0)});
            eu = eu + term;
        }
    } else {
        eu = (cx_exp(u) - one) / u;
    }
    C pole_part = cx_neg(cx_exp((one - sC) * lg2) * dl * eu);
    acc = acc + pole_part;
    max_mag = std::max(max_mag, cx_mag(pole_part));

    acc = acc + (pw1 - pw2) * F::from(0.5);

    const auto& coeff = em_coeffs<R>();
    C inv1 = one / na1, inv2sq1 = inv1 * inv1;
    C inv2 = one / na2, inv2sq2 = inv2 * inv2;
    C cur1 = pw1 * inv1, cur2 = pw2 * inv2;
    C poch = sC;
    double last_term = 0.0;
    for (int j = 1; j <= M; ++j) {
        C term = (cur1 - cur2) * poch * coeff[j];
        acc = acc + term;
        last_term = std::max(cx_mag(cur1 * poch * coeff[j]), cx_mag(cur2 * poch * coeff[j]));
        C f1 = sC + C{F::from(2.0 * j - 1.0), F::from(0.0)};
        C f2 = sC + C{F::from(2.0 * j), F::from(0.0)};
        poch = poch * f1 * f2;
        cur1 = cur1 * inv2sq1;
        cur2 = cur2 * inv2sq2;
    }

    double r_em = n_total + 0.25;
    double rho = (std::abs(s) + 2.0 * M) / (kTwoPi * r_em);
    rho *= rho;
    double trunc = (rho < 0.999) ? last_term * rho / (1.0 - rho)
                                 : std::numeric_limits<double>::infinity();
    return {cx_to(acc), trunc, max_mag * F::eps * 16.0};
}

Cplx stirling_lngamma(Cplx z) {
    Cplx lz = std::log(z);
    Cplx acc = (z - 0.5) * lz - z + kHalfLog2Pi;
    Cplx z2 = z * z;
    Cplx zp = z;
    for (int j = 1; j <= 12; ++j) {
        double b = bernoulli_double(j);
        acc += b / ((2.0 * j) * (2.0 * j - 1.0)) / zp;
        zp *= z2;
    }
    return acc;
}

}  // namespace
}  // namespace detail

FunctionValue ln_gamma(Cplx s, const EvalContext& ctx) {
    if (s.real() < 0.5) {
        double k0 = std::nearbyint(-s.real());
        if (k0 >= 0.0 && std::abs(s + k0) < ctx.pole_exclusion_radius)
            throw pole_error("log-gamma pole at a non-positive integer", s);
    }
    int m = std::max(0, static_cast<int>(std::ceil(10.0 - s.real())));
    std::vector<Cplx> logs;
    logs.reserve(m);
    for (int k = 0; k < m; ++k) logs.push_back(std::log(s + static_cast<double>(k)));
    Cplx shift = compensated_sum(std::span<const Cplx>(logs));
    Cplx value = detail::stirling_lngamma(s + static_cast<double>(m)) - shift;
    double scale = std::abs(value);
    double hint = (std::abs(shift) + std::abs(s) + 10.0) * 2.2e-16 / std::max(scale, 1e-30);
    return {value, hint};
}

FunctionValue gamma(Cplx s, const EvalContext& ctx) {
    FunctionValue lg = ln_gamma(s, ctx);
    Cplx value = std::exp(lg.value);
    double hint = lg.condition_hint * std::abs(lg.value) + 2.2e-16;
    return {value, hint};
}

FunctionValue riemann_zeta(Cplx s, const EvalContext& ctx) {
    return detail::hurwitz_em(s, Cplx{1.0, 0.0}, ctx);
}

FunctionValue hurwitz_zeta(Cplx s, Cplx a, const EvalContext& ctx) {
    return detail::hurwitz_em(s, a, ctx);
}

FunctionValue polygamma(int m, Cplx x, const EvalContext& ctx) {
    if (m < 0) throw std::invalid_argument("polygamma order must be >= 0");
    if (x.real() < 0.5) {
        double k0 = std::nearbyint(-x.real());
        if (k0 >= 0.0 && std::abs(x + k0) < ctx.pole_exclusion_radius)
            throw pole_error("polygamma pole at a non-positive integer", x);
    }
    if (m == 0) {
        // digamma: upward recurrence into the asymptotic zone
        int shift = std::max(0, static_cast<int>(std::ceil(12.0 - x.real())));
        std::vector<Cplx> recips;
        recips.reserve(shift);
        for (int k = 0; k < shift; ++k) recips.push_back(1.0 / (x + static_cast<double>(k)));
        Cplx rec = compensated_sum(std::span<const Cplx>(recips));
        Cplx z = x + static_cast<double>(shift);
        Cplx z2inv = 1.0 / (z * z);
        Cplx acc = std::log(z) - 0.5 / z;
        Cplx zp = z2inv;
        for (int j = 1; j <= 12; ++j) {
            acc -= detail::bernoulli_double(j) / (2.0 * j) * zp;
            zp *= z2inv;
        }
        Cplx value = acc - rec;
        double hint = (std::abs(rec) + std::abs(std::log(z))) * 2.2e-16 /
                      std::max(std::abs(value), 1e-30);
        return {value, hint};
    }
    FunctionValue h = hurwitz_zeta(Cplx{static_cast<double>(m + 1), 0.0}, x, ctx);
    double fact = 1.0;
    for (int i = 2; i <= m; ++i) fact *= i;
    double sign = (m % 2 == 0) ? -1.0 : 1.0;  // (-1)^{m+1}
    return {sign * fact * h.value, h.condition_hint};
}

FunctionValue dirichlet_beta(Cplx s, const EvalContext& ctx) {
    detail::Tier tier = detail::pick_tier(s.real());
    int M = ctx.bernoulli_order;
    if (tier == detail::Tier::qdp) M = std::max(M, 25);
    M = std::min(M, detail::kBernoulliTableMax);

    double r_target = std::max({static_cast<double>(ctx.euler_maclaurin_shift),
                                1.2 * std::abs(s.imag()), 0.55 * (std::abs(s) + 2.0 * M)});
    detail::EmOutcome out{};
    for (int attempt = 0; attempt < 4; ++attempt) {
        int n_total = static_cast<int>(std::ceil(r_target));
        switch (tier) {
            case detail::Tier::dbl: out = detail::em_beta_core<double>(s, n_total, M); break;
            case detail::Tier::ddp: out = detail::em_beta_core<detail::dd>(s, n_total, M); break;
            case detail::Tier::qdp: out = detail::em_beta_core<detail::qd>(s, n_total, M); break;
        }
        double scale = std::max(std::abs(out.value), 1e-300);
        if (out.trunc_est <= std::max(1e-17 * scale, 0.5 * out.round_est)) break;
        r_target *= 1.6;
    }
    Cplx value = std::pow(Cplx{4.0, 0.0}, -s) * out.value;
    double hint =
        (out.trunc_est + out.round_est) / std::max(std::abs(out.value), 1e-300) + 2.2e-16;
    return {value, hint};
}

FunctionValue dirichlet_eta(Cplx s, const EvalContext& ctx) {
    (void)ctx;
    SeriesEstimate est = accelerate_alternating(
        [s](long k) { return std::pow(Cplx{static_cast<double>(k + 1), 0.0}, -s); }, 1e-14);
    double hint = est.error_bound / std::max(std::abs(est.value), 1e-30);
    return {est.value, hint};
}

}  // namespace zetafunc
