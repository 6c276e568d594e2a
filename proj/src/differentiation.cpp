#include "zetafunc/differentiation.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "zetafunc/numerics.hpp"
#include "zetafunc/special.hpp"

namespace zetafunc {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

double factorial(int m) {
    double f = 1.0;
    for (int i = 2; i <= m; ++i) f *= i;
    return f;
}

// Unwrap the imaginary parts along the ring so the sampled branch is
// continuous; returns false when the branch winds by 2 pi k != 0 around the
// loop, i.e. a zero or pole of the underlying ratio sits inside the contour.
bool unwrap_ring(std::vector<Cplx>& vals) {
    const double first = vals[0].imag();
    double prev = first;
    for (std::size_t j = 1; j < vals.size(); ++j) {
        double im = vals[j].imag();
        im -= 2.0 * kPi * std::nearbyint((im - prev) / (2.0 * kPi));
        vals[j] = {vals[j].real(), im};
        prev = im;
    }
    // continue one more step onto node 0 and compare with its original value
    double closing = first - 2.0 * kPi * std::nearbyint((first - prev) / (2.0 * kPi));
    return std::fabs(closing - first) < kPi;
}

}  // namespace

namespace detail {

Cplx derivative_from_ring(std::span<const Cplx> values, double radius, int order) {
    const std::size_t n = values.size();
    std::vector<Cplx> terms(n);
    for (std::size_t j = 0; j < n; ++j) {
        double th = -2.0 * kPi * static_cast<double>(j) * order / static_cast<double>(n);
        terms[j] = values[j] * Cplx{std::cos(th), std::sin(th)};
    }
    Cplx acc = compensated_sum(std::span<const Cplx>(terms));
    return acc * (factorial(order) / (static_cast<double>(n) * std::pow(radius, order)));
}

}  // namespace detail

DerivativeValue cauchy_derivative(const std::function<Cplx(Cplx)>& f, const ContourSpec& spec,
                                  int order, std::span<const Cplx> singularities, double tol) {
    if (order < 1 || order > 12) throw std::invalid_argument("cauchy derivative order must be in 1..12");
    if (!(spec.radius > 0.0)) throw std::invalid_argument("contour radius must be positive");
    if (spec.node_count < 64 || !is_power_of_two(spec.node_count))
        throw std::invalid_argument("node_count must be a power of two >= 64");
    for (Cplx sing : singularities) {
        if (std::abs(sing - spec.center) <= spec.radius)
            throw singularity_error("registered singularity inside the contour disk");
    }

    const int n2 = 2 * spec.node_count;
    std::vector<Cplx> vals(n2);
    for (int j = 0; j < n2; ++j) {
        double th = 2.0 * kPi * j / n2;
        vals[j] = f(spec.center + spec.radius * Cplx{std::cos(th), std::sin(th)});
    }
    std::vector<Cplx> coarse(spec.node_count);
    for (int j = 0; j < spec.node_count; ++j) coarse[j] = vals[2 * j];

    Cplx d_fine = detail::derivative_from_ring(std::span<const Cplx>(vals), spec.radius, order);
    Cplx d_coarse = detail::derivative_from_ring(std::span<const Cplx>(coarse), spec.radius, order);
    double est = std::abs(d_fine - d_coarse);
    if (est > tol * std::max(1.0, std::abs(d_fine)))
        throw non_convergent_error("two-resolution contour comparison disagrees");
    return {order, d_fine, est};
}

Cplx trig_log_derivative(TrigKind kind, Cplx s, int order) {
    if (order < 1) throw std::invalid_argument("derivative order must be >= 1");
    switch (kind) {
        case TrigKind::sin_half: {
            // singular where sin(pi s/2) = 0: even integers
            Cplx u = kPi * s / 2.0;
            if (order == 1) {
                Cplx t = std::tan(u);
                if (std::abs(t) < 1e-15) throw pole_error("cot derivative at a lattice node", s);
                return (kPi / 2.0) / t;
            }
            double sign = (order % 2 == 0) ? -1.0 : 1.0;  // (-1)^(order-1)
            return std::pow(kPi / 2.0, order) * sign * factorial(order - 1) *
                   bilateral_power_sum(u, order);
        }
        case TrigKind::cos_half: {
            // log cos(pi s/2) = log sin(pi (s+1)/2)
            return trig_log_derivative(TrigKind::sin_half, s + 1.0, order);
        }
        case TrigKind::tan_half:
            return trig_log_derivative(TrigKind::sin_half, s, order) -
                   trig_log_derivative(TrigKind::cos_half, s, order);
        case TrigKind::cot_half:
            return trig_log_derivative(TrigKind::cos_half, s, order) -
                   trig_log_derivative(TrigKind::sin_half, s, order);
    }
    throw std::invalid_argument("unknown trig kind");
}

Cplx log_zeta_ratio(Cplx s, const EvalContext& ctx) {
    Cplx num = riemann_zeta(s, ctx).value;
    Cplx den = riemann_zeta(1.0 - s, ctx).value;
    if (std::abs(num) < 1e-12) throw near_zero_error("zeta(s) below the magnitude floor", s);
    if (std::abs(den) < 1e-12) throw near_zero_error("zeta(1-s) below the magnitude floor", 1.0 - s);
    Cplx ratio = num / den;
    // negative reals evaluate on the upper side of the cut (Im log = +pi)
    if (ratio.imag() == 0.0) ratio = {ratio.real(), 0.0};
    return std::log(ratio);
}

DerivativeValue log_zeta_ratio_derivative(Cplx s, int n, DerivMethod method,
                                          const EvalContext& ctx) {
    const int order = 2 * n + 1;
    if (n < 1 || order > 12)
        throw std::invalid_argument("log_zeta_ratio_derivative supports orders 3..12");
    if (std::fabs(s.imag()) > 2.0)
        throw std::invalid_argument("log_zeta_ratio_derivative branch window is |Im s| <= 2");

    if (method == DerivMethod::closed_form) {
        FunctionValue pg = polygamma(2 * n, s, ctx);
        Cplx trig = trig_log_derivative(TrigKind::cos_half, s, order);
        double est = pg.condition_hint * std::abs(pg.value) + 1e-13 * std::abs(trig) + 1e-14;
        return {order, pg.value + trig, est};
    }

    // contour route on g(z) = log(zeta(1-z)/zeta(z)) with branch unwrapping
    double dist = std::min(std::abs(s), std::abs(s - 1.0));
    double radius = std::min(0.4, 0.8 * dist);
    if (radius < 1e-3) throw pole_error("contour center too close to s=0 or s=1", s);

    const int n2 = 512;
    std::vector<Cplx> vals(n2);
    for (int j = 0; j < n2; ++j) {
        double th = 2.0 * kPi * j / n2;
        Cplx z = s + radius * Cplx{std::cos(th), std::sin(th)};
        Cplx num = riemann_zeta(1.0 - z, ctx).value;
        Cplx den = riemann_zeta(z, ctx).value;
        if (std::abs(num) < 1e-12 || std::abs(den) < 1e-12)
            throw near_zero_error("zeta zero on the contour ring", z);
        vals[j] = std::log(num / den);
    }
    if (!unwrap_ring(vals))
        throw singularity_error("zeta ratio winds around the contour: zero or pole enclosed");

    std::vector<Cplx> coarse(n2 / 2);
    for (int j = 0; j < n2 / 2; ++j) coarse[j] = vals[2 * j];
    Cplx d_fine = detail::derivative_from_ring(std::span<const Cplx>(vals), radius, order);
    Cplx d_coarse = detail::derivative_from_ring(std::span<const Cplx>(coarse), radius, order);
    double est = std::abs(d_fine - d_coarse) + 1e-13 * factorial(order) / std::pow(radius, order);
    return {order, d_fine, est};
}

}  // namespace zetafunc
