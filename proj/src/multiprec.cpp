#include "zetafunc/multiprec.hpp"

namespace zetafunc::detail {

// Taylor exp after argument reduction x = k*ln2 + r, r scaled down by 2^m
// and squared back up. The squaring chain costs ~m bits of the working
// precision, which both widths have to spare.

dd dd_exp(dd a) {
    if (a.hi > 709.0) return dd(std::exp(a.hi));  // overflows to inf downstream
    if (a.hi < -740.0) return dd(0.0);
    double k = std::nearbyint(a.hi / DD_LN2.hi);
    dd r = a - DD_LN2 * k;
    constexpr int shift = 9;
    r = dd_ldexp(r, -shift);

    dd sum(1.0);
    dd term(1.0);
    for (int j = 1; j <= 14; ++j) {
        term = term * r / static_cast<double>(j);
        sum = sum + term;
    }
    for (int j = 0; j < shift; ++j) sum = sum * sum;
    return dd_ldexp(sum, static_cast<int>(k));
}

dd dd_log(dd a) {
    // Newton iteration on exp(y) = a from the double seed.
    dd y(std::log(a.hi));
    y = y + a * dd_exp(-y) - 1.0;
    y = y + a * dd_exp(-y) - 1.0;
    return y;
}

void dd_sincos(dd a, dd& s, dd& c) {
    double k = std::nearbyint(a.hi / DD_HALF_PI.hi);
    dd r = a - DD_HALF_PI * k;
    long q = static_cast<long>(k) & 3L;  // k mod 4, two's complement wrap is fine

    // Taylor on |r| <= pi/4.
    dd r2 = r * r;
    dd ss = r, term = r;
    for (int j = 1; j <= 14; ++j) {
        term = term * r2 / static_cast<double>((2 * j) * (2 * j + 1));
        ss = (j % 2 == 1) ? ss - term : ss + term;
    }
    dd cc(1.0);
    term = dd(1.0);
    for (int j = 1; j <= 14; ++j) {
        term = term * r2 / static_cast<double>((2 * j - 1) * (2 * j));
        cc = (j % 2 == 1) ? cc - term : cc + term;
    }
    switch (((q % 4) + 4) % 4) {
        case 0: s = ss; c = cc; break;
        case 1: s = cc; c = -ss; break;
        case 2: s = -ss; c = -cc; break;
        default: s = -cc; c = ss; break;
    }
}

dd dd_atan2(dd y, dd x) {
    double th0 = std::atan2(to_double(y), to_double(x));
    dd th(th0);
    for (int it = 0; it < 2; ++it) {
        dd s, c;
        dd_sincos(th, s, c);
        dd num = y * c - x * s;
        dd den = x * c + y * s;
        th = th + num / den;  // atan(e) ~ e at this size
    }
    return th;
}

qd qd_exp(const qd& a) {
    if (a.x[0] > 709.0) return qd(std::exp(a.x[0]));
    if (a.x[0] < -740.0) return qd(0.0);
    double k = std::nearbyint(a.x[0] / QD_LN2.x[0]);
    qd r = a - QD_LN2 * k;
    constexpr int shift = 10;
    r = qd_ldexp(r, -shift);

    qd sum(1.0);
    qd term(1.0);
    for (int j = 1; j <= 18; ++j) {
        term = term * r / static_cast<double>(j);
        sum = sum + term;
    }
    for (int j = 0; j < shift; ++j) sum = sum * sum;
    return qd_ldexp(sum, static_cast<int>(k));
}

qd qd_log(const qd& a) {
    qd y(std::log(a.x[0]));
    y = y + a * qd_exp(-y) - 1.0;
    y = y + a * qd_exp(-y) - 1.0;
    y = y + a * qd_exp(-y) - 1.0;
    return y;
}

void qd_sincos(const qd& a, qd& s, qd& c) {
    double k = std::nearbyint(a.x[0] / QD_HALF_PI.x[0]);
    qd r = a - QD_HALF_PI * k;
    long q = static_cast<long>(k);

    qd r2 = r * r;
    qd ss = r, term = r;
    for (int j = 1; j <= 26; ++j) {
        term = term * r2 / static_cast<double>((2 * j) * (2 * j + 1));
        ss = (j % 2 == 1) ? ss - term : ss + term;
    }
    qd cc(1.0);
    term = qd(1.0);
    for (int j = 1; j <= 26; ++j) {
        term = term * r2 / static_cast<double>((2 * j - 1) * (2 * j));
        cc = (j % 2 == 1) ? cc - term : cc + term;
    }
    switch (((q % 4) + 4) % 4) {
        case 0: s = ss; c = cc; break;
        case 1: s = cc; c = -ss; break;
        case 2: s = -ss; c = -cc; break;
        default: s = -cc; c = ss; break;
    }
}

qd qd_atan2(const qd& y, const qd& x) {
    double th0 = std::atan2(to_double(y), to_double(x));
    qd th(th0);
    for (int it = 0; it < 3; ++it) {
        qd s, c;
        qd_sincos(th, s, c);
        qd num = y * c - x * s;
        qd den = x * c + y * s;
        th = th + num / den;
    }
    return th;
}

}  // namespace zetafunc::detail
