#ifndef ZETAFUNC_MULTIPREC_HPP
#define ZETAFUNC_MULTIPREC_HPP

// Compensated multi-word arithmetic (double-double and quad-double) built
// from error-free transformations, plus the transcendentals needed by the
// Euler-Maclaurin engine: exp, log, sin/cos, atan2 and complex pow.
//
// The zeta continuation at strongly negative real part cancels by roughly
// (N+a)^{|Re s|+1} between the partial sum and its tail corrections, which
// plain doubles cannot absorb. These word expansions recover the digits
// while every individual operation stays an IEEE double operation
// (Dekker/Knuth two_sum and fma-based two_prod; word layouts and
// renormalisation as in Hida, Li & Bailey's quad-double arithmetic).

#include <cmath>
#include <cstdint>

namespace zetafunc::detail {

// ---------------------------------------------------------------- kernels

inline double two_sum(double a, double b, double& err) {
    double s = a + b;
    double bb = s - a;
    err = (a - (s - bb)) + (b - bb);
    return s;
}

// Requires |a| >= |b| (or a == 0).
inline double quick_two_sum(double a, double b, double& err) {
    double s = a + b;
    err = b - (s - a);
    return s;
}

inline double two_prod(double a, double b, double& err) {
    double p = a * b;
    err = std::fma(a, b, -p);
    return p;
}

inline void three_sum(double& a, double& b, double& c) {
    double t1, t2, t3;
    t1 = two_sum(a, b, t2);
    a = two_sum(c, t1, t3);
    b = two_sum(t2, t3, c);
}

inline void three_sum2(double& a, double& b, double c) {
    double t1, t2, t3;
    t1 = two_sum(a, b, t2);
    a = two_sum(c, t1, t3);
    b = t2 + t3;
}

// ------------------------------------------------------------ double-double

struct dd {
    double hi{0.0}, lo{0.0};
    constexpr dd() = default;
    constexpr dd(double h) : hi(h), lo(0.0) {}
    constexpr dd(double h, double l) : hi(h), lo(l) {}
};

inline dd dd_norm(double hi, double lo) {
    double e;
    double s = quick_two_sum(hi, lo, e);
    return dd(s, e);
}

inline dd operator+(dd a, dd b) {
    double s1, s2, t1, t2;
    s1 = two_sum(a.hi, b.hi, s2);
    t1 = two_sum(a.lo, b.lo, t2);
    s2 += t1;
    s1 = quick_two_sum(s1, s2, s2);
    s2 += t2;
    return dd_norm(s1, s2);
}

inline dd operator-(dd a) { return dd(-a.hi, -a.lo); }
inline dd operator-(dd a, dd b) { return a + (-b); }

inline dd operator*(dd a, dd b) {
    double p, e;
    p = two_prod(a.hi, b.hi, e);
    e += a.hi * b.lo + a.lo * b.hi;
    return dd_norm(p, e);
}

inline dd operator/(dd a, dd b) {
    double q1 = a.hi / b.hi;
    dd r = a - dd(q1) * b;
    double q2 = r.hi / b.hi;
    r = r - dd(q2) * b;
    double q3 = r.hi / b.hi;
    double e;
    double s = quick_two_sum(q1, q2, e);
    return dd_norm(s, e) + dd(q3);
}

inline dd operator+(dd a, double b) { return a + dd(b); }
inline dd operator-(dd a, double b) { return a - dd(b); }
inline dd operator*(dd a, double b) { return a * dd(b); }
inline dd operator/(dd a, double b) { return a / dd(b); }
inline dd operator*(double a, dd b) { return dd(a) * b; }

inline bool dd_is_zero(dd a) { return a.hi == 0.0; }
inline double to_double(dd a) { return a.hi + a.lo; }
inline dd dd_ldexp(dd a, int k) { return dd(std::ldexp(a.hi, k), std::ldexp(a.lo, k)); }

// ------------------------------------------------------------- quad-double

struct qd {
    double x[4]{0.0, 0.0, 0.0, 0.0};
    constexpr qd() = default;
    constexpr qd(double a) : x{a, 0.0, 0.0, 0.0} {}
    constexpr qd(double a, double b, double c, double d) : x{a, b, c, d} {}
};

inline void qd_renorm(double& c0, double& c1, double& c2, double& c3, double& c4) {
    double s0, s1, s2 = 0.0, s3 = 0.0;
    s0 = quick_two_sum(c3, c4, c4);
    s0 = quick_two_sum(c2, s0, c3);
    s0 = quick_two_sum(c1, s0, c2);
    c0 = quick_two_sum(c0, s0, c1);

    s0 = c0;
    s1 = c1;
    if (s1 != 0.0) {
        s1 = quick_two_sum(s1, c2, s2);
        if (s2 != 0.0) {
            s2 = quick_two_sum(s2, c3, s3);
            if (s3 != 0.0)
                s3 += c4;
            else
                s2 = quick_two_sum(s2, c4, s3);
        } else {
            s1 = quick_two_sum(s1, c3, s2);
            if (s2 != 0.0)
                s2 = quick_two_sum(s2, c4, s3);
            else
                s1 = quick_two_sum(s1, c4, s2);
        }
    } else {
        s0 = quick_two_sum(s0, c2, s1);
        if (s1 != 0.0) {
            s1 = quick_two_sum(s1, c3, s2);
            if (s2 != 0.0)
                s2 = quick_two_sum(s2, c4, s3);
            else
                s1 = quick_two_sum(s1, c4, s2);
        } else {
            s0 = quick_two_sum(s0, c3, s1);
            if (s1 != 0.0)
                s1 = quick_two_sum(s1, c4, s2);
            else
                s0 = quick_two_sum(s0, c4, s1);
        }
    }
    c0 = s0;
    c1 = s1;
    c2 = s2;
    c3 = s3;
}

inline qd operator+(const qd& a, const qd& b) {
    double s0, s1, s2, s3, t0, t1, t2, t3;
    s0 = two_sum(a.x[0], b.x[0], t0);
    s1 = two_sum(a.x[1], b.x[1], t1);
    s2 = two_sum(a.x[2], b.x[2], t2);
    s3 = two_sum(a.x[3], b.x[3], t3);

    s1 = two_sum(s1, t0, t0);
    three_sum(s2, t0, t1);
    three_sum2(s3, t0, t2);
    t0 = t0 + t1 + t3;

    qd_renorm(s0, s1, s2, s3, t0);
    return qd(s0, s1, s2, s3);
}

inline qd operator-(const qd& a) { return qd(-a.x[0], -a.x[1], -a.x[2], -a.x[3]); }
inline qd operator-(const qd& a, const qd& b) { return a + (-b); }

inline qd operator*(const qd& a, const qd& b) {
    double p0, p1, p2, p3, p4, p5;
    double q0, q1, q2, q3, q4, q5;
    double p6, p7, p8, p9;
    double q6, q7, q8, q9;
    double r0, r1;
    double t0, t1;
    double s0, s1, s2;

    p0 = two_prod(a.x[0], b.x[0], q0);
    p1 = two_prod(a.x[0], b.x[1], q1);
    p2 = two_prod(a.x[1], b.x[0], q2);
    p3 = two_prod(a.x[0], b.x[2], q3);
    p4 = two_prod(a.x[1], b.x[1], q4);
    p5 = two_prod(a.x[2], b.x[0], q5);

    three_sum(p1, p2, q0);

    three_sum(p2, q1, q2);
    three_sum(p3, p4, p5);
    s0 = two_sum(p2, p3, t0);
    s1 = two_sum(q1, p4, t1);
    s2 = q2 + p5;
    s1 = two_sum(s1, t0, t0);
    s2 += (t0 + t1);

    p6 = two_prod(a.x[0], b.x[3], q6);
    p7 = two_prod(a.x[1], b.x[2], q7);
    p8 = two_prod(a.x[2], b.x[1], q8);
    p9 = two_prod(a.x[3], b.x[0], q9);

    q0 = two_sum(q0, q3, q3);
    q4 = two_sum(q4, q5, q5);
    p6 = two_sum(p6, p7, p7);
    p8 = two_sum(p8, p9, p9);
    t0 = two_sum(q0, q4, t1);
    t1 += (q3 + q5);
    r0 = two_sum(p6, p8, r1);
    r1 += (p7 + p9);
    q3 = two_sum(t0, r0, q4);
    q4 += (t1 + r1);
    t0 = two_sum(q3, s1, t1);
    t1 += q4;

    t1 += a.x[1] * b.x[3] + a.x[2] * b.x[2] + a.x[3] * b.x[1] + q6 + q7 + q8 + q9 + s2;

    qd_renorm(p0, p1, s0, t0, t1);
    return qd(p0, p1, s0, t0);
}

inline qd operator*(const qd& a, double b) { return a * qd(b); }
inline qd operator*(double a, const qd& b) { return qd(a) * b; }

inline qd operator/(const qd& a, const qd& b) {
    double q0 = a.x[0] / b.x[0];
    qd r = a - b * q0;
    double q1 = r.x[0] / b.x[0];
    r = r - b * q1;
    double q2 = r.x[0] / b.x[0];
    r = r - b * q2;
    double q3 = r.x[0] / b.x[0];
    r = r - b * q3;
    double q4 = r.x[0] / b.x[0];
    qd_renorm(q0, q1, q2, q3, q4);
    return qd(q0, q1, q2, q3);
}

inline qd operator+(const qd& a, double b) { return a + qd(b); }
inline qd operator-(const qd& a, double b) { return a - qd(b); }
inline qd operator/(const qd& a, double b) { return a / qd(b); }

inline double to_double(const qd& a) { return a.x[0] + a.x[1]; }
inline bool qd_is_zero(const qd& a) { return a.x[0] == 0.0; }
inline qd qd_ldexp(const qd& a, int k) {
    return qd(std::ldexp(a.x[0], k), std::ldexp(a.x[1], k), std::ldexp(a.x[2], k), std::ldexp(a.x[3], k));
}

// ---------------------------------------------------------------- constants

inline constexpr qd QD_PI{3.14159265358979312e+00, 1.22464679914735321e-16,
                          -2.99476980971833967e-33, 1.11245422086336528e-49};
inline constexpr qd QD_TWO_PI{6.28318530717958623e+00, 2.44929359829470641e-16,
                              -5.98953961943667933e-33, 2.22490844172673056e-49};
inline constexpr qd QD_HALF_PI{1.57079632679489656e+00, 6.12323399573676604e-17,
                               -1.49738490485916983e-33, 5.56227110431682641e-50};
inline constexpr qd QD_LN2{6.93147180559945286e-01, 2.31904681384629956e-17,
                           5.70770843841621207e-34, -3.58243221060181142e-50};

inline constexpr dd DD_PI{3.14159265358979312e+00, 1.22464679914735321e-16};
inline constexpr dd DD_TWO_PI{6.28318530717958623e+00, 2.44929359829470641e-16};
inline constexpr dd DD_HALF_PI{1.57079632679489656e+00, 6.12323399573676604e-17};
inline constexpr dd DD_LN2{6.93147180559945286e-01, 2.31904681384629956e-17};

// ------------------------------------------------------- transcendentals

dd dd_exp(dd a);
dd dd_log(dd a);
void dd_sincos(dd a, dd& s, dd& c);
dd dd_atan2(dd y, dd x);

qd qd_exp(const qd& a);
qd qd_log(const qd& a);
void qd_sincos(const qd& a, qd& s, qd& c);
qd qd_atan2(const qd& y, const qd& x);

// -------------------------------------------- generic real-field interface
//
// The Euler-Maclaurin engine is written once against these shims and
// instantiated at double, double-double and quad-double precision.

template <class R>
struct fp_ops;

template <>
struct fp_ops<double> {
    static double from(double v) { return v; }
    static double value(double v) { return v; }
    static double exp(double v) { return std::exp(v); }
    static double log(double v) { return std::log(v); }
    static void sincos(double v, double& s, double& c) {
        s = std::sin(v);
        c = std::cos(v);
    }
    static double atan2(double y, double x) { return std::atan2(y, x); }
    static constexpr double eps = 2.2e-16;
};

template <>
struct fp_ops<dd> {
    static dd from(double v) { return dd(v); }
    static double value(dd v) { return to_double(v); }
    static dd exp(dd v) { return dd_exp(v); }
    static dd log(dd v) { return dd_log(v); }
    static void sincos(dd v, dd& s, dd& c) { dd_sincos(v, s, c); }
    static dd atan2(dd y, dd x) { return dd_atan2(y, x); }
    static constexpr double eps = 5.0e-32;
};

template <>
struct fp_ops<qd> {
    static qd from(double v) { return qd(v); }
    static double value(const qd& v) { return to_double(v); }
    static qd exp(const qd& v) { return qd_exp(v); }
    static qd log(const qd& v) { return qd_log(v); }
    static void sincos(const qd& v, qd& s, qd& c) { qd_sincos(v, s, c); }
    static qd atan2(const qd& y, const qd& x) { return qd_atan2(y, x); }
    static constexpr double eps = 1.0e-61;
};

// Minimal complex pair over any of the three real fields.
template <class R>
struct cx {
    R re{}, im{};
    cx() = default;
    cx(R r) : re(r), im(fp_ops<R>::from(0.0)) {}
    cx(R r, R i) : re(r), im(i) {}
};

template <class R>
inline cx<R> operator+(const cx<R>& a, const cx<R>& b) {
    return {a.re + b.re, a.im + b.im};
}
template <class R>
inline cx<R> operator-(const cx<R>& a, const cx<R>& b) {
    return {a.re - b.re, a.im - b.im};
}
template <class R>
inline cx<R> operator*(const cx<R>& a, const cx<R>& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
template <class R>
inline cx<R> operator*(const cx<R>& a, const R& b) {
    return {a.re * b, a.im * b};
}
template <class R>
inline cx<R> operator/(const cx<R>& a, const cx<R>& b) {
    R den = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}
template <class R>
inline cx<R> cx_neg(const cx<R>& a) {
    return {-a.re, -a.im};
}

// exp(w * log z): z restricted to the right half plane callers shift into.
template <class R>
inline cx<R> cx_log(const cx<R>& z) {
    using F = fp_ops<R>;
    R mag2 = z.re * z.re + z.im * z.im;
    R lg = F::log(mag2) * F::from(0.5);
    R th = F::atan2(z.im, z.re);
    return {lg, th};
}

template <class R>
inline cx<R> cx_exp(const cx<R>& z) {
    using F = fp_ops<R>;
    R m = F::exp(z.re);
    R s, c;
    F::sincos(z.im, s, c);
    return {m * c, m * s};
}

template <class R>
inline cx<R> cx_pow(const cx<R>& z, const cx<R>& w) {
    return cx_exp(w * cx_log(z));
}

}  // namespace zetafunc::detail

#endif
