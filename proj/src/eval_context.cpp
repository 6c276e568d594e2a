#include "zetafunc/eval_context.hpp"

#include <array>

namespace zetafunc {

namespace detail {

namespace {

// B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j. The multiplicative binomial
// products stay exact integers well inside the qd mantissa, so the only
// rounding is the recurrence's own mild cancellation, which qd absorbs.
std::array<qd, kBernoulliTableMax + 1> build_bernoulli() {
    constexpr int top = 2 * kBernoulliTableMax;
    std::array<qd, top + 1> b{};
    b[0] = qd(1.0);
    b[1] = qd(-0.5);

    for (int m = 2; m <= top; ++m) {
        if (m % 2 == 1) {
            b[m] = qd(0.0);
            continue;
        }
        qd acc(0.0);
        qd binom(1.0);  // C(m+1, 0)
        for (int j = 0; j < m; ++j) {
            acc = acc + binom * b[j];
            binom = binom * static_cast<double>(m + 1 - j) / static_cast<double>(j + 1);
        }
        b[m] = -acc / static_cast<double>(m + 1);
    }

    std::array<qd, kBernoulliTableMax + 1> even{};
    for (int j = 1; j <= kBernoulliTableMax; ++j) even[j] = b[2 * j];
    return even;
}

const std::array<qd, kBernoulliTableMax + 1>& table() {
    static const std::array<qd, kBernoulliTableMax + 1> t = build_bernoulli();
    return t;
}

}  // namespace

const qd& bernoulli_qd(int j) { return table()[j]; }

double bernoulli_double(int j) { return to_double(table()[j]); }

}  // namespace detail

const EvalContext& EvalContext::standard() {
    static const EvalContext ctx = [] {
        EvalContext c;
        c.bernoulli_table.resize(c.bernoulli_order);
        for (int j = 1; j <= c.bernoulli_order; ++j)
            c.bernoulli_table[j - 1] = detail::bernoulli_double(j);
        return c;
    }();
    return ctx;
}

}  // namespace zetafunc
