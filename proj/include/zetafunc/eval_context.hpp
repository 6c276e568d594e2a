#ifndef ZETAFUNC_EVAL_CONTEXT_HPP
#define ZETAFUNC_EVAL_CONTEXT_HPP

#include <vector>

#include "zetafunc/multiprec.hpp"
#include "zetafunc/types.hpp"

namespace zetafunc {

// Immutable numerical configuration shared by the special-function
// evaluators. The Bernoulli table is generated once, at quad-double
// precision, from the binomial recurrence; the public double table holds
// B_2 .. B_{2*bernoulli_order}.
struct EvalContext {
    int euler_maclaurin_shift = 16;    // minimum Euler-Maclaurin shift N
    int bernoulli_order = 15;          // number of B_{2j} correction terms M
    std::vector<double> bernoulli_table;  // B_2 .. B_{2M}
    double pole_exclusion_radius = 1e-6;
    double default_tolerance = 1e-12;

    static const EvalContext& standard();
};

namespace detail {

// Internal table reaches further than the public one so the engine can
// escalate the correction order at strongly negative Re(s).
inline constexpr int kBernoulliTableMax = 40;  // B_2 .. B_80

const qd& bernoulli_qd(int j);    // B_{2j}, 1 <= j <= kBernoulliTableMax
double bernoulli_double(int j);

}  // namespace detail

}  // namespace zetafunc

#endif
