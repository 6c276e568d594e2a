#ifndef ZETAFUNC_SPECIAL_HPP
#define ZETAFUNC_SPECIAL_HPP

#include "zetafunc/eval_context.hpp"
#include "zetafunc/types.hpp"

namespace zetafunc {

// Value plus an estimated relative error. The hint folds the truncation
// bound of the underlying expansion together with the rounding envelope of
// the compensated accumulation.
struct FunctionValue {
    Cplx value{};
    double condition_hint{0.0};
};

// Principal-branch log Gamma, continuous off the negative real axis.
// Stirling with Bernoulli coefficients after upward recurrence to
// Re(s) >= 10; the recurrence itself is branch-correct in the left half
// plane, so no reflection step is involved.
FunctionValue ln_gamma(Cplx s, const EvalContext& ctx = EvalContext::standard());

// exp(ln_gamma(s)).
FunctionValue gamma(Cplx s, const EvalContext& ctx = EvalContext::standard());

// Riemann zeta by Euler-Maclaurin continuation, valid on the whole plane
// minus s = 1. Deliberately does not route through the functional
// equation: that identity is itself under test in the catalog.
FunctionValue riemann_zeta(Cplx s, const EvalContext& ctx = EvalContext::standard());

// Hurwitz zeta(s, a) = sum_{k>=0} (k+a)^-s, continued by the same
// Euler-Maclaurin engine; a is shifted by the forward recurrence until
// Re(a) >= 1 (complex a supported).
FunctionValue hurwitz_zeta(Cplx s, Cplx a, const EvalContext& ctx = EvalContext::standard());

// psi^(m): digamma via asymptotic series + upward recurrence for m = 0,
// (-1)^(m+1) m! zeta(m+1, x) for m >= 1.
FunctionValue polygamma(int m, Cplx x, const EvalContext& ctx = EvalContext::standard());

// Dirichlet beta via 4^-s [zeta(s,1/4) - zeta(s,3/4)]; the pole parts of
// the two Hurwitz terms are merged analytically, so beta is entire.
FunctionValue dirichlet_beta(Cplx s, const EvalContext& ctx = EvalContext::standard());

// Dirichlet eta via the alternating-series accelerator (CVZ on the real
// axis, Euler transform for complex s).
FunctionValue dirichlet_eta(Cplx s, const EvalContext& ctx = EvalContext::standard());

}  // namespace zetafunc

#endif
