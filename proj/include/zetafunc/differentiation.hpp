#ifndef ZETAFUNC_DIFFERENTIATION_HPP
#define ZETAFUNC_DIFFERENTIATION_HPP

#include <functional>
#include <span>

#include "zetafunc/eval_context.hpp"
#include "zetafunc/types.hpp"

namespace zetafunc {

// Circle |z - center| = radius discretised with node_count equispaced
// points; node_count must be a power of two >= 64 and the closed disk must
// avoid every singularity of the target function.
struct ContourSpec {
    Cplx center{};
    double radius{0.0};
    int node_count{256};
};

struct DerivativeValue {
    int order{0};
    Cplx value{};
    double error_estimate{0.0};  // two-resolution comparison (N vs 2N nodes)
};

// f^(order)(center) = order!/(2 pi i) * contour integral of f/(z-c)^{order+1},
// evaluated by the trapezoidal rule (spectrally accurate for analytic f).
// `singularities` lists known singular points of f; any inside the disk is an
// error. The two-resolution disagreement feeds error_estimate and, above
// `tol`, a non_convergent_error.
DerivativeValue cauchy_derivative(const std::function<Cplx(Cplx)>& f, const ContourSpec& spec,
                                  int order, std::span<const Cplx> singularities = {},
                                  double tol = 1e-2);

enum class TrigKind { sin_half, cos_half, tan_half, cot_half };

// d^order/ds^order of log sin(pi s/2), log cos(pi s/2), log tan(pi s/2),
// log cot(pi s/2) in closed form: order 1 gives the cotangent/tangent forms
// directly, order >= 2 reduces to bilateral power sums
//   d^m/ds^m log sin(pi s/2) = (pi/2)^m (-1)^(m-1) (m-1)! sum_{k in Z} (pi s/2 + k pi)^-m.
Cplx trig_log_derivative(TrigKind kind, Cplx s, int order);

// Principal log of zeta(s)/zeta(1-s) from direct zeta evaluations (no
// functional-equation shortcut). Rejects points where either factor sits
// below the magnitude floor.
Cplx log_zeta_ratio(Cplx s, const EvalContext& ctx = EvalContext::standard());

enum class DerivMethod { closed_form, contour };

// d^(2n+1)/ds^(2n+1) of log(zeta(1-s)/zeta(s)).
//  closed_form:  psi^(2n)(s) + d^(2n+1) log cos(pi s/2)   (the identity route)
//  contour:      Cauchy differentiation of the unwrapped log of the ratio,
//                evaluated from zeta itself.
// The two routes are fully independent; their agreement is part of the
// verification suite.
DerivativeValue log_zeta_ratio_derivative(Cplx s, int n, DerivMethod method,
                                          const EvalContext& ctx = EvalContext::standard());

namespace detail {
// Derivative from precomputed ring samples (exposed for the catalog).
Cplx derivative_from_ring(std::span<const Cplx> values, double radius, int order);
}  // namespace detail

}  // namespace zetafunc

#endif
