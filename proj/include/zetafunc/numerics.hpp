#ifndef ZETAFUNC_NUMERICS_HPP
#define ZETAFUNC_NUMERICS_HPP

#include <functional>
#include <span>

#include "zetafunc/types.hpp"

namespace zetafunc {

// Result of an accelerated series evaluation. error_bound is an upper
// estimate of the truncation error under the scheme's error model; when it
// exceeds the requested target the estimate is flagged rather than silently
// truncated (terms_used then sits at the cap or the verification stage
// disagreed).
struct SeriesEstimate {
    Cplx value{};
    double error_bound{0.0};
    long terms_used{0};
};

inline constexpr long kDefaultSeriesCap = 10'000'000;

// Neumaier-compensated accumulation, applied to the real and imaginary
// components independently. Empty input sums to zero.
Cplx compensated_sum(std::span<const Cplx> terms);
double compensated_sum(std::span<const double> terms);

// Sum_{k>=0} (-1)^k term(k) for term sequences that eventually decrease in
// magnitude. Real-valued sequences go through Cohen-Rodriguez Villegas-Zagier
// polynomial acceleration (Algorithm 1 of their Experimental Math. 9 paper,
// geometric convergence (3+sqrt(8))^-n); complex sequences fall back to an
// iterated-averaging Euler transform, whose error theory does not need the
// real-axis positivity CVZ relies on.
//
// Throws non_convergent_error when the terms keep growing at the cap.
SeriesEstimate accelerate_alternating(const std::function<Cplx(long)>& term, double target_error,
                                      long cap = kDefaultSeriesCap);

// Sum_{k in Z} 1/(u + k pi)^m for m >= 2, u off the k*pi lattice.
// Symmetric window plus Euler-Maclaurin tail corrections; the first omitted
// tail term bounds the truncation error and the window grows until that
// bound drops below tol.
Cplx bilateral_power_sum(Cplx u, int m, double tol = 1e-13);

}  // namespace zetafunc

#endif
