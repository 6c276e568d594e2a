#ifndef ZETAFUNC_TYPES_HPP
#define ZETAFUNC_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace zetafunc {

// Universal scalar of the library. All public entry points take and return
// complex doubles; values are finite unless an operation documents a pole
// error path instead.
using Cplx = std::complex<double>;

// Base class for every numeric failure raised by this library.
struct math_error : std::runtime_error {
    explicit math_error(const std::string& what) : std::runtime_error(what) {}
};

// Input inside the exclusion radius of a pole lattice (s=1 for zeta, the
// non-positive integers for gamma/polygamma, k*pi nodes for the bilateral
// sums, the integers for omega).
struct pole_error : math_error {
    pole_error(const std::string& what, Cplx where) : math_error(what), location(where) {}
    Cplx location;
};

// A zeta value entering a ratio fell below the magnitude floor (trivial or
// nontrivial zero proximity).
struct near_zero_error : math_error {
    near_zero_error(const std::string& what, Cplx where) : math_error(what), location(where) {}
    Cplx location;
};

// A series or a two-resolution contour comparison failed to settle.
struct non_convergent_error : math_error {
    explicit non_convergent_error(const std::string& what) : math_error(what) {}
};

// A registered singularity lies inside a requested contour disk, or the
// contour winds around a zero/pole of the integrand.
struct singularity_error : math_error {
    explicit singularity_error(const std::string& what) : math_error(what) {}
};

// Identity-catalog errors: point outside an identity's admissible set, a
// comparison mode the identity does not declare, a grid with no points.
struct inadmissible_point_error : std::invalid_argument {
    explicit inadmissible_point_error(const std::string& what) : std::invalid_argument(what) {}
};
struct unsupported_mode_error : std::invalid_argument {
    explicit unsupported_mode_error(const std::string& what) : std::invalid_argument(what) {}
};
struct empty_grid_error : std::invalid_argument {
    explicit empty_grid_error(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace zetafunc

#endif
