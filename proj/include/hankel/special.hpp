#ifndef HANKEL_SPECIAL_HPP
#define HANKEL_SPECIAL_HPP

#include <complex>

namespace hankel {

using cplx = std::complex<double>;

// Gamma(j + 1/2), by upward recursion from Gamma(1/2) = sqrt(pi).
double half_integer_gamma(int j);

// Error function of a complex argument. Region-split evaluation:
// Maclaurin series for small |z|, Laplace continued fraction at moderate
// |z|, asymptotic erfc expansion for large |z|. Relative accuracy
// ~1e-13 for |z| <= 10; oddness and conjugate symmetry hold exactly.
cplx erf_complex(cplx z);

// B(z) = integral of exp(-i zeta^2) from z to infinity along the
// exp(-i pi/4) ray, evaluated in closed form through erf_complex.
cplx bleistein_B(cplx z);

// Independent Gamma(s) via the Lanczos approximation (g = 7, n = 9),
// used to cross-check the Hankel-contour route.
cplx lanczos_gamma(cplx s);

}  // namespace hankel

#endif
