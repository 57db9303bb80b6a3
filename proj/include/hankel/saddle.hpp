#ifndef HANKEL_SADDLE_HPP
#define HANKEL_SADDLE_HPP

#include <complex>

#include "hankel/series.hpp"

namespace hankel {

// Steepest-descent coordinate chart at the saddle w = -i of the phase
// S(alpha, w). The defining identity S(alpha, w(r)) - S(alpha, -i) = -r^2/2
// is alpha-free: S(alpha,w) - S(alpha,-i) = w + i + i ln(iw).
struct SaddleChart {
    TruncatedSeries series_w_of_r;  // center 0, w(0) = -i, w'(0) = e^{i pi/4}
    double domain_radius;           // validated conformality radius in r
    double residual_tol;
};

// Builds the chart: expands the phase about the saddle, takes the branch-fixed
// series square root, reverts, and probes the largest radius on which Newton
// refinement from the series seed converges to residual_tol.
SaddleChart build_chart(int order, double residual_tol);

// phi(w) = S(alpha, w) - S(alpha, -i) = w + i + i ln(iw), with the logarithm
// branch chosen nearest to ln_seed (continuity tracking across the cut).
cplx saddle_phase_offset(cplx w, cplx ln_seed);

// Refined inverse map: series seed plus Newton on phi(w) + r^2/2 = 0; outside
// the chart radius the root is continued in steps of domain_radius/4.
// Accepts complex r (needed by the coefficient extraction on circles).
cplx w_of_r(const SaddleChart& chart, cplx r);

// dw/dr = -w r / (w + i); the r = 0 limit is e^{i pi/4}.
cplx dw_dr(const SaddleChart& chart, double r);

}  // namespace hankel

#endif
