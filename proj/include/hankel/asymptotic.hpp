#ifndef HANKEL_ASYMPTOTIC_HPP
#define HANKEL_ASYMPTOTIC_HPP

#include <complex>
#include <optional>
#include <vector>

#include "hankel/saddle.hpp"
#include "hankel/series.hpp"

namespace hankel {

// Value of a truncated saddle-point expansion plus bookkeeping.
struct AsymptoticResult {
    cplx value{};
    int N = 0;
    std::vector<cplx> terms;            // j-th even-order summand
    std::optional<cplx> k_correction;   // pole-correction integral, when used
    double remainder_scale = 0.0;       // lambda^{-(N+2)/2}
};

// Phase bookkeeping for a given alpha.
struct PhaseData {
    double alpha;
    cplx S_at_saddle;   // -i (1 + ln alpha)
    cplx pole_location; // -i alpha, simple pole of the amplitude (residue i/pi)
};

PhaseData make_phase_data(double alpha);

// Taylor coefficients about r = 0 of the transplanted amplitude
//   g(alpha, r) = e^{i pi/4} r / (pi (pi/2 - i ln(w/alpha)) (1 - i w)),
// computed by composing the closed form with the chart series.
// Requires alpha != 1 (the amplitude pole sits at the saddle there).
TruncatedSeries g_coefficients(double alpha, int max_order);

// Same for the regularized amplitude (pole subtracted); analytic for every
// alpha > 0. Near alpha = 1 the series route cancels catastrophically, so
// coefficients are extracted by a Cauchy-circle FFT on the refined map.
TruncatedSeries greg_coefficients(double alpha, int max_order);

// Even-order expansion with the pole-correction integral K added.
AsymptoticResult L_asymptotic_regularized(double alpha, double lambda, int N);

// Plain expansion, no correction term; alpha != 1.
AsymptoticResult L_asymptotic_plain(double alpha, double lambda, int N);

// Pole-correction integral over the steepest-descent coordinate.
cplx K_integral(double alpha, double lambda, double tol);

// Leading behavior of K, via the normalized Cauchy-Gaussian reduction.
cplx K0_leading(double alpha, double lambda);

// Normalized Cauchy-Gaussian integral; closed form through the Bleistein
// function (default) or direct quadrature (cross-validation path).
cplx k_hat_0(cplx z);
cplx k_hat_0_quadrature(cplx z, double tol);

// Third-order (N = 3) closed forms of the two expansions, kept as an
// independent code path for validation.
cplx l_reg_n3_closed_form(double alpha, double lambda);   // excludes K
cplx l_plain_n3_closed_form(double alpha, double lambda);

// The shared chart used by the engine (order 8, residual 1e-13).
const SaddleChart& shared_chart();

}  // namespace hankel

#endif
