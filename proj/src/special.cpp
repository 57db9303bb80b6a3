#include "hankel/special.hpp"

#include <cmath>
#include <numbers>

#include "hankel/errors.hpp"

namespace hankel {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

// Maclaurin series; adequate whenever the largest term does not dwarf the
// result (small |z|, or z close to the imaginary axis where erf is large).
cplx erf_taylor(cplx z) {
    const cplx z2 = z * z;
    cplx term = z;
    cplx sum = z;
    for (int k = 1; k < 300; ++k) {
        term *= -z2 / static_cast<double>(k);
        const cplx contrib = term / static_cast<double>(2 * k + 1);
        sum += contrib;
        if (std::abs(contrib) < 1e-18 * std::abs(sum) + 1e-300) break;
    }
    return sum * (2.0 / kSqrtPi);
}

// Laplace continued fraction for erfc, Re z > 0, via modified Lentz.
cplx erfc_cf(cplx z) {
    constexpr double tiny = 1e-290;
    cplx f = z, C = z, D = 0.0;
    for (int k = 1; k < 600; ++k) {
        const double a = 0.5 * k;
        const cplx b = z;  // erfc CF: all partial denominators are z
        D = b + a * D;
        if (std::abs(D) < tiny) D = tiny;
        C = b + a / C;
        if (std::abs(C) < tiny) C = tiny;
        D = 1.0 / D;
        const cplx delta = C * D;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return std::exp(-z * z) / (kSqrtPi * f);
}

// Asymptotic erfc expansion, |z| large, Re z >= 0.
cplx erfc_asymptotic(cplx z) {
    const cplx z2 = z * z;
    cplx term(1.0);
    cplx sum(1.0);
    double prev = 1.0;
    for (int k = 1; k < 40; ++k) {
        term *= -(2.0 * k - 1.0) / (2.0 * z2);
        const double mag = std::abs(term);
        if (mag > prev) break;  // divergent tail reached
        sum += term;
        prev = mag;
        if (mag < 1e-18) break;
    }
    return std::exp(-z2) / (z * kSqrtPi) * sum;
}

cplx erf_first_quadrant(cplx z) {
    const double a = std::abs(z);
    if (a <= 2.5) return erf_taylor(z);
    if (a >= 6.0) return 1.0 - erfc_asymptotic(z);
    // cos(2*arg z) <= -0.85: close enough to the imaginary axis that the
    // Maclaurin cancellation is harmless (the result is exponentially large).
    const cplx z2 = z * z;
    if (std::real(z2) <= -0.85 * a * a) return erf_taylor(z);
    return 1.0 - erfc_cf(z);
}

}  // namespace

double half_integer_gamma(int j) {
    if (j < 0) throw domain_error("half_integer_gamma: j must be nonnegative");
    double v = kSqrtPi;
    for (int k = 0; k < j; ++k) v *= (k + 0.5);
    return v;
}

cplx erf_complex(cplx z) {
    if (z == cplx(0.0)) return 0.0;
    // Oddness and conjugate symmetry are enforced structurally.
    if (std::real(z) < 0.0 || (std::real(z) == 0.0 && std::imag(z) < 0.0))
        return -erf_complex(-z);
    if (std::imag(z) < 0.0) return std::conj(erf_complex(std::conj(z)));
    return erf_first_quadrant(z);
}

cplx bleistein_B(cplx z) {
    const cplx phase_q = std::polar(1.0, std::numbers::pi / 4.0);    // e^{i pi/4}
    const cplx phase_t = std::polar(1.0, 3 * std::numbers::pi / 4.0);
    return 0.5 * phase_t * kSqrtPi * (erf_complex(phase_q * z) - 1.0);
}

cplx lanczos_gamma(cplx s) {
    // Godfrey coefficients, g = 7, n = 9.
    static const double g = 7.0;
    static const double c[9] = {
        0.99999999999980993,    676.5203681218851,     -1259.1392167224028,
        771.32342877765313,     -176.61502916214059,   12.507343278686905,
        -0.13857109526572012,   9.9843695780195716e-6, 1.5056327351493116e-7};
    if (std::real(s) < 0.5) {
        // reflection formula
        const cplx pi = std::numbers::pi;
        return pi / (std::sin(pi * s) * lanczos_gamma(1.0 - s));
    }
    s -= 1.0;
    cplx x = c[0];
    for (int i = 1; i < 9; ++i) x += c[i] / (s + static_cast<double>(i));
    const cplx t = s + g + 0.5;
    return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, s + 0.5) * std::exp(-t) * x;
}

}  // namespace hankel
