#include "hankel/asymptotic.hpp"

#include <cmath>
#include <numbers>

#include "hankel/errors.hpp"
#include "hankel/quadrature.hpp"
#include "hankel/special.hpp"

namespace hankel {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrtPi = 1.7724538509055160273;
const cplx kI(0.0, 1.0);
const cplx kPhaseQ = std::polar(1.0, kPi / 4.0);  // e^{i pi/4}

bool at_pole_collision(double alpha) { return std::abs(alpha - 1.0) < 1e-12; }

// Chart series of a given order (series only; no radius probing needed here).
TruncatedSeries w_series_of_order(int order) {
    if (order <= 8) return shared_chart().series_w_of_r.truncated(order);
    return build_chart(order, 1e-13).series_w_of_r;
}

// D(r) = pi/2 - i ln(w(r)/alpha) = i ln(alpha) - i log(1 + i u(r)).
TruncatedSeries amplitude_denominator(const TruncatedSeries& u, double alpha) {
    const TruncatedSeries one_plus_iu = u * kI + cplx(1.0);
    return series_log(one_plus_iu, 0.0) * (-kI) + kI * std::log(alpha);
}

// Cauchy-circle extraction of the Taylor coefficients of g_reg about r = 0,
// uniformly accurate through the alpha -> 1 coalescence.
TruncatedSeries greg_cauchy(double alpha, int max_order) {
    constexpr int M = 128;
    constexpr double rho = 0.25;
    const SaddleChart& chart = shared_chart();
    const double ln_alpha = std::log(alpha);

    std::vector<cplx> samples(M);
    for (int m = 0; m < M; ++m) {
        const cplx r = std::polar(rho, 2.0 * kPi * m / M);
        const cplx w = w_of_r(chart, r);
        const cplx D = kPi / 2.0 - kI * (std::log(w) - ln_alpha);
        const cplx bracket = 1.0 / (w * D) - kI / (w + kI * alpha);
        samples[static_cast<std::size_t>(m)] =
            w * kPhaseQ * r * bracket / (kPi * (1.0 - kI * w));
    }

    std::vector<cplx> coeffs(static_cast<std::size_t>(max_order) + 1);
    for (int k = 0; k <= max_order; ++k) {
        cplx acc(0.0);
        for (int m = 0; m < M; ++m)
            acc += samples[static_cast<std::size_t>(m)] *
                   std::polar(1.0, -2.0 * kPi * k * m / M);
        coeffs[static_cast<std::size_t>(k)] = acc / (M * std::pow(rho, k));
    }
    return {cplx(0.0), std::move(coeffs)};
}

AsymptoticResult assemble(double alpha, double lambda, int N, const TruncatedSeries& coeffs,
                          std::optional<cplx> correction) {
    const cplx pref = kPhaseQ * std::exp(-kI * lambda * (1.0 + std::log(alpha)));
    AsymptoticResult res;
    res.N = N;
    res.remainder_scale = std::pow(lambda, -0.5 * (N + 2));
    cplx sum(0.0);
    for (int j = 0; j <= N / 2; ++j) {
        const cplx term = pref * coeffs.coeff(2 * j) * half_integer_gamma(j) *
                          std::pow(2.0 / lambda, j + 0.5);
        res.terms.push_back(term);
        sum += term;
    }
    res.k_correction = correction;
    res.value = sum + correction.value_or(cplx(0.0));
    return res;
}

}  // namespace

const SaddleChart& shared_chart() {
    static const SaddleChart chart = build_chart(8, 1e-13);
    return chart;
}

PhaseData make_phase_data(double alpha) {
    if (!(alpha > 0.0)) throw domain_error("alpha must be positive");
    return {alpha, -kI * (1.0 + std::log(alpha)), -kI * alpha};
}

TruncatedSeries g_coefficients(double alpha, int max_order) {
    if (!(alpha > 0.0)) throw domain_error("g_coefficients: alpha must be positive");
    if (at_pole_collision(alpha))
        throw domain_error(
            "g_coefficients: amplitude pole collides with the saddle at alpha = 1; "
            "use the regularized branch");

    const TruncatedSeries w = w_series_of_order(max_order + 4);
    const TruncatedSeries u = w + kI;
    const TruncatedSeries u_over_r = u.shifted_down(1);
    const TruncatedSeries D = amplitude_denominator(u, alpha);
    const TruncatedSeries g =
        series_reciprocal(series_multiply(D, u_over_r)) * (kI * kPhaseQ / kPi);
    return g.truncated(max_order);
}

TruncatedSeries greg_coefficients(double alpha, int max_order) {
    if (!(alpha > 0.0)) throw domain_error("greg_coefficients: alpha must be positive");
    if (std::abs(alpha - 1.0) < 0.1) return greg_cauchy(alpha, max_order);

    const TruncatedSeries w = w_series_of_order(max_order + 4);
    const TruncatedSeries u = w + kI;
    const TruncatedSeries u_over_r = u.shifted_down(1);
    const TruncatedSeries D = amplitude_denominator(u, alpha);
    const TruncatedSeries w_plus_ia = w + kI * alpha;
    // g_reg = (i e^{i pi/4}/pi) (w + i alpha - i w D) / ((u/r) D (w + i alpha))
    const TruncatedSeries num = w_plus_ia - series_multiply(w, D) * kI;
    const TruncatedSeries den = series_multiply(series_multiply(u_over_r, D), w_plus_ia);
    const TruncatedSeries greg =
        series_multiply(num, series_reciprocal(den)) * (kI * kPhaseQ / kPi);
    return greg.truncated(max_order);
}

AsymptoticResult L_asymptotic_regularized(double alpha, double lambda, int N) {
    if (!(alpha > 0.0) || !(lambda > 0.0) || N < 1)
        throw domain_error("L_asymptotic_regularized: need alpha > 0, lambda > 0, N >= 1");
    const TruncatedSeries coeffs = greg_coefficients(alpha, 2 * (N / 2));
    const cplx K = K_integral(alpha, lambda, 1e-13);
    return assemble(alpha, lambda, N, coeffs, K);
}

AsymptoticResult L_asymptotic_plain(double alpha, double lambda, int N) {
    if (!(alpha > 0.0) || !(lambda > 0.0) || N < 1)
        throw domain_error("L_asymptotic_plain: need alpha > 0, lambda > 0, N >= 1");
    const TruncatedSeries coeffs = g_coefficients(alpha, 2 * (N / 2));
    return assemble(alpha, lambda, N, coeffs, std::nullopt);
}

cplx K_integral(double alpha, double lambda, double tol) {
    if (!(alpha > 0.0) || !(lambda > 0.0) || !(tol > 0.0))
        throw domain_error("K_integral: need alpha > 0, lambda > 0, tol > 0");
    const SaddleChart& chart = shared_chart();
    const double R = std::sqrt(2.0 * std::log(1.0 / tol) / lambda) + 2.0;
    const bool coalesced = at_pole_collision(alpha);

    // Symmetric fold h(r) + h(-r) of h = e^{-lambda r^2/2} w r / ((w+i)(w+i alpha)).
    // Near r = 0 the two halves cancel to leading order (exactly the 1/r pole
    // at alpha = 1), and the Newton-refined map loses relative accuracy as the
    // step amplifies residuals by |w/(w+i)| ~ 1/r. Both problems go away if
    // the fold is assembled at the series level: with n = w r and
    // d = (w+i)(w+i alpha), the combination n(r)d(-r) + n(-r)d(r) over
    // d(r)d(-r) is even and free of subtractive cancellation.
    const int ord = chart.series_w_of_r.order();
    const TruncatedSeries w = chart.series_w_of_r;
    const TruncatedSeries n = w.shifted_up(1).truncated(ord);
    const TruncatedSeries d = series_multiply(w + kI, w + kI * alpha);
    auto parity_flip = [](const TruncatedSeries& s) {
        std::vector<cplx> c(static_cast<std::size_t>(s.order()) + 1);
        for (int k = 0; k <= s.order(); ++k)
            c[static_cast<std::size_t>(k)] = (k % 2 == 0 ? s.coeff(k) : -s.coeff(k));
        return TruncatedSeries(s.center(), std::move(c));
    };
    const TruncatedSeries nf = parity_flip(n);
    const TruncatedSeries df = parity_flip(d);
    const TruncatedSeries q_num =
        (series_multiply(n, df) + series_multiply(nf, d)).shifted_down(2);
    const TruncatedSeries q_den = series_multiply(d, df).shifted_down(2);

    const auto h = [&](double r) {
        const cplx wr = w_of_r(chart, r);
        return wr * r / ((wr + kI) * (wr + kI * alpha));
    };
    const auto folded = [&](cplx z) -> cplx {
        const double r = std::real(z);
        const double gauss = std::exp(-0.5 * lambda * r * r);
        if (r == 0.0)
            return coalesced ? q_num.coeff(2) / q_den.coeff(2)
                             : q_num.coeff(0) / q_den.coeff(0);
        if (r < 0.05) return gauss * q_num.evaluate(r) / q_den.evaluate(r);
        return gauss * (h(r) + h(-r));
    };

    const cplx integral = integrate_piece(folded, LineSeg{cplx(0.0), cplx(R)}, tol * kPi).value;
    return -kI * std::exp(-kI * lambda * (1.0 + std::log(alpha))) / kPi * integral;
}

cplx K0_leading(double alpha, double lambda) {
    if (!(alpha > 0.0) || !(lambda > 0.0))
        throw domain_error("K0_leading: need alpha > 0, lambda > 0");
    if (at_pole_collision(alpha))
        throw domain_error("K0_leading: integrand pole sits on the contour at alpha = 1");
    const cplx z = kI * (alpha - 1.0) * std::sqrt(lambda / 2.0);
    return -2.0 * kPhaseQ / kSqrtPi * std::exp(-kI * lambda * (1.0 + std::log(alpha))) *
           k_hat_0(z);
}

cplx k_hat_0(cplx z) {
    const double side = std::imag(std::polar(1.0, -kPi / 4.0) * z);
    if (std::abs(side) <= 1e-14 * (1.0 + std::abs(z)))
        throw domain_error("k_hat_0: z lies on the jump line e^{i pi/4} R; choose a side");
    const cplx phase = std::exp(kI * z * z);
    if (side < 0.0) return phase * bleistein_B(z);
    return phase * (bleistein_B(z) - kSqrtPi * std::polar(1.0, -kPi / 4.0));
}

cplx k_hat_0_quadrature(cplx z, double tol) {
    const cplx pole = std::sqrt(2.0) * std::polar(1.0, -kPi / 4.0) * z;
    if (std::abs(std::imag(pole)) <= 1e-14 * (1.0 + std::abs(z)))
        throw domain_error("k_hat_0_quadrature: pole on the integration line");
    const double T = std::sqrt(2.0 * std::log(1.0 / tol)) + 2.0 + std::abs(z);
    const auto f = [pole](cplx zeta) {
        const double t = std::real(zeta);
        return std::exp(-0.5 * t * t) / (t + pole);
    };
    const cplx integral = integrate_piece(f, LineSeg{cplx(-T), cplx(T)}, tol).value;
    return -kPhaseQ / (2.0 * kSqrtPi) * integral;
}

cplx l_reg_n3_closed_form(double alpha, double lambda) {
    const double L = std::log(alpha);
    const double a1 = alpha - 1.0;
    const cplx pref = kPhaseQ * std::exp(-kI * lambda * (1.0 + L));
    const double t0 = (a1 - L) / (kSqrtPi * a1 * L);
    const double bracket =
        (1.0 + 10.0 * alpha + alpha * alpha) / (a1 * a1 * a1) -
        (12.0 - 6.0 * L + L * L) / (L * L * L);
    const cplx t1 = kI * bracket / (24.0 * kSqrtPi);
    return pref * (t0 * std::sqrt(2.0 / lambda) + t1 * std::pow(2.0 / lambda, 1.5));
}

cplx l_plain_n3_closed_form(double alpha, double lambda) {
    const double L = std::log(alpha);
    const cplx pref = kPhaseQ * std::exp(-kI * lambda * (1.0 + L));
    const double t0 = 1.0 / (kSqrtPi * L);
    const cplx t1 = -kI * (12.0 - 6.0 * L + L * L) / (24.0 * kSqrtPi * L * L * L);
    return pref * (t0 * std::sqrt(2.0 / lambda) + t1 * std::pow(2.0 / lambda, 1.5));
}

}  // namespace hankel
