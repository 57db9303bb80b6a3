#include "doctest.h"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "hankel/errors.hpp"
#include "hankel/saddle.hpp"
#include "support/dd.hpp"

using namespace hankel;

namespace {

constexpr double kPi = std::numbers::pi;
const cplx I(0.0, 1.0);

}  // namespace

TEST_CASE("chart: low-order coefficients match hand expansion") {
    // w(r) = -i + e^{i pi/4} r - r^2/3 - e^{3i pi/4} r^3/36 + ...
    const auto chart = build_chart(4, 1e-12);
    const auto& s = chart.series_w_of_r;
    CHECK(std::abs(s.coeff(0) - cplx(0.0, -1.0)) < 1e-14);
    CHECK(std::abs(s.coeff(1) - std::polar(1.0, kPi / 4.0)) < 1e-13);
    CHECK(std::abs(s.coeff(2) - cplx(-1.0 / 3.0)) < 1e-13);
    CHECK(std::abs(s.coeff(3) + std::polar(1.0 / 36.0, 3.0 * kPi / 4.0)) < 1e-13);
    CHECK(chart.domain_radius > 0.5);
}

TEST_CASE("chart: defining identity holds on random real r") {
    const auto chart = build_chart(8, 1e-13);
    std::mt19937 rng(41);
    std::uniform_real_distribution<double> U(-2.5, 2.5);
    for (int i = 0; i < 200; ++i) {
        const double r = U(rng);
        const cplx w = w_of_r(chart, r);
        // branch seed: near the saddle iw is near 1
        const cplx F = saddle_phase_offset(w, std::log(I * w)) + 0.5 * r * r;
        CHECK(std::abs(F) < 5e-13);
        // the path stays strictly inside the lower half plane
        CHECK(std::imag(w) < 0.0);
    }
}

TEST_CASE("chart: dw/dr matches the series derivative and finite differences") {
    const auto chart = build_chart(8, 1e-13);
    const auto ds = chart.series_w_of_r.derivative();
    CHECK(std::abs(dw_dr(chart, 0.0) - std::polar(1.0, kPi / 4.0)) < 1e-13);
    // close to r = 0 the truncated series derivative is accurate
    CHECK(std::abs(dw_dr(chart, 0.05) - ds.evaluate(cplx(0.05))) < 1e-8);
    const double h = 1e-5;
    for (double r : {0.2, 1.0, 2.2}) {
        const cplx fd = (w_of_r(chart, r + h) - w_of_r(chart, r - h)) / (2.0 * h);
        CHECK(std::abs(dw_dr(chart, r) - fd) < 1e-8);
    }
}

TEST_CASE("chart: continuation past the series radius stays on the root branch") {
    const auto chart = build_chart(8, 1e-13);
    const double r = 3.0;
    const cplx w = w_of_r(chart, r);
    CHECK(std::abs(saddle_phase_offset(w, std::log(I * w)) + 0.5 * r * r) < 5e-13);
    // continuity against a nearby point
    const cplx w2 = w_of_r(chart, 2.99);
    CHECK(std::abs(w - w2) < 0.1);
}

TEST_CASE("chart: series seed agrees with the refined value inside the radius") {
    const auto chart = build_chart(8, 1e-13);
    const double r = 0.25 * chart.domain_radius;
    const cplx seed = chart.series_w_of_r.evaluate(cplx(r));
    CHECK(std::abs(seed - w_of_r(chart, r)) < 1e-3);
}

TEST_CASE("chart: bad arguments are rejected") {
    CHECK_THROWS_AS(build_chart(0, 1e-12), structural_error);
    CHECK_THROWS_AS(build_chart(4, 0.0), structural_error);
    CHECK_THROWS_AS(build_chart(4, -1.0), structural_error);
}

TEST_CASE("chart: order-8 coefficients certified in extended precision") {
    // Promote the double coefficients to double-double and expand
    //   phi(w(r)) + r^2/2, phi(w) = u + i ln(1 + iu), u = w + i,
    // with ln(1+x) = sum_m (-1)^{m+1} x^m / m. Every coefficient through
    // order 8 must vanish to ~1e-15, which certifies the chart as the true
    // inverse rather than merely self-consistent.
    using namespace ddm;
    const auto chart = build_chart(8, 1e-13);
    const int n = 8;
    // u(r) = w(r) + i as a dd polynomial in r
    std::vector<cdd> u(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        const cplx c = chart.series_w_of_r.coeff(k);
        u[static_cast<std::size_t>(k)] = cdd(dd(std::real(c)), dd(std::imag(c)));
    }
    u[0] = u[0] + cdd(dd(0.0), dd(1.0));  // +i; cancels the saddle constant

    const auto mul = [n](const std::vector<cdd>& a, const std::vector<cdd>& b) {
        std::vector<cdd> out(static_cast<std::size_t>(n) + 1);
        for (int i = 0; i <= n; ++i)
            for (int j = 0; i + j <= n; ++j)
                out[static_cast<std::size_t>(i + j)] +=
                    a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
        return out;
    };

    // F = u + i ln(1 + iu) + r^2/2
    std::vector<cdd> F = u;
    std::vector<cdd> iu(static_cast<std::size_t>(n) + 1);
    const cdd im(dd(0.0), dd(1.0));
    for (int k = 0; k <= n; ++k) iu[static_cast<std::size_t>(k)] = im * u[static_cast<std::size_t>(k)];
    std::vector<cdd> pw = iu;
    for (int m = 1; m <= n; ++m) {
        // i * (-1)^{m+1} / m * (iu)^m
        const double sign = (m % 2 == 1) ? 1.0 : -1.0;
        const cdd coef = im * cdd(dd(sign / m));
        for (int k = 0; k <= n; ++k)
            F[static_cast<std::size_t>(k)] += coef * pw[static_cast<std::size_t>(k)];
        if (m < n) pw = mul(pw, iu);
    }
    F[2] += cdd(dd(0.5));

    for (int k = 0; k <= n; ++k) {
        CAPTURE(k);
        CHECK(to_double(sqrt(abs2(F[static_cast<std::size_t>(k)]))) < 2e-15);
    }
}
