#include "doctest.h"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "hankel/errors.hpp"
#include "hankel/quadrature.hpp"
#include "hankel/special.hpp"
#include "support/dd.hpp"

using namespace hankel;

namespace {

constexpr double kPi = std::numbers::pi;
const cplx I(0.0, 1.0);

// L(alpha, lambda) over the undeformed loop (unit circle plus both edges of
// the cut), evaluated in double-double. On the lower edge the integrand
// reaches e^{lambda(pi/2 - 1)} and cancels against the circle arc near
// theta = -pi, which is exactly why this oracle needs extended precision.
cplx L_H1_dd(double alpha, double lambda, double X, int panels) {
    using namespace ddm;
    const dd lam(lambda);
    const dd ln_alpha = log(dd(alpha));
    const dd half_pi = dd_half_pi();

    // value of the integrand times dw/dt, on a cut edge (edge = +1 upper, -1 lower)
    const auto edge_term = [&](dd t, double edge) {
        const dd ln_t = log(t);
        // S = -t - pi/2 + i(ln t + i pi edge - ln alpha)
        const cdd S(-t - half_pi - dd(edge) * dd_pi(), ln_t - ln_alpha);
        const cdd D(half_pi + dd(edge) * dd_pi(), -(ln_t - ln_alpha));  // pi/2 - i ln(w/alpha)
        const cdd w(-t, dd(0.0));
        const cdd pref = cdd(dd(1.0)) / (w * D * cdd(dd_pi()));
        return exp(S * cdd(lam)) * pref;
    };

    // lower edge, w from -X to -1: w = -t, dw = -dt, t from X to 1
    const cdd lower = integrate([&](dd t) { return -edge_term(t, -1.0); }, dd(X), dd(1.0),
                                panels / 4);
    // circle w = e^{i theta}, theta from -pi to pi
    const cdd circle = integrate(
        [&](dd th) {
            dd s, c;
            sincos(th, s, c);
            const cdd w(c, s);
            const cdd iw(-s, c);  // dw/dtheta
            const cdd S(c - half_pi - th, s - ln_alpha);  // w - pi/2 + i(i theta - ln alpha)
            const cdd D(half_pi + th, ln_alpha);          // pi/2 - i(i theta - ln alpha)
            const cdd pref = cdd(dd(1.0)) / (w * D * cdd(dd_pi()));
            return exp(S * cdd(lam)) * pref * iw;
        },
        -dd_pi(), dd_pi(), panels);
    // upper edge, w from -1 to -X: t from 1 to X
    const cdd upper = integrate([&](dd t) { return -edge_term(t, 1.0); }, dd(1.0), dd(X),
                                panels / 8);

    return to_complex(lower + circle + upper);
}

}  // namespace

TEST_CASE("closed circle integral of 1/z is 2 pi i") {
    const auto f = [](cplx z) { return 1.0 / z; };
    const auto r = integrate_piece(f, ArcSeg{cplx(0.0), 1.0, -kPi, kPi}, 1e-13);
    CHECK(std::abs(r.value - 2.0 * kPi * I) < 1e-12);
}

TEST_CASE("entire integrand over a polyline is path independent") {
    const auto f = [](cplx z) { return std::exp(z) * z; };
    // antiderivative (z-1) e^z
    const auto F = [](cplx z) { return (z - 1.0) * std::exp(z); };
    const cplx a(-1.0, 0.5), b(2.0, -1.0);
    ComplexPath direct({LineSeg{a, b}});
    ComplexPath dog_leg({LineSeg{a, cplx(0.0, 2.0)}, LineSeg{cplx(0.0, 2.0), b}});
    const cplx expected = F(b) - F(a);
    CHECK(std::abs(integrate_path(f, direct, 1e-13).value - expected) < 1e-12);
    CHECK(std::abs(integrate_path(f, dog_leg, 1e-13).value - expected) < 1e-12);
}

TEST_CASE("path reversal negates the integral; ray pieces round trip") {
    const auto f = [](cplx z) { return std::exp(-z * z); };
    ComplexPath p({RaySeg{cplx(0.5, 0.2), std::polar(1.0, 0.3), 2.0},
                   LineSeg{cplx(0.5, 0.2) + std::polar(2.0, 0.3),
                           cplx(0.5, 0.2) + std::polar(2.0, 0.3) + cplx(0.0, 1.0)}});
    const cplx v = integrate_path(f, p, 1e-13).value;
    const cplx vr = integrate_path(f, p.reversed(), 1e-13).value;
    CHECK(std::abs(v + vr) < 1e-12);
    CHECK(p.total_length() == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("discontinuous paths are rejected") {
    CHECK_THROWS_AS(ComplexPath({LineSeg{cplx(0.0), cplx(1.0)},
                                 LineSeg{cplx(1.5), cplx(2.0)}}),
                    structural_error);
    CHECK_THROWS_AS(ComplexPath({}), structural_error);
}

TEST_CASE("budget exhaustion throws with the partial result attached") {
    // pole sitting exactly on the path: the error estimate never settles
    const auto f = [](cplx z) { return 1.0 / (z - cplx(0.5)); };
    try {
        integrate_piece(f, LineSeg{cplx(0.0), cplx(1.0)}, 1e-13);
        FAIL("expected budget_exceeded_error");
    } catch (const budget_exceeded_error& e) {
        CHECK(e.partial.evaluations > 0);
        CHECK(std::isfinite(std::real(e.partial.value)));
        CHECK(e.partial.abs_error_estimate > 1e-13);
    }
}

TEST_CASE("hankel gamma: values, radius independence, pole guard") {
    for (cplx s : {cplx(0.5), cplx(2.5), cplx(0.5, 1.0), cplx(-0.5, 0.3)}) {
        const cplx ref = lanczos_gamma(s);
        CHECK(std::abs(hankel_gamma(s, 1e-12) - ref) < 1e-10 * std::abs(ref));
    }
    const cplx a = hankel_gamma(cplx(0.5), 1e-12, 1.0);
    const cplx b = hankel_gamma(cplx(0.5), 1e-12, 0.5);
    CHECK(std::abs(a - b) < 1e-10 * std::abs(a));
    CHECK_THROWS_AS(hankel_gamma(cplx(1.0), 1e-12), domain_error);
    CHECK_THROWS_AS(hankel_gamma(cplx(-2.0), 1e-12), domain_error);
}

TEST_CASE("finite-loop sum identity") {
    for (double x : {1.0, -1.0, 10.0}) {
        const auto [lhs, rhs] = hankel_sum_identity(x, 1e-12, 60);
        CHECK(std::abs(lhs - rhs) < 1e-9 * (1.0 + std::abs(lhs)));
    }
    CHECK_THROWS_AS(hankel_sum_identity(0.0, 1e-12, 60), domain_error);
    CHECK_THROWS_AS(hankel_sum_identity(1.0, 1e-12, 3), domain_error);
}

TEST_CASE("Re S is independent of alpha") {
    std::mt19937 rng(33);
    std::uniform_real_distribution<double> U(-3.0, 3.0);
    for (int i = 0; i < 60; ++i) {
        cplx w(U(rng), U(rng));
        if (std::real(w) <= 0.0 && std::abs(std::imag(w)) < 1e-2) w += cplx(0.0, 1.0);
        const double expected = std::real(w) - kPi / 2.0 - std::arg(w);
        for (double alpha : {0.3, 1.0, 2.718281828459045, 7.0})
            CHECK(std::abs(std::real(S_phase(alpha, w)) - expected) < 1e-13);
    }
}

TEST_CASE("reference L: undeformed-loop oracle agrees through the deformation") {
    // the loop integrand peaks at e^{lambda(pi/2-1)} ~ 2.4e12 and cancels to
    // an O(0.1) answer; the oracle runs in double-double
    for (double alpha : {5.0, 1.1}) {
        const cplx oracle = L_H1_dd(alpha, 50.0, 4.0, 160);
        const cplx direct = reference_L(alpha, 50.0, 1e-13).value;
        CAPTURE(alpha);
        CHECK(std::abs(direct - oracle) < 2e-12);
    }
}

TEST_CASE("reference L: self-consistency across tolerances") {
    const auto a = reference_L(5.0, 50.0, 1e-12);
    const auto b = reference_L(5.0, 50.0, 1e-14);
    CHECK(std::abs(a.value - b.value) < 1e-10);
    CHECK(a.tail_bound < 1e-12);
    CHECK(b.evaluations >= a.evaluations);
}

TEST_CASE("reference L: leading-order magnitude at alpha = e") {
    const double lambda = 80.0;
    const double e = 2.718281828459045;
    const cplx lead = std::polar(1.0, kPi / 4.0) * std::exp(-I * lambda * 2.0) *
                      (1.0 / std::sqrt(kPi)) * std::sqrt(2.0 / lambda);
    const cplx L = reference_L(e, lambda, 1e-12).value;
    CHECK(std::abs(L - lead) < 1.0 * std::pow(lambda, -1.5));
    CHECK(std::abs(L - lead) > 1e-6);  // the correction term is genuinely there
}

TEST_CASE("reference L rejects bad parameters") {
    CHECK_THROWS_AS(reference_L(-1.0, 50.0, 1e-10), domain_error);
    CHECK_THROWS_AS(reference_L(2.0, 0.0, 1e-10), domain_error);
}
