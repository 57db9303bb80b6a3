#include "hankel/saddle.hpp"

#include <cmath>
#include <numbers>

#include "hankel/errors.hpp"

namespace hankel {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kSaddle(0.0, -1.0);

// Nearest-branch logarithm of iw, seeded for continuity.
cplx tracked_log_iw(cplx w, cplx ln_seed) {
    cplx l = std::log(cplx(0.0, 1.0) * w);
    const double k = std::round((std::imag(ln_seed) - std::imag(l)) / (2.0 * kPi));
    return l + cplx(0.0, 2.0 * kPi * k);
}

struct NewtonState {
    cplx w;
    cplx ln_iw;
};

// Newton on F(w) = w + i + i ln(iw) + r^2/2; F' = (w + i)/w.
bool newton_refine(NewtonState& st, cplx r, double residual_tol, int max_iter) {
    const cplx target = -0.5 * r * r;
    for (int it = 0; it < max_iter; ++it) {
        st.ln_iw = tracked_log_iw(st.w, st.ln_iw);
        const cplx F = st.w + cplx(0.0, 1.0) + cplx(0.0, 1.0) * st.ln_iw - target;
        if (std::abs(F) <= residual_tol) return true;
        const cplx denom = st.w + cplx(0.0, 1.0);
        if (std::abs(denom) < 1e-14) return false;
        st.w -= F * st.w / denom;
        if (!std::isfinite(std::real(st.w)) || !std::isfinite(std::imag(st.w))) return false;
    }
    st.ln_iw = tracked_log_iw(st.w, st.ln_iw);
    const cplx F = st.w + cplx(0.0, 1.0) + cplx(0.0, 1.0) * st.ln_iw - target;
    return std::abs(F) <= residual_tol;
}

bool refine_from_series(const TruncatedSeries& w_series, cplx r, double residual_tol, cplx& out) {
    NewtonState st{w_series.evaluate(r), cplx(0.0)};
    st.ln_iw = std::log(cplx(0.0, 1.0) * st.w);
    if (!newton_refine(st, r, residual_tol, 50)) return false;
    out = st.w;
    return true;
}

}  // namespace

cplx saddle_phase_offset(cplx w, cplx ln_seed) {
    return w + cplx(0.0, 1.0) + cplx(0.0, 1.0) * tracked_log_iw(w, ln_seed);
}

SaddleChart build_chart(int order, double residual_tol) {
    if (order < 1) throw structural_error("build_chart: order must be at least 1");
    if (!(residual_tol > 0.0)) throw structural_error("build_chart: residual_tol must be positive");
    const int n = std::max(order, 2);

    // phi(u) = u + i log(1 + iu) = (i/2) u^2 + u^3/3 + ..., u = w + i.
    const TruncatedSeries u = TruncatedSeries::variable(0.0, n);
    const TruncatedSeries one_plus_iu = u * cplx(0.0, 1.0) + cplx(1.0);
    const TruncatedSeries phi = u + series_log(one_plus_iu, 0.0) * cplx(0.0, 1.0);

    // r(u) = u * sqrt(-2 phi / u^2), branch fixed by dr/du = e^{-i pi/4} at 0.
    const TruncatedSeries q = (phi * cplx(-2.0)).shifted_down(2);
    const cplx root_branch = std::polar(1.0, -kPi / 4.0);  // sqrt(-i)
    const TruncatedSeries r_of_u = series_sqrt(q, root_branch).shifted_up(1);

    TruncatedSeries w_series = series_revert(r_of_u) + kSaddle;
    w_series = w_series.truncated(order);

    // Largest radius on which Newton from the series seed certifies the
    // residual, probed on a 64-point circle and bisected.
    auto radius_ok = [&](double rho) {
        for (int k = 0; k < 64; ++k) {
            const cplx r = std::polar(rho, 2.0 * kPi * k / 64.0);
            cplx w;
            if (!refine_from_series(w_series, r, residual_tol, w)) return false;
        }
        return true;
    };
    double lo = 0.0, hi = 2.0;
    if (radius_ok(hi)) {
        lo = hi;
    } else {
        for (int it = 0; it < 30; ++it) {
            const double mid = 0.5 * (lo + hi);
            (radius_ok(mid) ? lo : hi) = mid;
        }
    }
    if (lo <= 0.0) throw domain_error("build_chart: no certified chart radius");

    return {w_series, lo, residual_tol};
}

cplx w_of_r(const SaddleChart& chart, cplx r) {
    if (r == cplx(0.0)) return kSaddle;

    if (std::abs(r) <= chart.domain_radius) {
        cplx w;
        if (refine_from_series(chart.series_w_of_r, r, chart.residual_tol, w)) return w;
        // fall through to continuation from a smaller radius
    }

    // Continuation along the ray through r in steps of domain_radius/4,
    // carrying the logarithm branch for continuity.
    const double target = std::abs(r);
    const cplx dir = r / target;
    const double step = std::max(chart.domain_radius / 4.0, 0.01);
    double s = std::min(target, chart.domain_radius * 0.75);

    NewtonState st{chart.series_w_of_r.evaluate(s * dir), cplx(0.0)};
    st.ln_iw = std::log(cplx(0.0, 1.0) * st.w);
    if (!newton_refine(st, s * dir, chart.residual_tol, 50))
        throw domain_error("w_of_r: refinement failed inside chart domain");

    while (s < target) {
        s = std::min(target, s + step);
        if (!newton_refine(st, s * dir, chart.residual_tol, 50))
            throw domain_error("w_of_r: continuation failed");
    }
    return st.w;
}

cplx dw_dr(const SaddleChart& chart, double r) {
    if (r == 0.0) return std::polar(1.0, kPi / 4.0);
    const cplx w = w_of_r(chart, r);
    return -w * r / (w + cplx(0.0, 1.0));
}

}  // namespace hankel
