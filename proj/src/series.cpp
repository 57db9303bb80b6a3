#include "hankel/series.hpp"

#include <algorithm>
#include <cmath>

namespace hankel {

namespace {

constexpr double kCenterTol = 1e-12;

bool centers_match(cplx a, cplx b) {
    return std::abs(a - b) <= kCenterTol * (1.0 + std::abs(a));
}

// Raw coefficient-vector helpers; all vectors have the same length n+1.

std::vector<cplx> vmul(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    const std::size_t n = a.size();
    std::vector<cplx> out(n, cplx(0.0));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == cplx(0.0)) continue;
        for (std::size_t j = 0; j + i < n; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

std::vector<cplx> vadd(std::vector<cplx> a, const std::vector<cplx>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

std::vector<cplx> vscale(std::vector<cplx> a, cplx s) {
    for (auto& c : a) c *= s;
    return a;
}

// outer(t) where t has zero constant coefficient.
std::vector<cplx> vcompose0(const std::vector<cplx>& outer, const std::vector<cplx>& t) {
    const std::size_t n = outer.size();
    std::vector<cplx> out(n, cplx(0.0));
    for (std::size_t j = n; j-- > 0;) {
        out = vmul(out, t);
        out[0] += outer[j];
    }
    return out;
}

std::vector<cplx> vreciprocal(const std::vector<cplx>& a) {
    const std::size_t n = a.size();
    std::vector<cplx> b(n, cplx(0.0));
    b[0] = 1.0 / a[0];
    for (std::size_t k = 1; k < n; ++k) {
        cplx acc(0.0);
        for (std::size_t j = 1; j <= k; ++j) acc += a[j] * b[k - j];
        b[k] = -acc * b[0];
    }
    return b;
}

}  // namespace

TruncatedSeries::TruncatedSeries(cplx center, std::vector<cplx> coeffs)
    : center_(center), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw structural_error("series needs at least the constant coefficient");
}

TruncatedSeries TruncatedSeries::variable(cplx center, int order) {
    if (order < 0) throw structural_error("negative series order");
    std::vector<cplx> c(static_cast<std::size_t>(order) + 1, cplx(0.0));
    c[0] = center;
    if (order >= 1) c[1] = 1.0;
    return {center, std::move(c)};
}

TruncatedSeries TruncatedSeries::constant(cplx center, cplx value, int order) {
    if (order < 0) throw structural_error("negative series order");
    std::vector<cplx> c(static_cast<std::size_t>(order) + 1, cplx(0.0));
    c[0] = value;
    return {center, std::move(c)};
}

cplx TruncatedSeries::evaluate(cplx x) const {
    const cplx d = x - center_;
    cplx acc(0.0);
    for (std::size_t j = coeffs_.size(); j-- > 0;) acc = acc * d + coeffs_[j];
    return acc;
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
    if (order < 0 || order > this->order())
        throw structural_error("truncation order out of range");
    return {center_, std::vector<cplx>(coeffs_.begin(), coeffs_.begin() + order + 1)};
}

TruncatedSeries TruncatedSeries::derivative() const {
    std::vector<cplx> c(coeffs_.size(), cplx(0.0));
    for (std::size_t j = 1; j < coeffs_.size(); ++j)
        c[j - 1] = coeffs_[j] * static_cast<double>(j);
    c.back() = 0.0;  // the top coefficient of the derivative is not representable
    return {center_, std::move(c)};
}

TruncatedSeries TruncatedSeries::shifted_up(int k) const {
    std::vector<cplx> c(coeffs_.size(), cplx(0.0));
    for (std::size_t j = 0; j + static_cast<std::size_t>(k) < c.size(); ++j)
        c[j + static_cast<std::size_t>(k)] = coeffs_[j];
    return {center_, std::move(c)};
}

TruncatedSeries TruncatedSeries::shifted_down(int k) const {
    double scale = 0.0;
    for (const auto& c : coeffs_) scale = std::max(scale, std::abs(c));
    for (int j = 0; j < k; ++j)
        if (std::abs(coeffs_[static_cast<std::size_t>(j)]) > 1e-13 * (1.0 + scale))
            throw structural_error("shifted_down: low-order coefficients do not vanish");
    std::vector<cplx> c(coeffs_.size(), cplx(0.0));
    for (std::size_t j = static_cast<std::size_t>(k); j < coeffs_.size(); ++j)
        c[j - static_cast<std::size_t>(k)] = coeffs_[j];
    return {center_, std::move(c)};
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (!centers_match(a.center_, b.center_) || a.order() != b.order())
        throw structural_error("series addition: mismatched centers or orders");
    return {a.center_, vadd(a.coeffs_, b.coeffs_)};
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (!centers_match(a.center_, b.center_) || a.order() != b.order())
        throw structural_error("series subtraction: mismatched centers or orders");
    return a + (-b);
}

TruncatedSeries TruncatedSeries::operator-() const {
    return {center_, vscale(coeffs_, cplx(-1.0))};
}

TruncatedSeries TruncatedSeries::operator*(cplx s) const {
    return {center_, vscale(coeffs_, s)};
}

TruncatedSeries TruncatedSeries::operator+(cplx s) const {
    auto c = coeffs_;
    c[0] += s;
    return {center_, std::move(c)};
}

TruncatedSeries series_multiply(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (!centers_match(a.center(), b.center()) || a.order() != b.order())
        throw structural_error("series_multiply: mismatched centers or orders");
    return {a.center(), vmul(a.coeffs(), b.coeffs())};
}

TruncatedSeries series_reciprocal(const TruncatedSeries& s) {
    if (s.coeff(0) == cplx(0.0))
        throw domain_error("series_reciprocal: vanishing constant coefficient");
    return {s.center(), vreciprocal(s.coeffs())};
}

TruncatedSeries series_divide(const TruncatedSeries& a, const TruncatedSeries& b) {
    return series_multiply(a, series_reciprocal(b));
}

TruncatedSeries series_compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
    if (!centers_match(inner.coeff(0), outer.center()))
        throw structural_error("series_compose: inner constant term does not match outer center");
    const int order = std::min(outer.order(), inner.order());
    std::vector<cplx> o(outer.coeffs().begin(), outer.coeffs().begin() + order + 1);
    std::vector<cplx> t(inner.coeffs().begin(), inner.coeffs().begin() + order + 1);
    t[0] = 0.0;  // compose in the shifted variable; the center offset is exact by construction
    return {inner.center(), vcompose0(o, t)};
}

TruncatedSeries series_revert(const TruncatedSeries& s) {
    const int n = s.order();
    if (n < 1 || std::abs(s.coeff(1)) == 0.0)
        throw degenerate_reversion_error("series_revert: vanishing linear coefficient");
    const std::size_t len = static_cast<std::size_t>(n) + 1;

    // Centered copy sigma(x) = s(center + x) - s0, zero constant term.
    std::vector<cplx> sigma = s.coeffs();
    sigma[0] = 0.0;

    std::vector<cplx> id(len, cplx(0.0));
    if (n >= 1) id[1] = 1.0;

    // Newton iteration on sigma(tau(y)) = y:
    //   tau <- tau - (sigma o tau - id) / (sigma' o tau);
    // attained order doubles per step.
    std::vector<cplx> sigmap(len, cplx(0.0));
    for (std::size_t j = 1; j < len; ++j) sigmap[j - 1] = sigma[j] * static_cast<double>(j);

    std::vector<cplx> tau(len, cplx(0.0));
    tau[1] = 1.0 / s.coeff(1);
    int steps = 2;
    for (int m = 1; m < n + 1; m *= 2) ++steps;
    for (int it = 0; it < steps; ++it) {
        std::vector<cplx> err = vcompose0(sigma, tau);
        for (std::size_t j = 0; j < len; ++j) err[j] -= id[j];
        std::vector<cplx> denom = vcompose0(sigmap, tau);
        tau = vadd(tau, vscale(vmul(err, vreciprocal(denom)), cplx(-1.0)));
    }

    std::vector<cplx> out = tau;
    out[0] = s.center();
    return {s.coeff(0), std::move(out)};
}

TruncatedSeries series_sqrt(const TruncatedSeries& s, cplx sqrt_of_constant) {
    if (s.coeff(0) == cplx(0.0) || sqrt_of_constant == cplx(0.0))
        throw domain_error("series_sqrt: vanishing constant coefficient");
    TruncatedSeries y = TruncatedSeries::constant(s.center(), sqrt_of_constant, s.order());
    int steps = 2;
    for (int m = 1; m < s.order() + 1; m *= 2) ++steps;
    for (int it = 0; it < steps; ++it)
        y = (y + series_divide(s, y)) * cplx(0.5);
    return y;
}

TruncatedSeries series_log(const TruncatedSeries& s, cplx log_of_constant) {
    if (s.coeff(0) == cplx(0.0))
        throw domain_error("series_log: vanishing constant coefficient");
    const std::size_t len = static_cast<std::size_t>(s.order()) + 1;
    std::vector<cplx> t = vscale(s.coeffs(), 1.0 / s.coeff(0));
    t[0] = 0.0;
    // log(1 + t) = sum_{k>=1} (-1)^{k+1} t^k / k
    std::vector<cplx> pw = t;
    std::vector<cplx> acc(len, cplx(0.0));
    for (int k = 1; k <= s.order(); ++k) {
        double sign = (k % 2 == 1) ? 1.0 : -1.0;
        acc = vadd(acc, vscale(pw, cplx(sign / k)));
        if (k < s.order()) pw = vmul(pw, t);
    }
    acc[0] += log_of_constant;
    return {s.center(), std::move(acc)};
}

}  // namespace hankel
