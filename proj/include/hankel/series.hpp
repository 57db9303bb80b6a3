#ifndef HANKEL_SERIES_HPP
#define HANKEL_SERIES_HPP

#include <complex>
#include <vector>

#include "hankel/errors.hpp"

namespace hankel {

using cplx = std::complex<double>;

// Dense truncated power series about a center: p(x) = sum_j c_j (x - center)^j.
// All arithmetic is closed at the stored order; higher powers are discarded.
class TruncatedSeries {
public:
    TruncatedSeries(cplx center, std::vector<cplx> coeffs);

    // The series representing x itself, i.e. center + (x - center).
    static TruncatedSeries variable(cplx center, int order);
    static TruncatedSeries constant(cplx center, cplx value, int order);

    cplx center() const { return center_; }
    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<cplx>& coeffs() const { return coeffs_; }
    cplx coeff(int j) const { return coeffs_.at(static_cast<std::size_t>(j)); }

    cplx evaluate(cplx x) const;

    TruncatedSeries truncated(int order) const;
    TruncatedSeries derivative() const;

    // p(x) * (x - center)^k, discarding overflowing powers.
    TruncatedSeries shifted_up(int k) const;
    // p(x) / (x - center)^k; requires the k lowest coefficients to vanish
    // (below 1e-13 in magnitude).
    TruncatedSeries shifted_down(int k) const;

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    TruncatedSeries operator-() const;
    TruncatedSeries operator*(cplx s) const;
    TruncatedSeries operator+(cplx s) const;

private:
    cplx center_;
    std::vector<cplx> coeffs_;
};

// Cauchy product truncated at the common order.
TruncatedSeries series_multiply(const TruncatedSeries& a, const TruncatedSeries& b);

// 1 / s; requires a nonzero constant coefficient.
TruncatedSeries series_reciprocal(const TruncatedSeries& s);

TruncatedSeries series_divide(const TruncatedSeries& a, const TruncatedSeries& b);

// outer(inner(x)); requires inner.coeffs[0] == outer.center.
TruncatedSeries series_compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

// Functional inverse: returns t with t(s(x)) = x + O(x^{order+1}).
// t is centered at s.coeffs[0]; requires s.coeffs[1] != 0.
TruncatedSeries series_revert(const TruncatedSeries& s);

// sqrt(s) with the branch fixed by the given square root of the constant
// coefficient; requires that constant to be nonzero.
TruncatedSeries series_sqrt(const TruncatedSeries& s, cplx sqrt_of_constant);

// log(s/s0) + log_of_constant, continuous branch seeded by the caller;
// requires a nonzero constant coefficient s0.
TruncatedSeries series_log(const TruncatedSeries& s, cplx log_of_constant);

}  // namespace hankel

#endif
