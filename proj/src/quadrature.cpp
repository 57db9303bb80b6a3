#include "hankel/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hankel/errors.hpp"

namespace hankel {

namespace {

constexpr double kPi = std::numbers::pi;

// Gauss-Kronrod (7,15) nodes and weights on [-1, 1] (QUADPACK values).
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct ParamPoint {
    cplx z;
    cplx dz;  // d(position)/dt
};

ParamPoint at_param(const PathPiece& p, double t) {
    if (const auto* l = std::get_if<LineSeg>(&p)) return {l->a + t * (l->b - l->a), l->b - l->a};
    if (const auto* a = std::get_if<ArcSeg>(&p)) {
        const double th = a->theta0 + t * (a->theta1 - a->theta0);
        const cplx e = std::polar(a->radius, th);
        return {a->center + e, cplx(0.0, 1.0) * e * (a->theta1 - a->theta0)};
    }
    const auto& r = std::get<RaySeg>(p);
    return {r.origin + t * r.direction * r.length, r.direction * r.length};
}

struct Interval {
    int piece;
    double t0, t1;
    cplx value;
    double err;
    int depth;
};

Interval gk15(const Integrand& f, const std::vector<PathPiece>& pieces, int pi, double t0,
              double t1, int depth, long& evals) {
    const double h = 0.5 * (t1 - t0);
    const double mid = 0.5 * (t0 + t1);
    cplx resk(0.0), resg(0.0);
    for (int i = 0; i < 8; ++i) {
        const double x = kXgk[i];
        cplx acc(0.0);
        if (i == 7) {
            const auto pp = at_param(pieces[static_cast<std::size_t>(pi)], mid);
            acc = f(pp.z) * pp.dz;
            ++evals;
            resk += kWgk[7] * acc;
            resg += kWg[3] * acc;
            continue;
        }
        const auto pa = at_param(pieces[static_cast<std::size_t>(pi)], mid - h * x);
        const auto pb = at_param(pieces[static_cast<std::size_t>(pi)], mid + h * x);
        acc = f(pa.z) * pa.dz + f(pb.z) * pb.dz;
        evals += 2;
        resk += kWgk[i] * acc;
        if (i % 2 == 1) resg += kWg[i / 2] * acc;
    }
    resk *= h;
    resg *= h;
    return {pi, t0, t1, resk, std::abs(resk - resg), depth};
}

QuadratureResult adaptive(const Integrand& f, const std::vector<PathPiece>& pieces, double tol) {
    constexpr int kMaxDepth = 40;
    constexpr std::size_t kMaxIntervals = 200000;

    long evals = 0;
    std::vector<Interval> iv;
    for (int p = 0; p < static_cast<int>(pieces.size()); ++p)
        for (int k = 0; k < 4; ++k)
            iv.push_back(gk15(f, pieces, p, 0.25 * k, 0.25 * (k + 1), 0, evals));

    auto totals = [&iv]() {
        cplx v(0.0);
        double e = 0.0;
        for (const auto& s : iv) {
            v += s.value;
            e += s.err;
        }
        return std::pair{v, e};
    };

    for (;;) {
        auto [value, err] = totals();
        if (err <= tol) return {value, err, 0.0, evals};

        std::size_t worst = 0;
        for (std::size_t i = 1; i < iv.size(); ++i)
            if (iv[i].err > iv[worst].err) worst = i;

        if (iv[worst].depth >= kMaxDepth || iv.size() >= kMaxIntervals)
            throw budget_exceeded_error("integrate_path: subdivision budget exceeded",
                                        {value, err, 0.0, evals});

        const Interval cur = iv[worst];
        const double tm = 0.5 * (cur.t0 + cur.t1);
        iv[worst] = gk15(f, pieces, cur.piece, cur.t0, tm, cur.depth + 1, evals);
        iv.push_back(gk15(f, pieces, cur.piece, tm, cur.t1, cur.depth + 1, evals));
    }
}

}  // namespace

cplx piece_start(const PathPiece& p) { return at_param(p, 0.0).z; }
cplx piece_end(const PathPiece& p) { return at_param(p, 1.0).z; }

double piece_length(const PathPiece& p) {
    if (const auto* l = std::get_if<LineSeg>(&p)) return std::abs(l->b - l->a);
    if (const auto* a = std::get_if<ArcSeg>(&p)) return a->radius * std::abs(a->theta1 - a->theta0);
    return std::get<RaySeg>(p).length;
}

ComplexPath::ComplexPath(std::vector<PathPiece> pieces) : pieces_(std::move(pieces)) {
    if (pieces_.empty()) throw structural_error("empty path");
    double scale = 1.0;
    for (const auto& p : pieces_) scale = std::max(scale, std::abs(piece_end(p)));
    for (std::size_t i = 0; i + 1 < pieces_.size(); ++i)
        if (std::abs(piece_end(pieces_[i]) - piece_start(pieces_[i + 1])) > 1e-12 * scale)
            throw structural_error("path pieces are not endpoint-continuous");
}

double ComplexPath::total_length() const {
    double s = 0.0;
    for (const auto& p : pieces_) s += piece_length(p);
    return s;
}

ComplexPath ComplexPath::reversed() const {
    std::vector<PathPiece> out;
    for (auto it = pieces_.rbegin(); it != pieces_.rend(); ++it) {
        if (const auto* l = std::get_if<LineSeg>(&*it))
            out.push_back(LineSeg{l->b, l->a});
        else if (const auto* a = std::get_if<ArcSeg>(&*it))
            out.push_back(ArcSeg{a->center, a->radius, a->theta1, a->theta0});
        else {
            const auto& r = std::get<RaySeg>(*it);
            out.push_back(LineSeg{r.origin + r.direction * r.length, r.origin});
        }
    }
    return ComplexPath(std::move(out));
}

QuadratureResult integrate_path(const Integrand& f, const ComplexPath& path, double tol) {
    if (!(tol > 0.0)) throw structural_error("integrate_path: tol must be positive");
    return adaptive(f, path.pieces(), tol);
}

QuadratureResult integrate_piece(const Integrand& f, const PathPiece& piece, double tol) {
    if (!(tol > 0.0)) throw structural_error("integrate_piece: tol must be positive");
    return adaptive(f, {piece}, tol);
}

namespace {

// log(1 + z) with full relative accuracy for small z.
cplx clog1p(cplx z) {
    const cplx w1 = 1.0 + z;
    if (w1 == cplx(1.0)) return z;
    return std::log(w1) * (z / (w1 - 1.0));
}

}  // namespace

cplx S_phase(double alpha, cplx w) {
    return w - kPi / 2.0 + cplx(0.0, 1.0) * (std::log(w) - std::log(alpha));
}

cplx L_integrand(double alpha, cplx w, double lambda) {
    // pi/2 - i ln(w/alpha) cancels to O(|w+i| + |ln alpha|) at the saddle;
    // the log1p form keeps it fully accurate there (principal branches agree
    // for w near -i).
    const cplx u = w + cplx(0.0, 1.0);
    const cplx denom =
        std::abs(u) < 0.5
            ? cplx(0.0, 1.0) * std::log(alpha) - cplx(0.0, 1.0) * clog1p(cplx(0.0, 1.0) * u)
            : kPi / 2.0 - cplx(0.0, 1.0) * (std::log(w) - std::log(alpha));
    return std::exp(lambda * S_phase(alpha, w)) / (kPi * w * denom);
}

cplx hankel_gamma(cplx s, double tol, double circle_radius) {
    const cplx denom = 2.0 * cplx(0.0, 1.0) * std::sin(kPi * s);
    if (std::abs(denom) < 1e-8) throw domain_error("hankel_gamma: s too close to an integer");
    const double rho = circle_radius;

    // Envelope rule: e^{-T} T^{max(Re s - 1, 0)} below tol/100.
    const double p = std::max(0.0, std::real(s) - 1.0);
    double T = -std::log(tol) + 5.0;
    for (int i = 0; i < 3; ++i) T = -std::log(tol) + std::log(100.0) + p * std::log(T) + 2.0;

    const double tol_i = tol * std::abs(denom) / 3.0;
    // Lower side of the cut: arg z = -pi.
    const auto f_lo = [s](cplx z) {
        const double r = -std::real(z);
        return std::exp(z + (s - 1.0) * cplx(std::log(r), -kPi));
    };
    const auto f_arc = [s](cplx z) { return std::exp(z + (s - 1.0) * std::log(z)); };
    const auto f_hi = [s](cplx z) {
        const double r = -std::real(z);
        return std::exp(z + (s - 1.0) * cplx(std::log(r), kPi));
    };

    const cplx lo = integrate_piece(f_lo, LineSeg{cplx(-T), cplx(-rho)}, tol_i).value;
    const cplx mid = integrate_piece(f_arc, ArcSeg{cplx(0.0), rho, -kPi, kPi}, tol_i).value;
    const cplx hi = integrate_piece(f_hi, LineSeg{cplx(-rho), cplx(-T)}, tol_i).value;
    return (lo + mid + hi) / denom;
}

std::pair<cplx, cplx> hankel_sum_identity(double x, double tol, int k_max) {
    if (x == 0.0) throw domain_error("hankel_sum_identity: pole at k = 0 when x = 0");

    cplx ck(1.0);  // (-i)^k / k!
    cplx lhs(0.0);
    for (int k = 0; k <= k_max; ++k) {
        lhs += ck / (static_cast<double>(k) + cplx(0.0, x));
        ck *= cplx(0.0, -1.0) / static_cast<double>(k + 1);
    }
    if (std::abs(ck) > tol)
        throw domain_error("hankel_sum_identity: k_max too small for the requested tol");

    const double denom = std::exp(-kPi * x) - std::exp(kPi * x);
    const auto f = [x](cplx z) {
        return std::exp(cplx(0.0, 1.0) * z + (cplx(0.0, x) - 1.0) * std::log(z));
    };
    const cplx integral =
        integrate_piece(f, ArcSeg{cplx(0.0), 1.0, -kPi, kPi}, tol * std::abs(denom)).value;
    return {lhs, integral / denom};
}

QuadratureResult reference_L(double alpha, double lambda, double tol) {
    if (!(alpha > 0.0) || !(lambda > 0.0))
        throw domain_error("reference_L: alpha and lambda must be positive");

    // Re S = Re w - pi/2 - arg w decays linearly along both tails; the lower
    // tail peaks at Re S = pi/2 - |Re w|, which fixes the truncation.
    double X = kPi / 2.0 + (-std::log(tol) + std::log(100.0 * 20.0)) / lambda;
    X = kPi / 2.0 + (-std::log(tol) + std::log(100.0 * (2.0 * X + 8.0))) / lambda + 1.0;

    const std::vector<PathPiece> pieces = {
        LineSeg{cplx(-X, -2.0), cplx(-1.0, -2.0)},
        LineSeg{cplx(-1.0, -2.0), cplx(1.0, 0.0)},
        LineSeg{cplx(1.0, 0.0), cplx(0.0, 1.0)},
        LineSeg{cplx(0.0, 1.0), cplx(-X, 1.0)},
    };
    ComplexPath path(pieces);

    const auto f = [alpha, lambda](cplx w) { return L_integrand(alpha, w, lambda); };
    QuadratureResult res = integrate_path(f, path, tol);

    // Certified tails: |integrand| at the cut ends decays at least like
    // e^{-lambda (x - X)} beyond the truncation.
    const cplx w_lo = cplx(-X, -2.0), w_hi = cplx(-X, 1.0);
    const double env_lo = std::abs(L_integrand(alpha, w_lo, lambda));
    const double env_hi = std::abs(L_integrand(alpha, w_hi, lambda));
    res.tail_bound = 2.0 * (env_lo + env_hi) / lambda;
    return res;
}

}  // namespace hankel
