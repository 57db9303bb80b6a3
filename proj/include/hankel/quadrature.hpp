#ifndef HANKEL_QUADRATURE_HPP
#define HANKEL_QUADRATURE_HPP

#include <complex>
#include <functional>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

namespace hankel {

using cplx = std::complex<double>;

// Pieces of a piecewise-smooth integration contour.
struct LineSeg {
    cplx a, b;
};
struct ArcSeg {
    cplx center;
    double radius, theta0, theta1;  // traversed from theta0 to theta1
};
struct RaySeg {
    cplx origin;
    cplx direction;  // unit complex
    double length;   // finite truncation chosen by the caller's tail rule
};
using PathPiece = std::variant<LineSeg, ArcSeg, RaySeg>;

cplx piece_start(const PathPiece& p);
cplx piece_end(const PathPiece& p);
double piece_length(const PathPiece& p);

// Ordered pieces; consecutive pieces must be endpoint-continuous to 1e-12
// (relative to the path scale).
class ComplexPath {
public:
    explicit ComplexPath(std::vector<PathPiece> pieces);
    const std::vector<PathPiece>& pieces() const { return pieces_; }
    double total_length() const;
    ComplexPath reversed() const;

private:
    std::vector<PathPiece> pieces_;
};

struct QuadratureResult {
    cplx value{};
    double abs_error_estimate = 0.0;
    double tail_bound = 0.0;
    long evaluations = 0;
};

// Thrown when adaptive subdivision exhausts its budget; carries the
// partial result accumulated so far.
struct budget_exceeded_error : std::runtime_error {
    budget_exceeded_error(const char* what, QuadratureResult partial_result)
        : std::runtime_error(what), partial(partial_result) {}
    QuadratureResult partial;
};

using Integrand = std::function<cplx(cplx)>;

// Globally adaptive Gauss-Kronrod (7,15) over the path; subdivides until the
// summed local error estimates fall below tol (absolute).
QuadratureResult integrate_path(const Integrand& f, const ComplexPath& path, double tol);

// Same engine over a single piece with its own integrand; used where a
// multivalued integrand needs an explicit branch per piece.
QuadratureResult integrate_piece(const Integrand& f, const PathPiece& piece, double tol);

// Gamma(s) through the Hankel-contour representation
//   Gamma(s) = (e^{i pi s} - e^{-i pi s})^{-1} \int_{H1} e^z z^{s-1} dz,
// with the loop rays truncated by an envelope rule. circle_radius lets
// tests verify radius independence; the contour's circle is radius 1 by default.
cplx hankel_gamma(cplx s, double tol, double circle_radius = 1.0);

// Both sides of the finite-loop sum identity
//   sum_k (-i)^k / (k! (k+ix)) = (e^{-pi x} - e^{pi x})^{-1} \int e^{iz} z^{ix-1} dz
// over the unit loop with endpoints at -1 on either side of the cut.
std::pair<cplx, cplx> hankel_sum_identity(double x, double tol, int k_max);

// Direct-quadrature ground truth for L(alpha, lambda), integrated over the
// deformed polyline contour (descending real part off the saddle) with a
// closed-form tail truncation.
QuadratureResult reference_L(double alpha, double lambda, double tol);

// The oscillatory integrand of L and its phase, shared with the asymptotic
// engine and tests.
cplx L_integrand(double alpha, cplx w, double lambda);
cplx S_phase(double alpha, cplx w);

}  // namespace hankel

#endif
