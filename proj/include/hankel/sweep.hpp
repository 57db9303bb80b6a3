#ifndef HANKEL_SWEEP_HPP
#define HANKEL_SWEEP_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hankel/series.hpp"

namespace hankel {

// One (alpha, lambda, N) evaluation row of a verification sweep.
struct SweepRecord {
    double alpha = 0.0;
    double lambda = 0.0;
    int N = 0;
    cplx L_ref{};
    cplx L_reg{};
    std::optional<cplx> L_plain;  // absent at alpha = 1 (amplitude pole at the saddle)
    cplx K{};
    cplx D_N{};
    std::optional<cplx> E_N;
    double scaled_D = 0.0;  // lambda^{(N+2)/2} |D_N|
    std::optional<double> scaled_E;
    std::string status = "ok";  // "ok", or failure reason ("budget: ..." when over budget)
};

struct RunConfig {
    std::string alpha_spec = "5";  // number, or the rule "1+1/sqrt(lambda)"
    double lambda_min = 20.0;
    double lambda_max = 100.0;
    int points = 17;
    int N = 3;
    double tol = 1e-12;
    int workers = 1;
    std::string out;             // empty = stdout
    std::string format = "csv";  // csv | json
};

// Resolves an alpha spec at a given lambda. Throws domain_error on an
// unrecognized rule.
double alpha_from_spec(const std::string& spec, double lambda);

// Log-spaced grid, endpoints included.
std::vector<double> lambda_grid(double lo, double hi, int count);

// Evaluates one grid point; never throws, failures land in status.
SweepRecord evaluate_point(double alpha, double lambda, int N, double tol);

// Serial reference sweep and the parallel variant (OpenMP over grid points
// when workers > 1; identical output order either way).
std::vector<SweepRecord> run_sweep_serial(const RunConfig& cfg);
std::vector<SweepRecord> run_sweep(const RunConfig& cfg);

// max/min over the column; requires all entries finite and positive.
double flatness_ratio(const std::vector<double>& column);

struct ValidationCheck {
    std::string name;
    double residual;
    double tol;
    bool pass;
};

// Runs the named consistency checks (all of them when `only` is empty).
// Residuals are floored at machine epsilon so no tolerance below double
// rounding can be certified.
std::vector<ValidationCheck> run_validate(double tol, const std::string& only = "");
std::vector<std::string> validation_check_names();

// One-shot evaluation of a public operation; returns the formatted result.
// Throws domain_error for unknown names or malformed argument lists.
std::string eval_operation(const std::string& name, const std::vector<double>& args);
std::vector<std::string> eval_operation_names();

void write_csv(std::ostream& os, const std::vector<SweepRecord>& records);
std::vector<SweepRecord> read_csv(std::istream& is);
void write_json(std::ostream& os, const std::vector<SweepRecord>& records);

}  // namespace hankel

#endif
