#include "hankel/sweep.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "hankel/asymptotic.hpp"
#include "hankel/errors.hpp"
#include "hankel/quadrature.hpp"
#include "hankel/saddle.hpp"
#include "hankel/special.hpp"
#include "json.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hankel {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrtPi = 1.7724538509055160273;
const cplx kI(0.0, 1.0);

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string fmt(cplx z) {
    const double im = std::imag(z);
    return fmt(std::real(z)) + (im < 0 ? " - " : " + ") + fmt(std::abs(im)) + "i";
}

}  // namespace

double alpha_from_spec(const std::string& spec, double lambda) {
    std::string s = spec;
    std::erase(s, ' ');
    if (s == "1+1/sqrt(lambda)") return 1.0 + 1.0 / std::sqrt(lambda);
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw domain_error("alpha spec is neither a number nor a known rule: " + spec);
    }
    if (pos != s.size())
        throw domain_error("alpha spec is neither a number nor a known rule: " + spec);
    return v;
}

std::vector<double> lambda_grid(double lo, double hi, int count) {
    if (!(lo > 0.0) || !(hi >= lo) || count < 1)
        throw domain_error("lambda_grid: need 0 < min <= max and count >= 1");
    std::vector<double> g;
    if (count == 1) {
        g.push_back(lo);
        return g;
    }
    const double llo = std::log(lo), lhi = std::log(hi);
    for (int i = 0; i < count; ++i)
        g.push_back(std::exp(llo + (lhi - llo) * i / (count - 1)));
    g.front() = lo;
    g.back() = hi;
    return g;
}

SweepRecord evaluate_point(double alpha, double lambda, int N, double tol) {
    SweepRecord rec;
    rec.alpha = alpha;
    rec.lambda = lambda;
    rec.N = N;
    const double scale = std::pow(lambda, 0.5 * (N + 2));
    try {
        rec.L_ref = reference_L(alpha, lambda, tol).value;
        const AsymptoticResult reg = L_asymptotic_regularized(alpha, lambda, N);
        rec.L_reg = reg.value;
        rec.K = reg.k_correction.value_or(cplx(0.0));
        rec.D_N = rec.L_ref - reg.value;
        rec.scaled_D = scale * std::abs(rec.D_N);
        if (std::abs(alpha - 1.0) >= 1e-12) {
            const AsymptoticResult plain = L_asymptotic_plain(alpha, lambda, N);
            rec.L_plain = plain.value;
            rec.E_N = rec.L_ref - plain.value;
            rec.scaled_E = scale * std::abs(*rec.E_N);
        }
    } catch (const budget_exceeded_error& e) {
        rec.status = std::string("budget: ") + e.what();
    } catch (const std::exception& e) {
        rec.status = e.what();
    }
    return rec;
}

std::vector<SweepRecord> run_sweep_serial(const RunConfig& cfg) {
    const std::vector<double> grid = lambda_grid(cfg.lambda_min, cfg.lambda_max, cfg.points);
    std::vector<SweepRecord> out;
    out.reserve(grid.size());
    for (double lambda : grid)
        out.push_back(evaluate_point(alpha_from_spec(cfg.alpha_spec, lambda), lambda, cfg.N,
                                     cfg.tol));
    return out;
}

std::vector<SweepRecord> run_sweep(const RunConfig& cfg) {
#ifdef _OPENMP
    if (cfg.workers > 1) {
        const std::vector<double> grid =
            lambda_grid(cfg.lambda_min, cfg.lambda_max, cfg.points);
        std::vector<double> alphas;
        alphas.reserve(grid.size());
        for (double lambda : grid) alphas.push_back(alpha_from_spec(cfg.alpha_spec, lambda));
        shared_chart();  // build once before the parallel region
        std::vector<SweepRecord> out(grid.size());
        const auto n = static_cast<std::ptrdiff_t>(grid.size());
#pragma omp parallel for schedule(dynamic) num_threads(cfg.workers)
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            const auto u = static_cast<std::size_t>(i);
            out[u] = evaluate_point(alphas[u], grid[u], cfg.N, cfg.tol);
        }
        return out;
    }
#endif
    return run_sweep_serial(cfg);
}

double flatness_ratio(const std::vector<double>& column) {
    if (column.empty()) throw domain_error("flatness_ratio: empty column");
    double lo = column.front(), hi = column.front();
    for (double v : column) {
        if (!std::isfinite(v) || !(v > 0.0))
            throw domain_error("flatness_ratio: entries must be finite and positive");
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    return hi / lo;
}

namespace {

// Each check returns a residual that is ~1e-12 or better on a correct build.
// Residuals are floored at DBL_EPSILON: nothing below double rounding can be
// certified, so an unattainable tolerance fails every check.
using CheckFn = std::function<double()>;

double check_chart_coefficients() {
    const SaddleChart chart = build_chart(4, 1e-12);
    const cplx expected[4] = {cplx(0.0, -1.0), std::polar(1.0, kPi / 4.0),
                              cplx(-1.0 / 3.0), -std::polar(1.0 / 36.0, 3.0 * kPi / 4.0)};
    double r = 0.0;
    for (int k = 0; k < 4; ++k)
        r = std::max(r, std::abs(chart.series_w_of_r.coeff(k) - expected[k]));
    return r;
}

double check_chart_residual() {
    // Branch-free form of the defining identity: iw = exp(i r^2/2 + i(w+i)).
    const SaddleChart& chart = shared_chart();
    double res = 0.0;
    for (double r : {0.5, 1.5, 3.0}) {
        const cplx w = w_of_r(chart, r);
        const cplx rhs = std::exp(kI * (0.5 * r * r) + kI * (w + kI));
        res = std::max(res, std::abs(kI * w - rhs) / (1.0 + std::abs(w)));
    }
    return res;
}

double check_gamma_hankel() {
    double res = 0.0;
    for (cplx s : {cplx(0.5), cplx(2.5), cplx(0.5, 1.0)}) {
        const cplx ref = lanczos_gamma(s);
        res = std::max(res, std::abs(hankel_gamma(s, 1e-12) - ref) / std::abs(ref));
    }
    const cplx a = hankel_gamma(cplx(0.5), 1e-12, 1.0);
    const cplx b = hankel_gamma(cplx(0.5), 1e-12, 0.5);
    return std::max(res, std::abs(a - b) / std::abs(a));
}

double check_sum_identity() {
    double res = 0.0;
    for (double x : {1.0, -1.0, 10.0}) {
        const auto [lhs, rhs] = hankel_sum_identity(x, 1e-12, 60);
        res = std::max(res, std::abs(lhs - rhs) / (1.0 + std::abs(lhs)));
    }
    return res;
}

double check_re_s_invariance() {
    std::mt19937 rng(20240817u);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    double res = 0.0;
    for (int i = 0; i < 40; ++i) {
        cplx w(3.0 * U(rng), 3.0 * U(rng));
        if (std::real(w) <= 0.0 && std::abs(std::imag(w)) < 1e-3) w += cplx(0.0, 0.5);
        for (double alpha : {0.5, 1.0, 2.0, 5.0}) {
            const double expected = std::real(w) - kPi / 2.0 - std::arg(w);
            res = std::max(res, std::abs(std::real(S_phase(alpha, w)) - expected));
        }
    }
    return res;
}

double check_closed_form_n3() {
    const double alpha = 5.0, lambda = 50.0;
    const AsymptoticResult reg = L_asymptotic_regularized(alpha, lambda, 3);
    const cplx reg_series = reg.value - reg.k_correction.value_or(cplx(0.0));
    const cplx plain = L_asymptotic_plain(alpha, lambda, 3).value;
    const cplx cf_reg = l_reg_n3_closed_form(alpha, lambda);
    const cplx cf_plain = l_plain_n3_closed_form(alpha, lambda);
    return std::max(std::abs(reg_series - cf_reg) / std::abs(cf_reg),
                    std::abs(plain - cf_plain) / std::abs(cf_plain));
}

double check_lemma41(double side) {
    const cplx z = std::polar(1.0, kPi / 4.0) + side * std::polar(0.3, 3.0 * kPi / 4.0);
    const cplx a = k_hat_0(z);
    const cplx b = k_hat_0_quadrature(z, 1e-13);
    return std::abs(a - b) / std::abs(a);
}

double check_plemelj() {
    const double delta = 1e-10;
    const cplx limit = kSqrtPi * std::polar(1.0, -kPi / 4.0) / 2.0;
    const cplx up = k_hat_0(std::polar(delta, 3.0 * kPi / 4.0));
    const cplx down = k_hat_0(-std::polar(delta, 3.0 * kPi / 4.0));
    return std::max(std::abs(up + limit), std::abs(down - limit));
}

double check_k0_reduction() {
    const cplx z = kI * (5.0 - 1.0) * std::sqrt(50.0 / 2.0);
    const cplx a = k_hat_0(z);
    const cplx b = k_hat_0_quadrature(z, 1e-13);
    return std::abs(a - b) / std::abs(a);
}

double check_k_truncation() {
    const cplx a = K_integral(1.0, 50.0, 1e-12);
    const cplx b = K_integral(1.0, 50.0, 1e-14);
    return std::abs(a - b) / std::abs(b);
}

double check_reference_consistency() {
    const cplx a = reference_L(5.0, 50.0, 1e-11).value;
    const cplx b = reference_L(5.0, 50.0, 1e-12).value;
    return std::abs(a - b) / std::abs(b);
}

const std::vector<std::pair<std::string, CheckFn>>& check_table() {
    static const std::vector<std::pair<std::string, CheckFn>> table = {
        {"chart_coefficients", check_chart_coefficients},
        {"chart_residual", check_chart_residual},
        {"gamma_hankel", check_gamma_hankel},
        {"sum_identity", check_sum_identity},
        {"re_s_invariance", check_re_s_invariance},
        {"closed_form_n3", check_closed_form_n3},
        {"lemma41_lower", [] { return check_lemma41(-1.0); }},
        {"lemma41_upper", [] { return check_lemma41(1.0); }},
        {"plemelj", check_plemelj},
        {"k0_reduction", check_k0_reduction},
        {"k_truncation", check_k_truncation},
        {"reference_consistency", check_reference_consistency},
    };
    return table;
}

}  // namespace

std::vector<std::string> validation_check_names() {
    std::vector<std::string> names;
    for (const auto& [name, fn] : check_table()) names.push_back(name);
    return names;
}

std::vector<ValidationCheck> run_validate(double tol, const std::string& only) {
    if (!(tol > 0.0)) throw domain_error("run_validate: tol must be positive");
    std::vector<ValidationCheck> report;
    bool matched = false;
    for (const auto& [name, fn] : check_table()) {
        if (!only.empty() && name != only) continue;
        matched = true;
        const double residual = std::max(fn(), DBL_EPSILON);
        report.push_back({name, residual, tol, residual <= tol});
    }
    if (!only.empty() && !matched)
        throw domain_error("run_validate: unknown check: " + only);
    return report;
}

namespace {

cplx arg_complex(const std::vector<double>& a, std::size_t i) {
    return {a.at(i), i + 1 < a.size() ? a[i + 1] : 0.0};
}

void need_args(const std::vector<double>& a, std::size_t lo, std::size_t hi,
               const char* name) {
    if (a.size() < lo || a.size() > hi)
        throw domain_error(std::string(name) + ": wrong number of arguments");
}

}  // namespace

std::vector<std::string> eval_operation_names() {
    return {"hankel_gamma", "lanczos_gamma", "erf",      "bleistein_B",
            "k_hat_0",      "k_hat_0_quad", "reference_L", "L_reg",
            "L_plain",      "K",            "K0",        "w_of_r",
            "dw_dr",        "g_coeff",      "greg_coeff", "sum_identity"};
}

std::string eval_operation(const std::string& name, const std::vector<double>& args) {
    if (name == "hankel_gamma") {
        need_args(args, 1, 2, "hankel_gamma");
        return fmt(hankel_gamma(arg_complex(args, 0), 1e-12));
    }
    if (name == "lanczos_gamma") {
        need_args(args, 1, 2, "lanczos_gamma");
        return fmt(lanczos_gamma(arg_complex(args, 0)));
    }
    if (name == "erf") {
        need_args(args, 1, 2, "erf");
        return fmt(erf_complex(arg_complex(args, 0)));
    }
    if (name == "bleistein_B") {
        need_args(args, 1, 2, "bleistein_B");
        return fmt(bleistein_B(arg_complex(args, 0)));
    }
    if (name == "k_hat_0") {
        need_args(args, 1, 2, "k_hat_0");
        return fmt(k_hat_0(arg_complex(args, 0)));
    }
    if (name == "k_hat_0_quad") {
        need_args(args, 1, 2, "k_hat_0_quad");
        return fmt(k_hat_0_quadrature(arg_complex(args, 0), 1e-12));
    }
    if (name == "reference_L") {
        need_args(args, 2, 3, "reference_L");
        return fmt(reference_L(args[0], args[1], args.size() > 2 ? args[2] : 1e-12).value);
    }
    if (name == "L_reg") {
        need_args(args, 3, 3, "L_reg");
        return fmt(L_asymptotic_regularized(args[0], args[1], static_cast<int>(args[2])).value);
    }
    if (name == "L_plain") {
        need_args(args, 3, 3, "L_plain");
        return fmt(L_asymptotic_plain(args[0], args[1], static_cast<int>(args[2])).value);
    }
    if (name == "K") {
        need_args(args, 2, 3, "K");
        return fmt(K_integral(args[0], args[1], args.size() > 2 ? args[2] : 1e-12));
    }
    if (name == "K0") {
        need_args(args, 2, 2, "K0");
        return fmt(K0_leading(args[0], args[1]));
    }
    if (name == "w_of_r") {
        need_args(args, 1, 2, "w_of_r");
        return fmt(w_of_r(shared_chart(), arg_complex(args, 0)));
    }
    if (name == "dw_dr") {
        need_args(args, 1, 1, "dw_dr");
        return fmt(dw_dr(shared_chart(), args[0]));
    }
    if (name == "g_coeff") {
        need_args(args, 2, 2, "g_coeff");
        const int k = static_cast<int>(args[1]);
        return fmt(g_coefficients(args[0], k).coeff(k));
    }
    if (name == "greg_coeff") {
        need_args(args, 2, 2, "greg_coeff");
        const int k = static_cast<int>(args[1]);
        return fmt(greg_coefficients(args[0], k).coeff(k));
    }
    if (name == "sum_identity") {
        need_args(args, 1, 1, "sum_identity");
        const auto [lhs, rhs] = hankel_sum_identity(args[0], 1e-12, 60);
        return "lhs = " + fmt(lhs) + "   rhs = " + fmt(rhs);
    }
    throw domain_error("eval: unknown operation: " + name);
}

namespace {

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

const char* kCsvHeader =
    "alpha,lambda,N,L_ref_re,L_ref_im,L_reg_re,L_reg_im,L_plain_re,L_plain_im,"
    "K_re,K_im,D_N_re,D_N_im,E_N_re,E_N_im,scaled_D,scaled_E,status";

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

}  // namespace

void write_csv(std::ostream& os, const std::vector<SweepRecord>& records) {
    os << kCsvHeader << "\n";
    for (const auto& r : records) {
        os << fmt(r.alpha) << ',' << fmt(r.lambda) << ',' << r.N << ','
           << fmt(std::real(r.L_ref)) << ',' << fmt(std::imag(r.L_ref)) << ','
           << fmt(std::real(r.L_reg)) << ',' << fmt(std::imag(r.L_reg)) << ',';
        if (r.L_plain) os << fmt(std::real(*r.L_plain)) << ',' << fmt(std::imag(*r.L_plain));
        else os << ',';
        os << ',' << fmt(std::real(r.K)) << ',' << fmt(std::imag(r.K)) << ','
           << fmt(std::real(r.D_N)) << ',' << fmt(std::imag(r.D_N)) << ',';
        if (r.E_N) os << fmt(std::real(*r.E_N)) << ',' << fmt(std::imag(*r.E_N));
        else os << ',';
        os << ',' << fmt(r.scaled_D) << ',';
        if (r.scaled_E) os << fmt(*r.scaled_E);
        os << ',' << csv_quote(r.status) << "\n";
    }
}

std::vector<SweepRecord> read_csv(std::istream& is) {
    std::vector<SweepRecord> out;
    std::string line;
    if (!std::getline(is, line)) return out;
    if (line != kCsvHeader) throw domain_error("read_csv: unexpected header");
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto f = split_csv_line(line);
        if (f.size() != 18) throw domain_error("read_csv: wrong field count");
        SweepRecord r;
        r.alpha = std::stod(f[0]);
        r.lambda = std::stod(f[1]);
        r.N = std::stoi(f[2]);
        r.L_ref = {std::stod(f[3]), std::stod(f[4])};
        r.L_reg = {std::stod(f[5]), std::stod(f[6])};
        if (!f[7].empty()) r.L_plain = cplx{std::stod(f[7]), std::stod(f[8])};
        r.K = {std::stod(f[9]), std::stod(f[10])};
        r.D_N = {std::stod(f[11]), std::stod(f[12])};
        if (!f[13].empty()) r.E_N = cplx{std::stod(f[13]), std::stod(f[14])};
        r.scaled_D = std::stod(f[15]);
        if (!f[16].empty()) r.scaled_E = std::stod(f[16]);
        r.status = f[17];
        out.push_back(r);
    }
    return out;
}

void write_json(std::ostream& os, const std::vector<SweepRecord>& records) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : records) {
        nlohmann::json o;
        o["alpha"] = r.alpha;
        o["lambda"] = r.lambda;
        o["N"] = r.N;
        o["L_ref"] = {std::real(r.L_ref), std::imag(r.L_ref)};
        o["L_reg"] = {std::real(r.L_reg), std::imag(r.L_reg)};
        o["L_plain"] = r.L_plain
                           ? nlohmann::json{std::real(*r.L_plain), std::imag(*r.L_plain)}
                           : nlohmann::json(nullptr);
        o["K"] = {std::real(r.K), std::imag(r.K)};
        o["D_N"] = {std::real(r.D_N), std::imag(r.D_N)};
        o["E_N"] = r.E_N ? nlohmann::json{std::real(*r.E_N), std::imag(*r.E_N)}
                         : nlohmann::json(nullptr);
        o["scaled_D"] = r.scaled_D;
        o["scaled_E"] = r.scaled_E ? nlohmann::json(*r.scaled_E) : nlohmann::json(nullptr);
        o["status"] = r.status;
        arr.push_back(std::move(o));
    }
    os << arr.dump(2) << "\n";
}

}  // namespace hankel
