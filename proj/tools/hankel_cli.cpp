// Command-line front end: verification sweeps, one-shot evaluations, and the
// built-in consistency checks.
//
// Exit codes: 0 success, 1 validation/evaluation failures, 2 usage error,
// 3 numerical budget exceeded.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hankel/errors.hpp"
#include "hankel/quadrature.hpp"
#include "hankel/sweep.hpp"

namespace {

int write_records(const hankel::RunConfig& cfg, const std::vector<hankel::SweepRecord>& recs) {
    std::ostringstream body;
    if (cfg.format == "json")
        hankel::write_json(body, recs);
    else
        hankel::write_csv(body, recs);

    if (cfg.out.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream f(cfg.out);
        if (!f) {
            std::cerr << "cannot open output file: " << cfg.out << "\n";
            return 2;
        }
        f << body.str();
    }

    bool budget = false, failed = false;
    for (const auto& r : recs) {
        if (r.status.rfind("budget:", 0) == 0) budget = true;
        else if (r.status != "ok") failed = true;
    }
    if (budget) return 3;
    return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Contour-integral asymptotics toolkit"};
    app.require_subcommand(1);

    hankel::RunConfig cfg;
    auto* sweep = app.add_subcommand("sweep", "Run a verification sweep over a lambda grid");
    sweep->add_option("--alpha", cfg.alpha_spec,
                      "alpha value, or the rule 1+1/sqrt(lambda)");
    sweep->add_option("--lambda-min", cfg.lambda_min, "grid lower endpoint");
    sweep->add_option("--lambda-max", cfg.lambda_max, "grid upper endpoint");
    sweep->add_option("--points", cfg.points, "grid size (log-spaced)");
    sweep->add_option("--N", cfg.N, "expansion order");
    sweep->add_option("--tol", cfg.tol, "quadrature tolerance");
    sweep->add_option("--out", cfg.out, "output path (default stdout)");
    sweep->add_option("--format", cfg.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sweep->add_option("--workers", cfg.workers, "parallel workers over grid points");

    std::string eval_name;
    std::vector<double> eval_args;
    auto* eval = app.add_subcommand("eval", "Evaluate one operation and print the result");
    eval->add_option("name", eval_name, "operation name")->required();
    eval->add_option("args", eval_args, "numeric arguments");

    double vtol = 1e-9;
    std::string vcheck;
    auto* validate = app.add_subcommand("validate", "Run built-in consistency checks");
    validate->add_option("--tol", vtol, "pass threshold for residuals");
    validate->add_option("--check", vcheck, "run a single named check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sweep->parsed()) return write_records(cfg, hankel::run_sweep(cfg));

        if (eval->parsed()) {
            std::cout << hankel::eval_operation(eval_name, eval_args) << "\n";
            return 0;
        }

        // validate
        const auto report = hankel::run_validate(vtol, vcheck);
        bool any_fail = false;
        for (const auto& c : report) {
            std::printf("%-24s residual %.3e  tol %.3e  %s\n", c.name.c_str(), c.residual,
                        c.tol, c.pass ? "pass" : "FAIL");
            any_fail = any_fail || !c.pass;
        }
        return any_fail ? 1 : 0;
    } catch (const hankel::budget_exceeded_error& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const hankel::domain_error& e) {
        // unknown operation / check names and malformed argument lists
        std::cerr << e.what() << "\n";
        const std::string msg = e.what();
        if (msg.find("unknown") != std::string::npos ||
            msg.find("wrong number of arguments") != std::string::npos ||
            msg.find("alpha spec") != std::string::npos)
            return 2;
        return 1;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
}
