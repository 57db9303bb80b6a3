// Times the serial sweep against the OpenMP-parallel one on the same grid
// and checks that both produce identical records.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "hankel/asymptotic.hpp"
#include "hankel/sweep.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

template <typename F>
double timed(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    hankel::RunConfig cfg;
    cfg.alpha_spec = "5";
    cfg.points = argc > 1 ? std::atoi(argv[1]) : 17;
    cfg.tol = 1e-10;
    cfg.workers = argc > 2 ? std::atoi(argv[2]) : 4;
#ifdef _OPENMP
    if (argc <= 2) cfg.workers = omp_get_max_threads();
#endif

    hankel::shared_chart();  // exclude one-time setup from both timings

    std::vector<hankel::SweepRecord> serial, parallel;
    const double t_serial = timed([&] { serial = hankel::run_sweep_serial(cfg); });
    const double t_parallel = timed([&] { parallel = hankel::run_sweep(cfg); });

    if (serial.size() != parallel.size()) {
        std::fprintf(stderr, "record count mismatch\n");
        return 1;
    }
    for (std::size_t i = 0; i < serial.size(); ++i) {
        if (serial[i].L_ref != parallel[i].L_ref || serial[i].L_reg != parallel[i].L_reg ||
            serial[i].status != parallel[i].status) {
            std::fprintf(stderr, "mismatch at grid point %zu\n", i);
            return 1;
        }
    }

    std::printf("points %d  workers %d\n", cfg.points, cfg.workers);
    std::printf("serial   %8.3f s\n", t_serial);
    std::printf("parallel %8.3f s  (speedup %.2fx)\n", t_parallel,
                t_parallel > 0.0 ? t_serial / t_parallel : 0.0);
    return 0;
}
