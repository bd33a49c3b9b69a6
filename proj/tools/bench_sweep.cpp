// Times the replica harness on the same workload with the serial loop and
// with the OpenMP loop, and checks that both produce the identical table.

#include <chrono>
#include <cstdio>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "namegame/harness.hpp"

namespace {

using namespace namegame;

double time_sweep(const Config& config, std::string& table) {
    const auto start = std::chrono::steady_clock::now();
    table = sweep_csv(run_sweep(config));
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(stop - start).count();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs OpenMP benchmark of the replica sweep harness"};
    std::uint64_t n_sweeps = 2000;
    int replicas = 2;
    int threads = 0;
    std::uint64_t seed = 1;
    app.add_option("--sweeps", n_sweeps, "sweeps per run");
    app.add_option("--replicas", replicas, "replicas per grid point");
    app.add_option("--threads", threads, "OpenMP workers (0 = all cores)");
    app.add_option("--seed", seed, "master seed");
    CLI11_PARSE(app, argc, argv);

    Config config;
    config.seed = seed;
    config.n_sweeps = n_sweeps;
    config.relax_sweeps = n_sweeps / 2;
    config.window = 100;
    config.replicas = replicas;
    config.p_grid = {0.05, 0.15, 0.25, 0.35, 0.45};

#ifdef _OPENMP
    const int max_threads = threads > 0 ? threads : omp_get_max_threads();
#else
    const int max_threads = 1;
    std::cout << "built without OpenMP; both passes run the serial loop\n";
#endif

    const int n_jobs = static_cast<int>(config.p_grid.size()) * config.replicas;
    std::printf("workload: %d runs x %llu sweeps (L=%d)\n", n_jobs,
                static_cast<unsigned long long>(config.n_sweeps), config.model.L);

    config.threads = 1;
    std::string serial_table;
    const double t_serial = time_sweep(config, serial_table);
    std::printf("serial      : %8.3f s\n", t_serial);

    config.threads = max_threads;
    std::string parallel_table;
    const double t_parallel = time_sweep(config, parallel_table);
    std::printf("omp x%-6d : %8.3f s  (speedup %.2fx)\n", max_threads, t_parallel,
                t_serial / t_parallel);

    if (serial_table != parallel_table) {
        std::cerr << "MISMATCH: serial and parallel tables differ\n";
        return 1;
    }
    std::printf("tables identical (%d rows)\n", n_jobs);
    return 0;
}
