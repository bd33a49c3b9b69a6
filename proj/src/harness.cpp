#include "namegame/harness.hpp"

#include <algorithm>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace namegame {

namespace {

std::filesystem::path snapshot_path(const std::string& out_dir, std::uint64_t sweep) {
    char name[32];
    std::snprintf(name, sizeof name, "snapshot_%08llu.pgm",
                  static_cast<unsigned long long>(sweep));
    return std::filesystem::path(out_dir) / name;
}

std::string format_opt_real(const std::optional<double>& value) {
    if (!value) return {};
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", *value);
    return buf;
}

} // namespace

RunArtifacts run_single(const Config& config) {
    SimState state = init_state(config.model, config.seed);
    RunArtifacts artifacts;
    artifacts.series.reserve(config.n_sweeps / config.window + 1);

    const SweepObserver observer = [&](SimState& s, double current_p) {
        if (s.sweep % config.window == 0)
            artifacts.series.push_back(measure_window(s, current_p));
        if (config.snapshot_every > 0 && s.sweep % config.snapshot_every == 0)
            write_snapshot(clusters(language_map(s), s.L), s.L,
                           snapshot_path(config.out_dir, s.sweep));
    };

    Schedule schedule = config.schedule;
    if (schedule.empty()) schedule.points.push_back({0, config.model.p});

    artifacts.status = run(state, config.model, config.n_sweeps, schedule, observer);

    const bool has_tail = std::any_of(artifacts.series.begin(), artifacts.series.end(),
                                      [&](const TimeSeriesRow& row) {
                                          return row.sweep > config.relax_sweeps;
                                      });
    if (has_tail)
        artifacts.steady = steady_state_average(artifacts.series, config.relax_sweeps);
    return artifacts;
}

std::vector<SweepRow> run_sweep(const Config& config) {
    if (config.p_grid.empty())
        throw ConfigError("config: p_grid must be nonempty for a sweep");

    std::vector<double> grid = config.p_grid;
    std::stable_sort(grid.begin(), grid.end());

    const int n_jobs = static_cast<int>(grid.size()) * config.replicas;
    std::vector<SweepRow> rows(n_jobs);

    auto run_job = [&](int job) {
        const int p_index = job / config.replicas;
        const int replica = job % config.replicas;
        Config job_config = config;
        job_config.model.p = grid[p_index];
        job_config.seed = derive_seed(config.seed, static_cast<std::uint64_t>(p_index),
                                      static_cast<std::uint64_t>(replica));
        job_config.snapshot_every = 0;
        const RunArtifacts artifacts = run_single(job_config);
        rows[job] = {job_config.model.p, replica, artifacts.status, artifacts.steady};
    };

#ifdef _OPENMP
    const int threads = config.threads > 0 ? config.threads : omp_get_max_threads();
#else
    const int threads = 1;
#endif
    if (threads <= 1) {
        // serial reference path, kept verbatim for determinism checks
        for (int job = 0; job < n_jobs; ++job) run_job(job);
    } else {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
        for (int job = 0; job < n_jobs; ++job) run_job(job);
#endif
    }
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out = kSweepHeader;
    out.push_back('\n');
    char buf[64];
    for (const auto& row : rows) {
        std::snprintf(buf, sizeof buf, "%.6f", row.p);
        out += buf;
        out.push_back(',');
        out += std::to_string(row.replica);
        out.push_back(',');
        out += row.status.completed() ? "completed" : "extinct";
        out.push_back(',');
        if (!row.status.completed()) out += std::to_string(row.status.extinct_sweep);
        out.push_back(',');
        out += format_opt_real(row.steady.success_rate);
        out.push_back(',');
        out += format_opt_real(row.steady.mean_learning);
        out.push_back('\n');
    }
    return out;
}

Schedule baldwin_schedule() {
    Schedule schedule;
    schedule.points = {{0, 0.1}, {8000, 0.98}};
    return schedule;
}

RunArtifacts preset_baldwin(const Config& config) {
    Config preset = config;
    preset.schedule = baldwin_schedule();
    preset.model.p = preset.schedule.points.front().p;
    return run_single(preset);
}

} // namespace namegame
