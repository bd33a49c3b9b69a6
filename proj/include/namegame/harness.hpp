#pragma once

#include <string>
#include <vector>

#include "namegame/config.hpp"
#include "namegame/io.hpp"
#include "namegame/lattice.hpp"
#include "namegame/observables.hpp"

namespace namegame {

struct RunArtifacts {
    std::vector<TimeSeriesRow> series; // one row per observation window
    SteadyStats steady;                // absent when nothing outlived relaxation
    RunResult status;

    bool operator==(const RunArtifacts&) const = default;
};

// One simulation from config.seed: a time-series row every config.window
// sweeps, PGM snapshots every config.snapshot_every sweeps (when > 0, written
// under config.out_dir), and the post-relaxation summary. Extinction is a
// valid result; the series then stops at the extinction sweep.
RunArtifacts run_single(const Config& config);

struct SweepRow {
    double p = 0.0;
    int replica = 0;
    RunResult status;
    SteadyStats steady;

    bool operator==(const SweepRow&) const = default;
};

inline constexpr const char* kSweepHeader =
    "p,replica,status,extinct_sweep,success_rate,mean_learning";

// Grid scan: one run per (p, replica) over the ascending-sorted p_grid, each
// on its own RNG stream derived from (master seed, p index, replica index).
// config.threads selects the executor: 1 runs the plain serial loop, anything
// else the OpenMP one (0 = all cores). Rows always come back in (p, replica)
// order, so the table is identical for any thread count.
std::vector<SweepRow> run_sweep(const Config& config);

std::string sweep_csv(const std::vector<SweepRow>& rows);

// Two-phase demonstration of learning-driven selection: the population first
// equilibrates at p = 0.1, then p jumps to 0.98 at sweep 8000. Communicative
// success rises within a few hundred sweeps, mean learning ability follows
// thousands of sweeps later.
Schedule baldwin_schedule();
RunArtifacts preset_baldwin(const Config& config);

} // namespace namegame
