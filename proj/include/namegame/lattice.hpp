#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "namegame/params.hpp"
#include "namegame/rng.hpp"
#include "namegame/types.hpp"

namespace namegame {

// Packed list of occupied sites with O(1) insert, erase and uniform sampling.
class OccupancyIndex {
public:
    OccupancyIndex() = default;
    explicit OccupancyIndex(int n_sites) : slot_of_(n_sites, -1) {}

    int count() const { return static_cast<int>(sites_.size()); }
    bool contains(int site) const { return slot_of_[site] >= 0; }
    int site_at(int k) const { return sites_[k]; }
    const std::vector<std::int32_t>& sites() const { return sites_; }

    void insert(int site) {
        slot_of_[site] = count();
        sites_.push_back(static_cast<std::int32_t>(site));
    }

    void erase(int site) {
        const std::int32_t slot = slot_of_[site];
        const std::int32_t last = sites_.back();
        sites_[slot] = last; // swap-remove keeps the list packed
        slot_of_[last] = slot;
        sites_.pop_back();
        slot_of_[site] = -1;
    }

    bool operator==(const OccupancyIndex&) const = default;

private:
    std::vector<std::int32_t> sites_;   // packed occupied sites
    std::vector<std::int32_t> slot_of_; // site -> slot in sites_, -1 if vacant
};

// Full simulation state: the periodic L x L grid, the sweep clock, the RNG,
// and running weight totals (per site and global) kept in sync incrementally
// so the population dynamics never rescans inventories.
struct SimState {
    int L = 0;
    std::vector<std::optional<Agent>> grid; // row-major, site = y*L + x
    std::vector<double> site_weight;        // cached inventory totals, 0 where vacant
    double total_weight = 0.0;              // sum of site_weight over occupied sites
    OccupancyIndex occupied;
    std::uint64_t sweep = 0; // completed sweeps
    WindowCounters counters;
    Rng rng;

    int n_sites() const { return L * L; }
    int population() const { return occupied.count(); }
    int site_index(int x, int y) const { return y * L + x; }

    // mean over agents of their inventory weight sums; 0 when extinct
    double mean_weight() const {
        const int n = population();
        return n > 0 ? total_weight / n : 0.0;
    }

    // von Neumann neighbourhood with periodic wrap
    std::array<int, 4> neighbors(int site) const {
        const int x = site % L;
        const int y = site / L;
        const int xm = (x == 0) ? L - 1 : x - 1;
        const int xp = (x == L - 1) ? 0 : x + 1;
        const int ym = (y == 0) ? L - 1 : y - 1;
        const int yp = (y == L - 1) ? 0 : y + 1;
        return {y * L + xm, y * L + xp, ym * L + x, yp * L + x};
    }

    bool operator==(const SimState&) const = default;
};

enum class Outcome { Success, Failure, Skipped };

struct RunResult {
    enum class Status { Completed, Extinct };
    Status status = Status::Completed;
    std::uint64_t extinct_sweep = 0; // completed sweeps at the moment of extinction

    bool completed() const { return status == Status::Completed; }

    bool operator==(const RunResult&) const = default;
};

// Invoked after every completed sweep with the state and the p in force.
using SweepObserver = std::function<void(SimState&, double current_p)>;

// Fully occupied lattice: one random word per agent at unit weight, abilities
// uniform on (0,1) unless params.fixed_learning pins them.
SimState init_state(const ModelParams& params, std::uint64_t seed);

// Uniform choice among the speaker's occupied neighbours; absent when the
// speaker is isolated.
std::optional<int> pick_hearer(SimState& state, int speaker_site);

// One speaker/hearer exchange. A speaker with no occupied neighbour skips.
// A mute speaker (empty inventory) first creates a random word at unit
// weight and communicates that.
Outcome communication_step(SimState& state, int speaker_site);

// Survival check followed by breeding into a uniformly chosen empty
// neighbour. Death clears the site; a survivor with no empty neighbour
// does not breed.
void population_step(SimState& state, const ModelParams& params, int site);

// Pick a uniformly random agent; with probability p it speaks, otherwise it
// undergoes a population update. Outcome counters are accumulated.
void elementary_event(SimState& state, const ModelParams& params);

// L*L elementary events, then the sweep clock advances. Returns false when
// the population hits zero mid-sweep (the aborted sweep does not count).
bool advance_sweep(SimState& state, const ModelParams& params);

// Executes n_sweeps sweeps, switching params.p at schedule points before the
// activating sweep runs. The observer fires after every completed sweep.
RunResult run(SimState& state, ModelParams params, std::uint64_t n_sweeps,
              const Schedule& schedule, const SweepObserver& observer = {});

// Recomputed-from-scratch view of the cached state, for consistency checks.
struct StateAudit {
    bool occupancy_consistent = true;  // index matches non-empty grid cells
    bool weights_positive = true;      // every entry weight > 0
    bool abilities_in_range = true;    // every ability strictly inside (0,1)
    bool birth_sweeps_ok = true;       // no agent born in the future
    double max_site_weight_rel_err = 0.0;
    double total_weight_rel_err = 0.0;
    int population = 0;

    bool consistent(double rel_tol) const {
        return occupancy_consistent && weights_positive && abilities_in_range &&
               birth_sweeps_ok && max_site_weight_rel_err <= rel_tol &&
               total_weight_rel_err <= rel_tol;
    }
};

StateAudit audit_state(const SimState& state);

} // namespace namegame
