#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "namegame/lattice.hpp"
#include "namegame/types.hpp"

namespace namegame {

// successes / (successes + failures); absent when there were no attempts.
// Skipped events are not attempts.
std::optional<double> success_rate(const WindowCounters& counters);

// Mean learning ability over living agents; absent when extinct.
std::optional<double> mean_learning(const SimState& state);

// Per site, the occupant's dominant word. Vacant sites and agents without
// words have no language.
std::vector<std::optional<WordId>> language_map(const SimState& state);

// Distinct dominant words among living agents.
int count_languages(const std::vector<std::optional<WordId>>& map);

struct ClusterLabeling {
    std::vector<std::int32_t> labels; // per site; -1 where there is no language
    std::vector<std::int64_t> sizes;  // per label, non-increasing

    int cluster_count() const { return static_cast<int>(sizes.size()); }

    bool operator==(const ClusterLabeling&) const = default;
};

// Connected components of same-language sites under 4-adjacency with periodic
// wrap. Labels are canonical: descending size, ties by smallest member site,
// so repeated runs produce identical labelings.
ClusterLabeling clusters(const std::vector<std::optional<WordId>>& map, int L);

struct TimeSeriesRow {
    std::uint64_t sweep = 0;
    double p = 0.0;
    std::optional<double> success_rate;  // absent: no attempts in the window
    std::optional<double> mean_learning; // absent: extinct
    std::int64_t population = 0;
    std::int64_t n_languages = 0;
    double largest_cluster_fraction = 0.0; // of the living population

    bool operator==(const TimeSeriesRow&) const = default;
};

// Row for the window ending at the current sweep; resets the window counters.
TimeSeriesRow measure_window(SimState& state, double current_p);

struct SteadyStats {
    std::optional<double> success_rate;
    std::optional<double> mean_learning;

    bool operator==(const SteadyStats&) const = default;
};

// Unweighted means over rows past the relaxation horizon (row.sweep >
// relax_sweeps), skipping absent values. Throws std::invalid_argument when
// relaxation swallows the whole series.
SteadyStats steady_state_average(const std::vector<TimeSeriesRow>& series,
                                 std::uint64_t relax_sweeps);

} // namespace namegame
