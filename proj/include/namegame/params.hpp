#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "namegame/rules.hpp"

namespace namegame {

struct ModelParams {
    int L = 40;           // lattice side, periodic boundaries
    double p = 0.3;       // communication probability per elementary event
    double p_mut = 0.001; // per-birth mutation probability (ability and word, independent)
    SurvivalParams survival;

    // Control variant: every ability equals this value and ability mutation is
    // disabled. Word mutation still runs.
    std::optional<double> fixed_learning;

    bool operator==(const ModelParams&) const = default;
};

struct SchedulePoint {
    std::uint64_t sweep = 0;
    double p = 0.0;

    bool operator==(const SchedulePoint&) const = default;
};

// Piecewise-constant communication probability: the point active during sweep
// s is the last one with sweep <= s. An empty schedule leaves ModelParams::p
// untouched for the whole run.
struct Schedule {
    std::vector<SchedulePoint> points;

    bool empty() const { return points.empty(); }

    bool operator==(const Schedule&) const = default;
};

// Nonempty schedules must start at sweep 0, strictly increase, and keep every
// p inside [0,1].
inline bool schedule_valid(const Schedule& schedule) {
    if (schedule.empty()) return true;
    if (schedule.points.front().sweep != 0) return false;
    for (std::size_t i = 0; i < schedule.points.size(); ++i) {
        if (schedule.points[i].p < 0.0 || schedule.points[i].p > 1.0) return false;
        if (i > 0 && schedule.points[i].sweep <= schedule.points[i - 1].sweep) return false;
    }
    return true;
}

} // namespace namegame
