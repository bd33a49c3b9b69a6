#include "namegame/lattice.hpp"

#include <cassert>
#include <cmath>

#include "namegame/rules.hpp"

namespace namegame {

namespace {

// Per-site caches are kept exactly equal to the inventory's fresh sum (the
// scan is over a handful of entries); only the global total accumulates.
void sync_site_weight(SimState& state, int site) {
    const double actual = state.grid[site] ? state.grid[site]->inventory.total_weight() : 0.0;
    state.total_weight += actual - state.site_weight[site];
    state.site_weight[site] = actual;
}

} // namespace

SimState init_state(const ModelParams& params, std::uint64_t seed) {
    SimState state;
    state.L = params.L;
    const int n = state.n_sites();
    state.grid.assign(n, std::nullopt);
    state.site_weight.assign(n, 0.0);
    state.occupied = OccupancyIndex(n);
    state.rng = Rng(seed);
    for (int site = 0; site < n; ++site) {
        Agent agent;
        agent.inventory.entries.push_back({draw_new_word(state.rng), 1.0});
        agent.learning_ability =
            params.fixed_learning ? *params.fixed_learning : state.rng.uniform_open01();
        agent.birth_sweep = 0;
        state.grid[site] = std::move(agent);
        state.site_weight[site] = 1.0;
        state.occupied.insert(site);
    }
    state.total_weight = static_cast<double>(n);
    return state;
}

std::optional<int> pick_hearer(SimState& state, int speaker_site) {
    assert(state.grid[speaker_site].has_value());
    const std::array<int, 4> nb = state.neighbors(speaker_site);
    std::array<int, 4> occupied_nb;
    int k = 0;
    for (int s : nb)
        if (state.grid[s]) occupied_nb[k++] = s;
    if (k == 0) return std::nullopt;
    return occupied_nb[state.rng.uniform_below(static_cast<std::uint64_t>(k))];
}

Outcome communication_step(SimState& state, int speaker_site) {
    assert(state.grid[speaker_site].has_value());
    const std::optional<int> hearer_site = pick_hearer(state, speaker_site);
    if (!hearer_site) return Outcome::Skipped;

    Agent& speaker = *state.grid[speaker_site];
    Agent& hearer = *state.grid[*hearer_site];

    WordId word;
    if (speaker.inventory.empty()) {
        // mute speaker improvises a word and communicates it
        word = draw_new_word(state.rng);
        speaker.inventory.entries.push_back({word, 1.0});
    } else {
        word = select_word(speaker.inventory, state.rng);
    }

    Outcome outcome;
    if (hearer.inventory.contains(word)) {
        reinforce(speaker.inventory, word, speaker.learning_ability);
        reinforce(hearer.inventory, word, hearer.learning_ability);
        outcome = Outcome::Success;
    } else {
        punish(speaker.inventory, word, speaker.learning_ability);
        adopt(hearer.inventory, word);
        outcome = Outcome::Failure;
    }
    sync_site_weight(state, speaker_site);
    sync_site_weight(state, *hearer_site);
    return outcome;
}

void population_step(SimState& state, const ModelParams& params, int site) {
    assert(state.grid[site].has_value());
    Agent& agent = *state.grid[site];
    const double age = static_cast<double>(state.sweep - agent.birth_sweep);
    const double p_surv =
        survival_probability(age, state.site_weight[site], state.mean_weight(), params.survival);

    if (state.rng.uniform01() >= p_surv) { // death
        state.total_weight -= state.site_weight[site];
        state.site_weight[site] = 0.0;
        state.grid[site].reset();
        state.occupied.erase(site);
        return;
    }

    // the survivor breeds into a uniformly chosen empty neighbour, if any
    const std::array<int, 4> nb = state.neighbors(site);
    std::array<int, 4> empty_nb;
    int k = 0;
    for (int s : nb)
        if (!state.grid[s]) empty_nb[k++] = s;
    if (k == 0) return;

    const int child_site = empty_nb[state.rng.uniform_below(static_cast<std::uint64_t>(k))];
    state.grid[child_site] =
        make_offspring(agent, params.p_mut, state.sweep, state.rng, params.fixed_learning);
    sync_site_weight(state, child_site);
    state.occupied.insert(child_site);
}

void elementary_event(SimState& state, const ModelParams& params) {
    assert(state.population() > 0);
    const int site =
        state.occupied.site_at(static_cast<int>(state.rng.uniform_below(state.population())));
    if (state.rng.uniform01() < params.p) {
        switch (communication_step(state, site)) {
        case Outcome::Success: ++state.counters.successes; break;
        case Outcome::Failure: ++state.counters.failures; break;
        case Outcome::Skipped: ++state.counters.skipped; break;
        }
    } else {
        population_step(state, params, site);
    }
}

bool advance_sweep(SimState& state, const ModelParams& params) {
    assert(state.population() > 0);
    const int n_events = state.n_sites();
    for (int i = 0; i < n_events; ++i) {
        elementary_event(state, params);
        if (state.population() == 0) return false;
    }
    ++state.sweep;
    return true;
}

RunResult run(SimState& state, ModelParams params, std::uint64_t n_sweeps,
              const Schedule& schedule, const SweepObserver& observer) {
    std::size_t next_switch = 0;
    for (std::uint64_t i = 0; i < n_sweeps; ++i) {
        while (next_switch < schedule.points.size() &&
               schedule.points[next_switch].sweep <= state.sweep) {
            params.p = schedule.points[next_switch].p;
            ++next_switch;
        }
        if (state.population() == 0 || !advance_sweep(state, params))
            return {RunResult::Status::Extinct, state.sweep};
        if (observer) observer(state, params.p);
    }
    return {RunResult::Status::Completed, 0};
}

StateAudit audit_state(const SimState& state) {
    StateAudit audit;
    double recomputed_total = 0.0;
    int population = 0;
    for (int site = 0; site < state.n_sites(); ++site) {
        const bool occupied = state.grid[site].has_value();
        if (occupied != state.occupied.contains(site)) audit.occupancy_consistent = false;
        if (!occupied) {
            if (state.site_weight[site] != 0.0) audit.occupancy_consistent = false;
            continue;
        }
        ++population;
        const Agent& agent = *state.grid[site];
        for (const auto& e : agent.inventory.entries)
            if (!(e.weight > 0.0)) audit.weights_positive = false;
        if (!(agent.learning_ability > 0.0 && agent.learning_ability < 1.0))
            audit.abilities_in_range = false;
        if (agent.birth_sweep > state.sweep) audit.birth_sweeps_ok = false;

        const double actual = agent.inventory.total_weight();
        recomputed_total += actual;
        const double cached = state.site_weight[site];
        const double scale = std::max(std::abs(actual), std::abs(cached));
        if (scale > 0.0)
            audit.max_site_weight_rel_err =
                std::max(audit.max_site_weight_rel_err, std::abs(actual - cached) / scale);
        else if (cached != 0.0)
            audit.max_site_weight_rel_err = 1.0;
    }
    if (population != state.population()) audit.occupancy_consistent = false;
    audit.population = population;

    const double scale = std::max(std::abs(recomputed_total), std::abs(state.total_weight));
    audit.total_weight_rel_err =
        scale > 0.0 ? std::abs(recomputed_total - state.total_weight) / scale : 0.0;
    return audit;
}

} // namespace namegame
