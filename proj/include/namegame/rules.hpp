#pragma once

#include <optional>

#include "namegame/rng.hpp"
#include "namegame/types.hpp"

namespace namegame {

// Parameters of the survival probability
//   p_surv = exp(-a * age) * (1 - exp(-b * weight_sum / mean_weight)).
struct SurvivalParams {
    double a = 0.05; // age decay rate, in inverse sweeps
    double b = 5.0;  // coupling to the agent's relative inventory weight

    bool operator==(const SurvivalParams&) const = default;
};

// Uniform 64-bit token.
WordId draw_new_word(Rng& rng);

// Roulette selection: entry i with probability weight_i / sum_j weight_j.
// Inventory must be nonempty.
WordId select_word(const Inventory& inv, Rng& rng);

// Success path: add `amount` to the weight of `word`, which must be present.
void reinforce(Inventory& inv, WordId word, double amount);

// Failure path for the speaker: subtract `amount` from the weight of `word`
// (must be present); the entry is dropped when its weight falls to zero or
// below. Returns the signed change in the inventory's total weight.
double punish(Inventory& inv, WordId word, double amount);

// Failure path for the hearer: append `word` (must be absent) at unit weight.
void adopt(Inventory& inv, WordId word);

// mean_weight == 0 (nobody owns any word) yields 0, the weight_sum -> 0 limit.
double survival_probability(double age, double weight_sum, double mean_weight,
                            const SurvivalParams& params);

// Largest-weight entry's word; ties go to the smallest token so replays are
// stable. Empty inventories have no dominant word.
std::optional<WordId> dominant_word(const Inventory& inv);

// Offspring construction: the child gets the parent's learning ability and the
// parent's dominant word at unit weight. Each is independently replaced with
// probability p_mut (a fresh uniform ability on (0,1), a fresh random word).
// A parent without words yields a child without words, and no word-mutation
// check runs. When fixed_ability is set the ability is pinned and its
// mutation check is skipped entirely.
Agent make_offspring(const Agent& parent, double p_mut, std::uint64_t birth_sweep, Rng& rng,
                     std::optional<double> fixed_ability = std::nullopt);

} // namespace namegame
