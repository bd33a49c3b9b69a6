#include "namegame/rules.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace namegame {

WordId draw_new_word(Rng& rng) {
    return rng.next_u64();
}

WordId select_word(const Inventory& inv, Rng& rng) {
    assert(!inv.empty());
    double target = rng.uniform01() * inv.total_weight();
    for (const auto& e : inv.entries) {
        target -= e.weight;
        if (target < 0.0) return e.word;
    }
    // round-off fell through the cumulative scan
    return inv.entries.back().word;
}

void reinforce(Inventory& inv, WordId word, double amount) {
    LexiconEntry* e = inv.find(word);
    assert(e != nullptr);
    e->weight += amount;
}

double punish(Inventory& inv, WordId word, double amount) {
    auto it = std::find_if(inv.entries.begin(), inv.entries.end(),
                           [word](const LexiconEntry& e) { return e.word == word; });
    assert(it != inv.entries.end());
    if (it->weight - amount <= 0.0) {
        const double removed = it->weight;
        inv.entries.erase(it);
        return -removed;
    }
    it->weight -= amount;
    return -amount;
}

void adopt(Inventory& inv, WordId word) {
    assert(!inv.contains(word));
    inv.entries.push_back({word, 1.0});
}

double survival_probability(double age, double weight_sum, double mean_weight,
                            const SurvivalParams& params) {
    assert(age >= 0.0 && weight_sum >= 0.0 && mean_weight >= 0.0);
    if (mean_weight <= 0.0) return 0.0;
    return std::exp(-params.a * age) * (1.0 - std::exp(-params.b * weight_sum / mean_weight));
}

std::optional<WordId> dominant_word(const Inventory& inv) {
    if (inv.empty()) return std::nullopt;
    const LexiconEntry* best = &inv.entries.front();
    for (const auto& e : inv.entries) {
        if (e.weight > best->weight || (e.weight == best->weight && e.word < best->word))
            best = &e;
    }
    return best->word;
}

Agent make_offspring(const Agent& parent, double p_mut, std::uint64_t birth_sweep, Rng& rng,
                     std::optional<double> fixed_ability) {
    Agent child;
    child.birth_sweep = birth_sweep;
    if (fixed_ability) {
        child.learning_ability = *fixed_ability;
    } else {
        child.learning_ability = parent.learning_ability;
        if (p_mut > 0.0 && rng.bernoulli(p_mut))
            child.learning_ability = rng.uniform_open01();
    }
    if (auto inherited = dominant_word(parent.inventory)) {
        WordId word = *inherited;
        if (p_mut > 0.0 && rng.bernoulli(p_mut))
            word = draw_new_word(rng);
        child.inventory.entries.push_back({word, 1.0});
    }
    return child;
}

} // namespace namegame
