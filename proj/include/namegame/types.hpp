#pragma once

#include <cstdint>
#include <vector>

namespace namegame {

// A word is an opaque 64-bit token. New words are drawn uniformly from the
// full token space, so collisions are negligible at the scales we simulate
// and no global word registry is needed.
using WordId = std::uint64_t;

struct LexiconEntry {
    WordId word = 0;
    double weight = 0.0; // > 0 for as long as the entry exists

    bool operator==(const LexiconEntry&) const = default;
};

// An agent's word repository. Entries keep insertion order; lookups are
// linear scans, inventories stay at a handful of words in practice.
struct Inventory {
    std::vector<LexiconEntry> entries;

    bool empty() const { return entries.empty(); }
    std::size_t size() const { return entries.size(); }

    const LexiconEntry* find(WordId w) const {
        for (const auto& e : entries)
            if (e.word == w) return &e;
        return nullptr;
    }
    LexiconEntry* find(WordId w) {
        for (auto& e : entries)
            if (e.word == w) return &e;
        return nullptr;
    }
    bool contains(WordId w) const { return find(w) != nullptr; }

    double total_weight() const {
        double sum = 0.0;
        for (const auto& e : entries) sum += e.weight;
        return sum;
    }

    bool operator==(const Inventory&) const = default;
};

struct Agent {
    Inventory inventory;
    double learning_ability = 0.5;  // strictly inside (0,1)
    std::uint64_t birth_sweep = 0;  // sweep clock value at birth

    bool operator==(const Agent&) const = default;
};

// Communication outcomes accumulated over an observation window.
// A skipped event (speaker without an occupied neighbour) is not a
// communication attempt and never enters the success-rate denominator.
struct WindowCounters {
    std::uint64_t successes = 0;
    std::uint64_t failures = 0;
    std::uint64_t skipped = 0;

    void reset() { successes = failures = skipped = 0; }

    bool operator==(const WindowCounters&) const = default;
};

} // namespace namegame
