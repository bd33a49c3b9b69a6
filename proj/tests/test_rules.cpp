#include <cmath>
#include <set>

#include "doctest.h"
#include "namegame/rules.hpp"
#include "test_support.hpp"

using namespace namegame;
using namegame::testing::chi2_critical_99;
using namegame::testing::chi2_statistic;
using doctest::Approx;

namespace {

Inventory make_inventory(std::initializer_list<LexiconEntry> entries) {
    Inventory inv;
    inv.entries = entries;
    return inv;
}

} // namespace

TEST_CASE("draw_new_word is deterministic per seed and collision-free at scale") {
    Rng a(42), b(42);
    CHECK(draw_new_word(a) == draw_new_word(b));

    Rng rng(7);
    CHECK(draw_new_word(rng) != draw_new_word(rng));

    Rng bulk(1234);
    std::set<WordId> seen;
    for (int i = 0; i < 10000; ++i) seen.insert(draw_new_word(bulk));
    CHECK(seen.size() == 10000); // birthday bound: collision prob < 1e-11
}

TEST_CASE("select_word single entry is certain") {
    const Inventory inv = make_inventory({{77, 1.0}});
    Rng rng(1);
    for (int i = 0; i < 100; ++i) CHECK(select_word(inv, rng) == 77);
}

TEST_CASE("select_word frequencies match weight ratios") {
    // expected ratios 2/5 and 3/5
    const Inventory inv = make_inventory({{1, 2.0}, {2, 3.0}});
    Rng rng(2024);
    const int n = 100000;
    std::vector<std::int64_t> counts(2, 0);
    for (int i = 0; i < n; ++i) ++counts[select_word(inv, rng) - 1];
    CHECK(chi2_statistic(counts, {0.4 * n, 0.6 * n}) < chi2_critical_99(1));

    // expected ratios 1/4, 1/4, 1/2
    const Inventory inv3 = make_inventory({{1, 1.0}, {2, 1.0}, {3, 2.0}});
    Rng rng3(55);
    std::vector<std::int64_t> counts3(3, 0);
    for (int i = 0; i < n; ++i) ++counts3[select_word(inv3, rng3) - 1];
    CHECK(chi2_statistic(counts3, {0.25 * n, 0.25 * n, 0.5 * n}) < chi2_critical_99(2));
    CHECK(static_cast<double>(counts3[2]) / n == Approx(0.5).epsilon(0.02));
}

TEST_CASE("reinforce adds exactly the given amount") {
    Inventory inv = make_inventory({{1, 1.0}});
    reinforce(inv, 1, 0.3);
    CHECK(inv.find(1)->weight == Approx(1.3).epsilon(1e-12));

    Inventory two = make_inventory({{1, 1.0}, {2, 2.0}});
    reinforce(two, 2, 0.5);
    CHECK(two.find(1)->weight == 1.0);
    CHECK(two.find(2)->weight == Approx(2.5).epsilon(1e-12));
    CHECK(two.size() == 2);
}

TEST_CASE("repeated reinforcement matches the closed form") {
    Inventory inv = make_inventory({{9, 1.0}});
    const double ability = 0.3;
    const int k = 1000;
    for (int i = 0; i < k; ++i) reinforce(inv, 9, ability);
    CHECK(inv.find(9)->weight == Approx(1.0 + k * ability).epsilon(1e-9));
}

TEST_CASE("punish decrements and removes at zero or below") {
    Inventory inv = make_inventory({{1, 1.0}});
    CHECK(punish(inv, 1, 0.4) == Approx(-0.4));
    CHECK(inv.find(1)->weight == Approx(0.6).epsilon(1e-12));

    Inventory drop = make_inventory({{1, 0.2}, {2, 1.0}});
    CHECK(punish(drop, 1, 0.5) == Approx(-0.2));
    CHECK(!drop.contains(1));
    CHECK(drop.find(2)->weight == 1.0);

    // exact-zero boundary removes as well
    Inventory boundary = make_inventory({{1, 0.5}});
    punish(boundary, 1, 0.5);
    CHECK(boundary.empty());
}

TEST_CASE("adopt appends at unit weight; punish by one removes it again") {
    Inventory inv;
    adopt(inv, 5);
    CHECK(inv.size() == 1);
    CHECK(inv.find(5)->weight == 1.0);

    Inventory other = make_inventory({{2, 2.0}});
    adopt(other, 1);
    CHECK(other.size() == 2);
    CHECK(other.find(1)->weight == 1.0);
    CHECK(other.find(2)->weight == 2.0);

    punish(other, 1, 1.0);
    CHECK(!other.contains(1));
}

TEST_CASE("survival_probability equals the closed form") {
    const SurvivalParams params; // a = 0.05, b = 5
    CHECK(survival_probability(0.0, 1.0, 1.0, params) ==
          Approx(1.0 - std::exp(-5.0)).epsilon(1e-12));
    CHECK(survival_probability(0.0, 1.0, 1.0, params) == Approx(0.9932621).epsilon(1e-6));
    CHECK(survival_probability(20.0, 1.0, 1.0, params) ==
          Approx(std::exp(-1.0) * (1.0 - std::exp(-5.0))).epsilon(1e-12));
    CHECK(survival_probability(20.0, 1.0, 1.0, params) == Approx(0.3654128).epsilon(1e-6));

    CHECK(survival_probability(0.0, 0.0, 1.0, params) == 0.0);
    CHECK(survival_probability(123.0, 0.0, 1.0, params) == 0.0);
    CHECK(survival_probability(3.0, 2.0, 0.0, params) == 0.0); // extinct-inventory limit
}

TEST_CASE("survival_probability is monotone in age and weight") {
    const SurvivalParams params;
    double prev_age = 1.0;
    for (int i = 0; i < 1000; ++i) {
        const double p = survival_probability(i * 0.1, 2.0, 1.5, params);
        CHECK(p <= prev_age + 1e-15);
        prev_age = p;
    }
    double prev_weight = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double p = survival_probability(5.0, i * 0.01, 1.5, params);
        CHECK(p >= prev_weight - 1e-15);
        prev_weight = p;
    }
}

TEST_CASE("dominant_word picks the heaviest entry, smallest token on ties") {
    CHECK(*dominant_word(make_inventory({{1, 2.0}, {2, 3.0}})) == 2);
    CHECK(*dominant_word(make_inventory({{2, 2.0}, {1, 2.0}})) == 1);
    CHECK(!dominant_word(Inventory{}).has_value());
}

TEST_CASE("make_offspring inherits ability and dominant word at unit weight") {
    Agent parent = testing::make_agent({{10, 1.0}, {20, 4.0}}, 0.7);
    Rng rng(3);
    const Agent child = make_offspring(parent, 0.0, 17, rng);
    CHECK(child.learning_ability == 0.7);
    CHECK(child.birth_sweep == 17);
    REQUIRE(child.inventory.size() == 1);
    CHECK(child.inventory.find(20)->weight == 1.0);
}

TEST_CASE("make_offspring with p_mut=0 is pure and consumes no randomness") {
    const Agent parent = testing::make_agent({{10, 2.0}}, 0.25);
    Rng rng(11);
    const Agent first = make_offspring(parent, 0.0, 3, rng);
    const Agent second = make_offspring(parent, 0.0, 3, rng);
    CHECK(first == second);

    Rng untouched(11);
    CHECK(rng.next_u64() == untouched.next_u64()); // no draws were consumed
}

TEST_CASE("make_offspring with p_mut=1 resamples ability and word") {
    const Agent parent = testing::make_agent({{10, 1.0}, {20, 4.0}}, 0.7);
    Rng rng(99);
    const int n = 100000;
    double ability_sum = 0.0;
    int inherited_word = 0;
    for (int i = 0; i < n; ++i) {
        const Agent child = make_offspring(parent, 1.0, 0, rng);
        ability_sum += child.learning_ability;
        if (child.inventory.contains(20)) ++inherited_word;
        CHECK(child.learning_ability > 0.0);
        CHECK(child.learning_ability < 1.0);
    }
    CHECK(ability_sum / n == Approx(0.5).epsilon(0.01)); // uniform(0,1) mean
    CHECK(inherited_word == 0);                          // 64-bit collision is negligible
}

TEST_CASE("make_offspring from an empty parent yields an empty child") {
    const Agent parent = testing::make_agent({}, 0.5);
    Rng rng(4);
    CHECK(make_offspring(parent, 1.0, 0, rng).inventory.empty());
}

TEST_CASE("make_offspring with fixed ability skips the ability mutation") {
    const Agent parent = testing::make_agent({{10, 1.0}}, 0.7);
    Rng rng(8);
    for (int i = 0; i < 1000; ++i) {
        const Agent child = make_offspring(parent, 1.0, 0, rng, 0.5);
        CHECK(child.learning_ability == 0.5);
    }
}

TEST_CASE("random op sequences keep weights positive and sizes consistent") {
    Rng rng(2718);
    for (int trial = 0; trial < 200; ++trial) {
        Inventory inv;
        for (int step = 0; step < 300; ++step) {
            const double amount = rng.uniform_open01();
            const std::uint64_t word = 1 + rng.uniform_below(8);
            const int action = static_cast<int>(rng.uniform_below(3));
            if (action == 0 && !inv.contains(word)) {
                adopt(inv, word);
            } else if (action == 1 && inv.contains(word)) {
                const std::size_t size_before = inv.size();
                reinforce(inv, word, amount);
                CHECK(inv.size() == size_before);
            } else if (action == 2 && inv.contains(word)) {
                const double non_target = inv.contains(word + 1) ? inv.find(word + 1)->weight : -1.0;
                punish(inv, word, amount);
                if (non_target >= 0.0) CHECK(inv.find(word + 1)->weight == non_target);
            }
            for (const auto& e : inv.entries) CHECK(e.weight > 0.0);
        }
    }
}

TEST_CASE("select_word chi-square across inventory sizes 1..10") {
    Rng weight_rng(31415);
    for (int size = 1; size <= 10; ++size) {
        Inventory inv;
        std::vector<double> weights;
        double total = 0.0;
        for (int i = 0; i < size; ++i) {
            const double w = 0.2 + 3.0 * weight_rng.uniform01();
            inv.entries.push_back({static_cast<WordId>(i), w});
            weights.push_back(w);
            total += w;
        }
        const int n = 100000;
        Rng rng(500 + size);
        std::vector<std::int64_t> counts(size, 0);
        for (int i = 0; i < n; ++i) ++counts[select_word(inv, rng)];
        if (size == 1) {
            CHECK(counts[0] == n);
            continue;
        }
        std::vector<double> expected;
        for (double w : weights) expected.push_back(n * w / total);
        CHECK(chi2_statistic(counts, expected) < chi2_critical_99(size - 1));
    }
}
