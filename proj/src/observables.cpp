#include "namegame/observables.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "namegame/rules.hpp"

namespace namegame {

std::optional<double> success_rate(const WindowCounters& counters) {
    const std::uint64_t attempts = counters.successes + counters.failures;
    if (attempts == 0) return std::nullopt;
    return static_cast<double>(counters.successes) / static_cast<double>(attempts);
}

std::optional<double> mean_learning(const SimState& state) {
    const int n = state.population();
    if (n == 0) return std::nullopt;
    double sum = 0.0;
    for (int site : state.occupied.sites())
        sum += state.grid[site]->learning_ability;
    return sum / n;
}

std::vector<std::optional<WordId>> language_map(const SimState& state) {
    std::vector<std::optional<WordId>> map(state.n_sites());
    for (int site = 0; site < state.n_sites(); ++site)
        if (state.grid[site]) map[site] = dominant_word(state.grid[site]->inventory);
    return map;
}

int count_languages(const std::vector<std::optional<WordId>>& map) {
    std::unordered_set<WordId> words;
    for (const auto& w : map)
        if (w) words.insert(*w);
    return static_cast<int>(words.size());
}

namespace {

int uf_find(std::vector<std::int32_t>& parent, int x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]]; // path halving
        x = parent[x];
    }
    return x;
}

void uf_union(std::vector<std::int32_t>& parent, int a, int b) {
    a = uf_find(parent, a);
    b = uf_find(parent, b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
}

} // namespace

ClusterLabeling clusters(const std::vector<std::optional<WordId>>& map, int L) {
    const int n = L * L;
    std::vector<std::int32_t> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = static_cast<std::int32_t>(i);

    // union right and down neighbours with the same word (periodic wrap)
    for (int y = 0; y < L; ++y) {
        for (int x = 0; x < L; ++x) {
            const int site = y * L + x;
            if (!map[site]) continue;
            const int right = y * L + (x == L - 1 ? 0 : x + 1);
            const int down = (y == L - 1 ? 0 : y + 1) * L + x;
            if (map[right] && *map[right] == *map[site]) uf_union(parent, site, right);
            if (map[down] && *map[down] == *map[site]) uf_union(parent, site, down);
        }
    }

    struct RootInfo {
        std::int64_t size = 0;
        int min_site = 0;
        int root = 0;
    };
    std::vector<std::int32_t> root_of(n, -1);
    std::vector<RootInfo> roots;
    for (int site = 0; site < n; ++site) {
        if (!map[site]) continue;
        const int root = uf_find(parent, site);
        if (root_of[root] < 0) {
            root_of[root] = static_cast<std::int32_t>(roots.size());
            roots.push_back({0, site, root}); // sites scan in order, first hit is the minimum
        }
        ++roots[root_of[root]].size;
    }

    std::sort(roots.begin(), roots.end(), [](const RootInfo& a, const RootInfo& b) {
        if (a.size != b.size) return a.size > b.size;
        return a.min_site < b.min_site;
    });

    std::vector<std::int32_t> label_of_root(n, -1);
    ClusterLabeling out;
    out.sizes.reserve(roots.size());
    for (std::size_t k = 0; k < roots.size(); ++k) {
        label_of_root[roots[k].root] = static_cast<std::int32_t>(k);
        out.sizes.push_back(roots[k].size);
    }
    out.labels.assign(n, -1);
    for (int site = 0; site < n; ++site)
        if (map[site]) out.labels[site] = label_of_root[uf_find(parent, site)];
    return out;
}

TimeSeriesRow measure_window(SimState& state, double current_p) {
    TimeSeriesRow row;
    row.sweep = state.sweep;
    row.p = current_p;
    row.success_rate = success_rate(state.counters);
    row.mean_learning = mean_learning(state);
    row.population = state.population();
    const auto map = language_map(state);
    row.n_languages = count_languages(map);
    const ClusterLabeling labeling = clusters(map, state.L);
    row.largest_cluster_fraction =
        (row.population > 0 && !labeling.sizes.empty())
            ? static_cast<double>(labeling.sizes.front()) / static_cast<double>(row.population)
            : 0.0;
    state.counters.reset();
    return row;
}

SteadyStats steady_state_average(const std::vector<TimeSeriesRow>& series,
                                 std::uint64_t relax_sweeps) {
    double s_sum = 0.0, l_sum = 0.0;
    std::int64_t s_count = 0, l_count = 0;
    bool any = false;
    for (const auto& row : series) {
        if (row.sweep <= relax_sweeps) continue;
        any = true;
        if (row.success_rate) {
            s_sum += *row.success_rate;
            ++s_count;
        }
        if (row.mean_learning) {
            l_sum += *row.mean_learning;
            ++l_count;
        }
    }
    if (!any)
        throw std::invalid_argument("steady_state_average: relaxation horizon of " +
                                    std::to_string(relax_sweeps) +
                                    " sweeps leaves no samples");
    SteadyStats stats;
    if (s_count > 0) stats.success_rate = s_sum / s_count;
    if (l_count > 0) stats.mean_learning = l_sum / l_count;
    return stats;
}

} // namespace namegame
