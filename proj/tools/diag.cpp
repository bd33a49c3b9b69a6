// Temporary diagnostic: per-window demography and inventory statistics.
#include <cstdio>
#include <cstdlib>

#include "namegame/lattice.hpp"
#include "namegame/observables.hpp"

using namespace namegame;

int main(int argc, char** argv) {
    ModelParams params;
    params.p = argc > 1 ? std::atof(argv[1]) : 0.1;
    const std::uint64_t n_sweeps = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 5000;
    SimState st = init_state(params, 12345);

    std::printf("p=%.3f\n", params.p);
    std::printf("%8s %6s %7s %7s %7s %7s %7s %7s %9s %7s\n", "sweep", "pop", "s", "l", "age",
                "invsz", "<w>", "nlang", "frac", "births");
    std::uint64_t window = 200;
    std::uint64_t prev_births_marker = 0;
    for (std::uint64_t i = 0; i < n_sweeps; ++i) {
        if (!advance_sweep(st, params)) {
            std::printf("EXTINCT at %llu\n", (unsigned long long)st.sweep);
            return 0;
        }
        if (st.sweep % window == 0) {
            double age_sum = 0, inv_sum = 0;
            std::uint64_t births = 0;
            for (int site : st.occupied.sites()) {
                const Agent& a = *st.grid[site];
                age_sum += double(st.sweep - a.birth_sweep);
                inv_sum += double(a.inventory.size());
                if (a.birth_sweep > st.sweep - window) ++births;
            }
            const int pop = st.population();
            auto row_s = success_rate(st.counters);
            auto map = language_map(st);
            auto lab = clusters(map, st.L);
            std::printf("%8llu %6d %7.3f %7.3f %7.2f %7.2f %7.3f %7d %9.3f %7llu\n",
                        (unsigned long long)st.sweep, pop, row_s ? *row_s : -1.0,
                        mean_learning(st).value_or(-1.0), age_sum / pop, inv_sum / pop,
                        st.mean_weight(), count_languages(map),
                        lab.sizes.empty() ? 0.0 : double(lab.sizes[0]) / pop,
                        (unsigned long long)births);
            st.counters.reset();
            (void)prev_births_marker;
        }
    }
    return 0;
}
