#pragma once

#include <cstdint>
#include <random>

namespace namegame {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Decorrelated seed for stream (a, b) of a master seed. Every replica gets its
// own stream up front, so runs can execute in any order or in parallel without
// perturbing each other's draws.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = master;
    std::uint64_t out = splitmix64(s);
    s ^= 0x9e3779b97f4a7c15ULL * (a + 1);
    out ^= splitmix64(s);
    s ^= 0xd1b54a32d192ed03ULL * (b + 1);
    out ^= splitmix64(s);
    return out;
}

// Deterministic generator with explicit mappings to [0,1) and to integer
// ranges. std::uniform_*_distribution is not pinned by the standard, so we do
// the mappings by hand to keep replays stable.
class Rng {
public:
    Rng() : engine_(0) {}
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // uniform on [0,1), 53-bit resolution
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // uniform on the open interval (0,1)
    double uniform_open01() {
        double u = uniform01();
        while (u == 0.0) u = uniform01();
        return u;
    }

    // unbiased uniform integer in [0, n), n >= 1
    std::uint64_t uniform_below(std::uint64_t n) {
        std::uint64_t x = next_u64();
        std::uint64_t r = x % n;
        while (x - r > std::uint64_t(0) - n) {
            x = next_u64();
            r = x % n;
        }
        return r;
    }

    bool bernoulli(double prob) { return uniform01() < prob; }

    bool operator==(const Rng&) const = default;

private:
    std::mt19937_64 engine_;
};

} // namespace namegame
