#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "namegame/params.hpp"

namespace namegame {

class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Everything a run needs, with the standard defaults baked in. Loaded from a
// flat key=value file (one pair per line, '#' comments) and overridable from
// the command line.
struct Config {
    ModelParams model;                // keys: L, p, p_mut, a, b, fixed_learning
    std::uint64_t seed = 1;           // master seed; replica streams derive from it
    std::uint64_t n_sweeps = 100000;  //
    std::uint64_t relax_sweeps = 30000;
    std::uint64_t window = 100;       // sweeps per observation window
    Schedule schedule;                // key: schedule=sweep:p,sweep:p,...
    int replicas = 1;                 // independent runs per grid point
    std::vector<double> p_grid;       // key: p_grid=0.05,0.10,... (sweep mode)
    std::string out_dir = ".";        // key: out
    std::uint64_t snapshot_every = 0; // PGM dump period in sweeps; 0 = off
    int threads = 0;                  // replica workers; 0 = all cores, 1 = serial

    bool operator==(const Config&) const = default;
};

// Parses and validates; unknown keys and out-of-range values throw
// ConfigError naming the offending key.
Config load_config(const std::string& text);

// Re-checks every invariant (useful after command-line overrides).
void validate_config(const Config& config);

} // namespace namegame
