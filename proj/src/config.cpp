#include "namegame/config.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace namegame {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0;
    while (a < s.size() && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    std::size_t b = s.size();
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

double parse_real(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config: key '" + key + "': cannot parse real value '" + value + "'");
    }
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        if (!value.empty() && value[0] == '-') throw std::invalid_argument("negative");
        const unsigned long long v = std::stoull(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("trailing characters");
        return static_cast<std::uint64_t>(v);
    } catch (const std::exception&) {
        throw ConfigError("config: key '" + key + "': cannot parse integer value '" + value + "'");
    }
}

int parse_int(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const long v = std::stol(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("trailing characters");
        if (v < INT32_MIN || v > INT32_MAX) throw std::out_of_range("int range");
        return static_cast<int>(v);
    } catch (const std::exception&) {
        throw ConfigError("config: key '" + key + "': cannot parse integer value '" + value + "'");
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep)) parts.push_back(item);
    return parts;
}

std::vector<double> parse_real_list(const std::string& key, const std::string& value) {
    std::vector<double> out;
    for (const std::string& item : split(value, ','))
        out.push_back(parse_real(key, trim(item)));
    return out;
}

Schedule parse_schedule(const std::string& key, const std::string& value) {
    Schedule schedule;
    for (const std::string& item : split(value, ',')) {
        const std::string pair = trim(item);
        const std::size_t colon = pair.find(':');
        if (colon == std::string::npos)
            throw ConfigError("config: key '" + key + "': expected sweep:p pairs, got '" + pair +
                              "'");
        SchedulePoint point;
        point.sweep = parse_u64(key, trim(pair.substr(0, colon)));
        point.p = parse_real(key, trim(pair.substr(colon + 1)));
        schedule.points.push_back(point);
    }
    return schedule;
}

void require(bool ok, const std::string& message) {
    if (!ok) throw ConfigError("config: " + message);
}

} // namespace

Config load_config(const std::string& text) {
    Config config;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: line " + std::to_string(line_no) +
                              ": expected key=value, got '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        if (key == "L") config.model.L = parse_int(key, value);
        else if (key == "p") config.model.p = parse_real(key, value);
        else if (key == "p_mut") config.model.p_mut = parse_real(key, value);
        else if (key == "a") config.model.survival.a = parse_real(key, value);
        else if (key == "b") config.model.survival.b = parse_real(key, value);
        else if (key == "fixed_learning") config.model.fixed_learning = parse_real(key, value);
        else if (key == "seed") config.seed = parse_u64(key, value);
        else if (key == "n_sweeps") config.n_sweeps = parse_u64(key, value);
        else if (key == "relax_sweeps") config.relax_sweeps = parse_u64(key, value);
        else if (key == "window") config.window = parse_u64(key, value);
        else if (key == "schedule") config.schedule = parse_schedule(key, value);
        else if (key == "replicas") config.replicas = parse_int(key, value);
        else if (key == "p_grid") config.p_grid = parse_real_list(key, value);
        else if (key == "out") config.out_dir = value;
        else if (key == "snapshot_every") config.snapshot_every = parse_u64(key, value);
        else if (key == "threads") config.threads = parse_int(key, value);
        else throw ConfigError("config: unknown key '" + key + "'");
    }
    validate_config(config);
    return config;
}

void validate_config(const Config& config) {
    require(config.model.L >= 2, "L must be >= 2");
    require(config.model.p >= 0.0 && config.model.p <= 1.0, "p must be in [0,1]");
    require(config.model.p_mut >= 0.0 && config.model.p_mut <= 1.0, "p_mut must be in [0,1]");
    require(config.model.survival.a > 0.0, "a must be > 0");
    require(config.model.survival.b > 0.0, "b must be > 0");
    if (config.model.fixed_learning)
        require(*config.model.fixed_learning > 0.0 && *config.model.fixed_learning < 1.0,
                "fixed_learning must be strictly inside (0,1)");
    require(config.window >= 1, "window must be >= 1");
    require(config.relax_sweeps < config.n_sweeps, "relax_sweeps must be < n_sweeps");
    require(config.replicas >= 1, "replicas must be >= 1");
    require(schedule_valid(config.schedule),
            "schedule must start at sweep 0, strictly increase, and keep p in [0,1]");
    for (double p : config.p_grid)
        require(p >= 0.0 && p <= 1.0, "p_grid entries must be in [0,1]");
    require(config.threads >= 0, "threads must be >= 0");
}

} // namespace namegame
