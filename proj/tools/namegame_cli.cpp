#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "namegame/harness.hpp"

namespace {

namespace fs = std::filesystem;
using namespace namegame;

struct CommonFlags {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out_dir;
    std::optional<double> fixed_learning;
    std::optional<std::uint64_t> snapshot_every;
    std::optional<int> threads;
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--config", flags.config_path, "key=value config file");
    cmd->add_option("--seed", flags.seed, "master seed (overrides config)");
    cmd->add_option("--out", flags.out_dir, "output directory (overrides config)");
    cmd->add_option("--fixed-learning", flags.fixed_learning,
                    "pin every learning ability to this value and disable its mutation");
    cmd->add_option("--snapshot-every", flags.snapshot_every,
                    "emit a PGM snapshot every N sweeps");
    cmd->add_option("--threads", flags.threads, "replica workers (0 = all cores, 1 = serial)");
}

Config build_config(const CommonFlags& flags) {
    Config config;
    if (!flags.config_path.empty())
        config = load_config(read_text_file(flags.config_path));
    if (flags.seed) config.seed = *flags.seed;
    if (flags.out_dir) config.out_dir = *flags.out_dir;
    if (flags.fixed_learning) config.model.fixed_learning = *flags.fixed_learning;
    if (flags.snapshot_every) config.snapshot_every = *flags.snapshot_every;
    if (flags.threads) config.threads = *flags.threads;
    validate_config(config);
    return config;
}

std::string describe_status(const RunResult& status) {
    if (status.completed()) return "completed";
    return "extinct at sweep " + std::to_string(status.extinct_sweep);
}

std::string describe_opt(const std::optional<double>& value) {
    if (!value) return "n/a";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", *value);
    return buf;
}

void emit_run_artifacts(const Config& config, const RunArtifacts& artifacts) {
    write_text_file(timeseries_csv(artifacts.series), fs::path(config.out_dir) / "timeseries.csv");

    std::string summary = "status,extinct_sweep,success_rate,mean_learning\n";
    summary += artifacts.status.completed() ? "completed" : "extinct";
    summary.push_back(',');
    if (!artifacts.status.completed())
        summary += std::to_string(artifacts.status.extinct_sweep);
    summary.push_back(',');
    if (artifacts.steady.success_rate) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.6f", *artifacts.steady.success_rate);
        summary += buf;
    }
    summary.push_back(',');
    if (artifacts.steady.mean_learning) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.6f", *artifacts.steady.mean_learning);
        summary += buf;
    }
    summary.push_back('\n');
    write_text_file(summary, fs::path(config.out_dir) / "summary.csv");

    std::cout << "run " << describe_status(artifacts.status) << ": "
              << artifacts.series.size() << " windows, steady success_rate "
              << describe_opt(artifacts.steady.success_rate) << ", steady mean_learning "
              << describe_opt(artifacts.steady.mean_learning) << "\n"
              << "wrote " << (fs::path(config.out_dir) / "timeseries.csv").string() << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Monte Carlo simulator of an evolutionary naming game on a periodic "
                 "square lattice: agents negotiate a shared vocabulary while breeding, "
                 "dying, and mutating a heritable learning ability."};
    app.require_subcommand(1);

    CommonFlags flags;
    CLI::App* cmd_run = app.add_subcommand("run", "single simulation at constant p");
    CLI::App* cmd_sweep = app.add_subcommand("sweep", "scan over p_grid with replicas");
    CLI::App* cmd_baldwin =
        app.add_subcommand("baldwin", "two-phase preset: p = 0.1, then 0.98 from sweep 8000");
    CLI::App* cmd_snapshot =
        app.add_subcommand("snapshot", "single simulation with periodic PGM snapshots");
    for (CLI::App* cmd : {cmd_run, cmd_sweep, cmd_baldwin, cmd_snapshot})
        add_common_flags(cmd, flags);

    try {
        app.parse(argc, argv);

        Config config = build_config(flags);
        fs::create_directories(config.out_dir);

        if (app.got_subcommand(cmd_run)) {
            emit_run_artifacts(config, run_single(config));
        } else if (app.got_subcommand(cmd_sweep)) {
            const auto rows = run_sweep(config);
            const fs::path path = fs::path(config.out_dir) / "sweep.csv";
            write_text_file(sweep_csv(rows), path);
            int extinct = 0;
            for (const auto& row : rows)
                if (!row.status.completed()) ++extinct;
            std::cout << "sweep completed: " << rows.size() << " rows (" << extinct
                      << " extinct), wrote " << path.string() << "\n";
        } else if (app.got_subcommand(cmd_baldwin)) {
            emit_run_artifacts(config, preset_baldwin(config));
        } else {
            if (config.snapshot_every == 0) config.snapshot_every = 1000;
            emit_run_artifacts(config, run_single(config));
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
