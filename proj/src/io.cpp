#include "namegame/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace namegame {

namespace {

std::string format_real(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", value);
    return buf;
}

std::string format_opt(const std::optional<double>& value) {
    return value ? format_real(*value) : std::string();
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(field);
            field.clear();
        } else {
            field.push_back(c);
        }
    }
    fields.push_back(field);
    return fields;
}

std::optional<double> parse_opt_real(const std::string& field) {
    if (field.empty()) return std::nullopt;
    return std::stod(field);
}

} // namespace

std::string timeseries_csv(const std::vector<TimeSeriesRow>& rows) {
    std::string out = kTimeSeriesHeader;
    out.push_back('\n');
    for (const auto& row : rows) {
        out += std::to_string(row.sweep);
        out.push_back(',');
        out += format_real(row.p);
        out.push_back(',');
        out += format_opt(row.success_rate);
        out.push_back(',');
        out += format_opt(row.mean_learning);
        out.push_back(',');
        out += std::to_string(row.population);
        out.push_back(',');
        out += std::to_string(row.n_languages);
        out.push_back(',');
        out += format_real(row.largest_cluster_fraction);
        out.push_back('\n');
    }
    return out;
}

std::vector<TimeSeriesRow> parse_timeseries_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != kTimeSeriesHeader)
        throw std::runtime_error("time series CSV: missing or wrong header");
    std::vector<TimeSeriesRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto fields = split_fields(line);
        if (fields.size() != 7)
            throw std::runtime_error("time series CSV: expected 7 fields, got " +
                                     std::to_string(fields.size()));
        TimeSeriesRow row;
        row.sweep = std::stoull(fields[0]);
        row.p = std::stod(fields[1]);
        row.success_rate = parse_opt_real(fields[2]);
        row.mean_learning = parse_opt_real(fields[3]);
        row.population = std::stoll(fields[4]);
        row.n_languages = std::stoll(fields[5]);
        row.largest_cluster_fraction = std::stod(fields[6]);
        rows.push_back(row);
    }
    return rows;
}

void write_text_file(const std::string& text, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw std::runtime_error("read failed: " + path.string());
    return buf.str();
}

std::string render_pgm(const ClusterLabeling& labeling, int L) {
    const int n_clusters = labeling.cluster_count();
    std::string out = "P2\n" + std::to_string(L) + " " + std::to_string(L) + "\n255\n";
    for (int y = 0; y < L; ++y) {
        for (int x = 0; x < L; ++x) {
            const std::int32_t label = labeling.labels[y * L + x];
            const int shade = label < 0 ? 255 : (220 * label) / n_clusters;
            if (x > 0) out.push_back(' ');
            out += std::to_string(shade);
        }
        out.push_back('\n');
    }
    return out;
}

void write_snapshot(const ClusterLabeling& labeling, int L, const std::filesystem::path& path) {
    write_text_file(render_pgm(labeling, L), path);
}

} // namespace namegame
