#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "namegame/observables.hpp"

namespace namegame {

inline constexpr const char* kTimeSeriesHeader =
    "sweep,p,success_rate,mean_learning,population,n_languages,largest_cluster_fraction";

// Reals carry 6 decimal digits, absent values are empty fields, rows end in a
// bare line feed.
std::string timeseries_csv(const std::vector<TimeSeriesRow>& rows);

// Inverse of timeseries_csv at the emitted precision. Throws on malformed
// input or a wrong header.
std::vector<TimeSeriesRow> parse_timeseries_csv(const std::string& text);

void write_text_file(const std::string& text, const std::filesystem::path& path);
std::string read_text_file(const std::filesystem::path& path);

// Plain-text grayscale snapshot (PGM "P2"), width = height = L, maxval 255.
// Sites without a language render as 255; the cluster with canonical rank r
// of R total renders as floor(220*r/R), largest cluster darkest.
std::string render_pgm(const ClusterLabeling& labeling, int L);

void write_snapshot(const ClusterLabeling& labeling, int L, const std::filesystem::path& path);

} // namespace namegame
