#pragma once

#include <filesystem>
#include <span>
#include <string>

#include "zeckvec/analytics.hpp"
#include "zeckvec/bridge.hpp"
#include "zeckvec/normalize.hpp"

namespace zeckvec {

/// Writes to a sibling temporary file, then renames over `path`.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

/// Header x1,...,x{k-1},n_first,sr_string; one row per member in order.
std::string region_csv(const RegionSet& region, std::size_t dimension);

/// Planar scatter plot of a region (dimension 2 only): one color per R_i,
/// the origin drawn as a black square. Throws Error(InvalidArgument) for
/// other dimensions.
std::string region_svg(const RegionSet& region, std::size_t dimension);

/// One JSON object per n: {c, n, mode, seed, mean, variance, skewness,
/// excess_kurtosis, histogram}.
std::string stats_json(const RecurrenceVector& c, std::span<const SummandStats> stats);

/// n,mean,variance
std::string stats_series_csv(std::span<const SummandStats> stats);

/// One line per record: {"op", "pos", "count", "string", "G"}.
std::string trace_jsonl(std::span<const TraceRecord> records);

}  // namespace zeckvec
