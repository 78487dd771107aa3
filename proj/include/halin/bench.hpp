#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace halin {

/// Timings in microseconds; coloring stages are per-run medians.
struct BenchRecord {
  std::size_t n_total = 0;
  std::uint64_t seed = 0;
  double total_us = 0;
  double tree_us = 0;
  double recolor_us = 0;
  double conflicts_us = 0;
  double verify_us = 0;

  bool operator==(const BenchRecord&) const = default;
};

struct ScalingOptions {
  /// Each timed sample repeats the pipeline until at least this much wall
  /// time has passed and reports the per-run mean.
  double min_sample_us = 20000;
};

inline const std::vector<std::size_t> kDefaultBenchSizes = {10000, 20000, 40000, 80000, 160000};

/// For every size: generates a random Δ <= 5 instance of roughly that many
/// vertices, times the coloring stages `repeats` times (median), and verifies
/// the result once (timed separately). Sizes must be strictly ascending and
/// repeats >= 3 (InvalidArgument otherwise). A coloring that fails
/// verification raises InvariantViolated naming the seed.
std::vector<BenchRecord> run_scaling(const std::vector<std::size_t>& sizes, std::size_t repeats,
                                     std::uint64_t seed, const ScalingOptions& options = {});

/// Header `n,seed,total_us,tree_us,recolor_us,conflicts_us,verify_us` and one row per record.
std::string emit_csv(const std::vector<BenchRecord>& records);
/// Inverse of emit_csv; throws ParseError.
std::vector<BenchRecord> parse_csv(std::string_view text);

/// Coefficient of determination of the least-squares line total_us ~ n_total.
double linear_fit_r2(const std::vector<BenchRecord>& records);
/// total_us[i+1] / total_us[i].
std::vector<double> successive_ratios(const std::vector<BenchRecord>& records);

}  // namespace halin
