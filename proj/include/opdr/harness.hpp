#pragma once

#include "opdr/core.hpp"
#include "opdr/fit.hpp"
#include "opdr/metrics.hpp"
#include "opdr/reduce.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace opdr {

struct SweepConfig {
  std::vector<std::size_t> sample_sizes{10, 20, 30, 40, 50, 60, 70, 80};
  /// Target dimensions to try for every m. Empty means every n the reducer
  /// accepts in [1, m - 1]. Entries invalid for a given m are skipped.
  std::vector<std::size_t> dims;
  std::size_t k = 5;
  Metric metric = Metric::L2;
  Method method = Method::Pca;
  std::uint64_t seed = 0;
  std::size_t repeats = 1;
  /// Worker threads; 0 uses the hardware concurrency. Output does not depend on it.
  std::size_t threads = 0;
};

struct SweepRecord {
  std::size_t m = 0;
  std::size_t n = 0;
  double ratio = 0.0;
  std::size_t k = 0;
  Metric metric = Metric::L2;
  Method method = Method::Pca;
  std::size_t repeat = 0;
  double accuracy = 0.0;

  friend bool operator==(const SweepRecord&, const SweepRecord&) = default;
};

/// Target dimensions swept for subsets of size m drawn from dim-dimensional data.
std::vector<std::size_t> dims_for(const SweepConfig& cfg, std::size_t m, std::size_t dim);

/// For every (m, repeat) draws m points, and for every n reduces them and
/// scores the reduction with the accuracy of k-neighbor preservation, both
/// spaces using cfg.metric. Records are ordered by (m, n, repeat).
std::vector<SweepRecord> run_sweep(const VectorSet& x, const SweepConfig& cfg);

struct RatioBin {
  double ratio = 0.0;
  double mean_accuracy = 0.0;
  std::size_t count = 0;
};

/// Mean accuracy per distinct ratio, ascending by ratio.
std::vector<RatioBin> summarize(const std::vector<SweepRecord>& records);

std::vector<FitSample> to_fit_samples(const std::vector<SweepRecord>& records);

inline constexpr std::string_view kSweepHeader = "m,n,ratio,k,metric,method,repeat,accuracy";

/// CSV text: one comment line (`comment` without the leading '#'), the
/// header, then one line per record.
std::string format_sweep_csv(const std::vector<SweepRecord>& records, const std::string& comment);

/// Parses sweep CSV, skipping '#' comment lines. Columns are located by
/// header name.
std::vector<SweepRecord> parse_sweep_csv(const std::string& text);

}  // namespace opdr
