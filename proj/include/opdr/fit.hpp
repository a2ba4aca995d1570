#pragma once

#include <cstddef>
#include <vector>

namespace opdr {

/// One observation for the log-ratio law: accuracy reached when m points are
/// reduced to n dimensions.
struct FitSample {
  std::size_t n = 0;
  std::size_t m = 0;
  double accuracy = 0.0;
};

/// accuracy ≈ c0 * ln(n / m) + c1
struct FitResult {
  double c0 = 0.0;
  double c1 = 0.0;
  double r_squared = 0.0;
  std::size_t n_points = 0;

  /// Fitted accuracy at ratio n/m, clamped into [0, 1] for presentation.
  double predict(std::size_t n, std::size_t m) const;
};

/// Ordinary least squares of accuracy on ln(n/m). Needs at least two samples
/// with two distinct ratios (InsufficientSamples, DegenerateDesign).
FitResult fit_law(const std::vector<FitSample>& samples);

struct Recommendation {
  double target_accuracy = 0.0;
  std::size_t m = 0;
  /// m * exp((target - c1) / c0) before rounding and clamping.
  double raw = 0.0;
  std::size_t recommended_dim = 0;
  bool clamped = false;
};

/// Inverts the fitted law: smallest integer dimension whose predicted
/// accuracy reaches `target_accuracy`, clamped to [1, min(m - 1, max_dim)].
/// Throws NonPositiveSlope when c0 <= 0.
Recommendation recommend_dim(const FitResult& fit, double target_accuracy, std::size_t m, std::size_t max_dim);

}  // namespace opdr
