#include "opdr/fit.hpp"

#include "opdr/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace opdr {

double FitResult::predict(std::size_t n, std::size_t m) const {
  const double a = c0 * std::log(static_cast<double>(n) / static_cast<double>(m)) + c1;
  return std::clamp(a, 0.0, 1.0);
}

FitResult fit_law(const std::vector<FitSample>& samples) {
  if (samples.size() < 2) {
    throw Error(Errc::InsufficientSamples, "need at least 2 samples, got " + std::to_string(samples.size()));
  }
  std::vector<double> xs;
  xs.reserve(samples.size());
  for (const auto& s : samples) {
    if (s.n < 1 || s.m < s.n) {
      throw Error(Errc::InsufficientSamples,
                  "sample (n=" + std::to_string(s.n) + ", m=" + std::to_string(s.m) + ") needs 1 <= n <= m");
    }
    xs.push_back(std::log(static_cast<double>(s.n) / static_cast<double>(s.m)));
  }

  const auto count = static_cast<double>(samples.size());
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    mean_x += xs[i];
    mean_y += samples[i].accuracy;
  }
  mean_x /= count;
  mean_y /= count;

  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double dx = xs[i] - mean_x;
    const double dy = samples[i].accuracy - mean_y;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  const bool all_equal = std::all_of(xs.begin(), xs.end(), [&](double x) { return x == xs.front(); });
  if (all_equal || sxx == 0.0) throw Error(Errc::DegenerateDesign, "all samples share one n/m ratio");

  FitResult fit;
  fit.c0 = sxy / sxx;
  fit.c1 = mean_y - fit.c0 * mean_x;
  fit.n_points = samples.size();

  double ss_res = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double r = samples[i].accuracy - (fit.c0 * xs[i] + fit.c1);
    ss_res += r * r;
  }
  if (syy == 0.0) {
    fit.r_squared = ss_res == 0.0 ? 1.0 : 0.0;
  } else {
    fit.r_squared = 1.0 - ss_res / syy;
  }
  return fit;
}

Recommendation recommend_dim(const FitResult& fit, double target_accuracy, std::size_t m, std::size_t max_dim) {
  if (!(fit.c0 > 0.0)) throw Error(Errc::NonPositiveSlope, "c0 = " + std::to_string(fit.c0) + " must be positive");

  Recommendation rec;
  rec.target_accuracy = target_accuracy;
  rec.m = m;
  rec.raw = static_cast<double>(m) * std::exp((target_accuracy - fit.c1) / fit.c0);

  const double upper = static_cast<double>(std::max<std::size_t>(1, std::min(m > 0 ? m - 1 : 0, max_dim)));
  const double rounded = std::ceil(rec.raw);
  const double clamped = std::clamp(rounded, 1.0, upper);
  rec.recommended_dim = static_cast<std::size_t>(clamped);
  rec.clamped = clamped != rounded;
  return rec;
}

}  // namespace opdr
