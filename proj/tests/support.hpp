#pragma once

// Test-only helpers: random data and oracles that do not go through the
// library code paths they are used to check.

#include "opdr/core.hpp"
#include "opdr/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace opdr::test {

inline Matrix gaussian(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) m(r, c) = normal(rng);
  }
  return m;
}

inline VectorSet gaussian_set(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  return VectorSet(gaussian(rows, cols, seed));
}

/// Distance by explicit loops over std::vector.
inline double oracle_distance(Metric metric, const std::vector<double>& u, const std::vector<double>& v) {
  double acc = 0.0;
  switch (metric) {
    case Metric::L1:
      for (std::size_t i = 0; i < u.size(); ++i) acc += std::fabs(u[i] - v[i]);
      return acc;
    case Metric::L2:
      for (std::size_t i = 0; i < u.size(); ++i) acc += (u[i] - v[i]) * (u[i] - v[i]);
      return std::sqrt(acc);
    case Metric::Cosine: {
      double uu = 0.0, vv = 0.0;
      for (std::size_t i = 0; i < u.size(); ++i) {
        acc += u[i] * v[i];
        uu += u[i] * u[i];
        vv += v[i] * v[i];
      }
      return std::clamp(1.0 - acc / (std::sqrt(uu) * std::sqrt(vv)), 0.0, 2.0);
    }
  }
  return 0.0;
}

inline std::vector<double> row_of(const VectorSet& vs, std::size_t i) {
  std::vector<double> out(vs.dim());
  for (std::size_t c = 0; c < vs.dim(); ++c) out[c] = vs.data()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c));
  return out;
}

/// Full sort of all other points by (distance, index); first k as a set.
inline std::vector<std::set<std::size_t>> oracle_knn(const VectorSet& vs, std::size_t k, Metric metric) {
  std::vector<std::set<std::size_t>> out;
  for (std::size_t i = 0; i < vs.count(); ++i) {
    std::vector<std::pair<double, std::size_t>> all;
    for (std::size_t j = 0; j < vs.count(); ++j) {
      if (j == i) continue;
      // Symmetric by construction: always measure from the lower index.
      const auto a = std::min(i, j);
      const auto b = std::max(i, j);
      all.emplace_back(oracle_distance(metric, row_of(vs, a), row_of(vs, b)), j);
    }
    std::sort(all.begin(), all.end());
    std::set<std::size_t> s;
    for (std::size_t t = 0; t < k; ++t) s.insert(all[t].second);
    out.push_back(std::move(s));
  }
  return out;
}

inline std::vector<double> average_ranks(const std::vector<double>& v) {
  std::vector<std::size_t> idx(v.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> ranks(v.size());
  for (std::size_t i = 0; i < idx.size();) {
    std::size_t j = i;
    while (j + 1 < idx.size() && v[idx[j + 1]] == v[idx[i]]) ++j;
    const double r = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t t = i; t <= j; ++t) ranks[idx[t]] = r;
    i = j + 1;
  }
  return ranks;
}

/// Spearman rank correlation with average ranks for ties.
inline double spearman(const std::vector<double>& a, const std::vector<double>& b) {
  const auto ra = average_ranks(a);
  const auto rb = average_ranks(b);
  const double n = static_cast<double>(a.size());
  const double ma = std::accumulate(ra.begin(), ra.end(), 0.0) / n;
  const double mb = std::accumulate(rb.begin(), rb.end(), 0.0) / n;
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sab += (ra[i] - ma) * (rb[i] - mb);
    saa += (ra[i] - ma) * (ra[i] - ma);
    sbb += (rb[i] - mb) * (rb[i] - mb);
  }
  return sab / std::sqrt(saa * sbb);
}

}  // namespace opdr::test
