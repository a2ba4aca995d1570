#pragma once

#include "opdr/core.hpp"
#include "opdr/error.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>

namespace opdr {

enum class Metric { L1, L2, Cosine };

std::string_view to_string(Metric metric) noexcept;
std::optional<Metric> parse_metric(std::string_view text) noexcept;

/// Distance between two equally sized real vectors (rows or columns).
///
/// Cosine distance is 1 - cos(u, v), clamped into [0, 2]. A zero-norm input
/// under Cosine throws ZeroNormVector instead of returning a sentinel.
template <typename DerivedU, typename DerivedV>
double distance(Metric metric, const Eigen::MatrixBase<DerivedU>& u, const Eigen::MatrixBase<DerivedV>& v) {
  if (u.size() != v.size() || u.size() == 0) {
    throw Error(Errc::DimensionMismatch, "sizes " + std::to_string(u.size()) + " and " + std::to_string(v.size()));
  }
  switch (metric) {
    case Metric::L1:
      return (u.derived().array() - v.derived().array()).abs().sum();
    case Metric::L2:
      return std::sqrt((u.derived().array() - v.derived().array()).square().sum());
    case Metric::Cosine: {
      const double nu = u.norm();
      const double nv = v.norm();
      if (nu == 0.0 || nv == 0.0) throw Error(Errc::ZeroNormVector, "cosine distance of a zero-norm vector");
      const double dot = (u.derived().array() * v.derived().array()).sum();
      return std::clamp(1.0 - dot / (nu * nv), 0.0, 2.0);
    }
  }
  return 0.0;
}

/// Symmetric m x m distance matrix. Only the upper triangle is computed and
/// mirrored, so the result is bit-exactly symmetric with a zero diagonal.
Eigen::MatrixXd pairwise_distances(Metric metric, const VectorSet& vs);

}  // namespace opdr
