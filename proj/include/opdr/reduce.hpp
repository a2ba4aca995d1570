#pragma once

#include "opdr/core.hpp"
#include "opdr/metrics.hpp"

#include <Eigen/Core>

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace opdr {

enum class Method { Pca, Mds };

std::string_view to_string(Method method) noexcept;
std::optional<Method> parse_method(std::string_view text) noexcept;

struct ReducerConfig {
  Method method = Method::Pca;
  std::size_t target_dim = 1;
  /// Distance used to build the MDS input matrix; ignored by PCA.
  Metric metric = Metric::L2;
};

struct ReductionResult {
  VectorSet y;
  Method method;
  /// Retained eigenvalues, descending: covariance spectrum for PCA, Gram
  /// spectrum for MDS.
  std::vector<double> explained;
  /// PCA projection (dim x target_dim, orthonormal columns). Empty for MDS.
  Eigen::MatrixXd components;
  /// MDS only: set when fewer than target_dim eigenvalues of the Gram matrix
  /// are positive and the remaining columns were filled with zeros.
  bool zero_padded = false;
};

/// Largest target dimension the method accepts for an m x d input.
std::size_t max_target_dim(Method method, std::size_t count, std::size_t dim) noexcept;

ReductionResult reduce(const VectorSet& x, const ReducerConfig& cfg);

/// Flips the sign of each column so that its entry of largest magnitude is
/// positive (first such entry on ties).
void canonicalize_signs(Eigen::MatrixXd& columns);

}  // namespace opdr
