#include "opdr/reduce.hpp"

#include "opdr/error.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace opdr {

std::string_view to_string(Method method) noexcept {
  return method == Method::Pca ? "pca" : "mds";
}

std::optional<Method> parse_method(std::string_view text) noexcept {
  if (text == "pca") return Method::Pca;
  if (text == "mds") return Method::Mds;
  return std::nullopt;
}

std::size_t max_target_dim(Method method, std::size_t count, std::size_t dim) noexcept {
  if (method == Method::Pca) return std::min(dim, count);
  return count > 0 ? count - 1 : 0;
}

void canonicalize_signs(Eigen::MatrixXd& columns) {
  for (Eigen::Index c = 0; c < columns.cols(); ++c) {
    Eigen::Index best = 0;
    double best_abs = -1.0;
    for (Eigen::Index r = 0; r < columns.rows(); ++r) {
      const double a = std::abs(columns(r, c));
      if (a > best_abs) {
        best_abs = a;
        best = r;
      }
    }
    if (columns(best, c) < 0.0) columns.col(c) = -columns.col(c);
  }
}

namespace {

struct Eigenpairs {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
  double spectral_radius = 0.0;
};

// Top-n eigenpairs of a symmetric matrix, largest eigenvalue first.
Eigenpairs top_eigenpairs(const Eigen::MatrixXd& sym, Eigen::Index n) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
  const auto& all = solver.eigenvalues();
  Eigenpairs out{all.tail(n).reverse(), solver.eigenvectors().rightCols(n).rowwise().reverse(),
                 std::max(std::abs(all(0)), std::abs(all(all.size() - 1)))};
  canonicalize_signs(out.vectors);
  return out;
}

ReductionResult reduce_pca(const VectorSet& x, std::size_t n) {
  const Eigen::MatrixXd centered = x.data().rowwise() - x.data().colwise().mean();
  const auto m = static_cast<double>(x.count());
  const Eigen::MatrixXd cov = (centered.transpose() * centered) / std::max(m - 1.0, 1.0);

  [[maybe_unused]] auto [values, components, radius] = top_eigenpairs(cov, static_cast<Eigen::Index>(n));

  Matrix y = centered * components;
  return {VectorSet(std::move(y), x.ids()),
          Method::Pca,
          std::vector<double>(values.data(), values.data() + values.size()),
          std::move(components),
          false};
}

ReductionResult reduce_mds(const VectorSet& x, std::size_t n, Metric metric) {
  const Eigen::MatrixXd sq = pairwise_distances(metric, x).array().square();
  const Eigen::VectorXd row_mean = sq.rowwise().mean();
  const double grand_mean = sq.mean();

  // B = -1/2 J D^2 J, written out with row/column means.
  Eigen::MatrixXd gram = -0.5 * ((sq.colwise() - row_mean).rowwise() - row_mean.transpose()).array() - 0.5 * grand_mean;
  gram = 0.5 * (gram + gram.transpose()).eval();

  const auto [values, vectors, radius] = top_eigenpairs(gram, static_cast<Eigen::Index>(n));

  // Eigenvalues at round-off level of the spectral radius count as zero.
  const double cutoff = radius * static_cast<double>(x.count()) * std::numeric_limits<double>::epsilon();

  Matrix y = Matrix::Zero(static_cast<Eigen::Index>(x.count()), static_cast<Eigen::Index>(n));
  bool padded = false;
  for (Eigen::Index c = 0; c < values.size(); ++c) {
    if (values(c) > cutoff) {
      y.col(c) = vectors.col(c) * std::sqrt(values(c));
    } else {
      padded = true;
    }
  }
  return {VectorSet(std::move(y), x.ids()), Method::Mds,
          std::vector<double>(values.data(), values.data() + values.size()), Eigen::MatrixXd(), padded};
}

}  // namespace

ReductionResult reduce(const VectorSet& x, const ReducerConfig& cfg) {
  const auto limit = max_target_dim(cfg.method, x.count(), x.dim());
  if (cfg.target_dim < 1 || cfg.target_dim > limit) {
    throw Error(Errc::TargetDimTooLarge, std::string(to_string(cfg.method)) + " target dim " +
                                             std::to_string(cfg.target_dim) + " outside [1, " + std::to_string(limit) +
                                             "] for a " + std::to_string(x.count()) + "x" + std::to_string(x.dim()) +
                                             " input");
  }
  return cfg.method == Method::Pca ? reduce_pca(x, cfg.target_dim) : reduce_mds(x, cfg.target_dim, cfg.metric);
}

}  // namespace opdr
