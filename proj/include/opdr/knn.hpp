#pragma once

#include "opdr/core.hpp"
#include "opdr/metrics.hpp"

#include <Eigen/Core>

#include <cstddef>
#include <vector>

namespace opdr {

/// The k nearest neighbors of one query point, as a set. Members are kept
/// sorted by PointId so that two sets compare equal iff they hold the same
/// points, whatever order the search found them in.
class NeighborSet {
public:
  NeighborSet(PointId query, std::vector<PointId> members);

  PointId query() const noexcept { return query_; }
  std::size_t k() const noexcept { return members_.size(); }
  const std::vector<PointId>& members() const noexcept { return members_; }
  bool contains(PointId p) const noexcept;

  friend bool operator==(const NeighborSet&, const NeighborSet&) = default;

private:
  PointId query_;
  std::vector<PointId> members_;
};

struct KnnTable {
  std::size_t k = 0;
  Metric metric = Metric::L2;
  std::vector<NeighborSet> sets;

  std::size_t count() const noexcept { return sets.size(); }
};

/// k nearest neighbors of `query` from one row of a distance matrix, ranked
/// by (distance, PointId) with the query itself excluded.
std::vector<PointId> nearest_in_row(const Eigen::Ref<const Eigen::RowVectorXd>& row, PointId query, std::size_t k);

/// Exact brute-force KNN for every point. Requires 1 <= k <= count-1.
KnnTable knn_table(const VectorSet& vs, std::size_t k, Metric metric);

/// Same, from an already computed pairwise distance matrix.
KnnTable knn_table(const Eigen::MatrixXd& distances, std::size_t k, Metric metric);

}  // namespace opdr
