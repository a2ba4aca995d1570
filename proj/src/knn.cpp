#include "opdr/knn.hpp"

#include "opdr/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace opdr {

NeighborSet::NeighborSet(PointId query, std::vector<PointId> members) : query_(query), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
}

bool NeighborSet::contains(PointId p) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), p);
}

std::vector<PointId> nearest_in_row(const Eigen::Ref<const Eigen::RowVectorXd>& row, PointId query, std::size_t k) {
  const auto m = static_cast<std::size_t>(row.size());
  std::vector<std::size_t> candidates;
  candidates.reserve(m - 1);
  for (std::size_t j = 0; j < m; ++j) {
    if (j != query.value) candidates.push_back(j);
  }
  auto closer = [&](std::size_t a, std::size_t b) {
    const double da = row(static_cast<Eigen::Index>(a));
    const double db = row(static_cast<Eigen::Index>(b));
    return da < db || (da == db && a < b);
  };
  std::partial_sort(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(k), candidates.end(), closer);
  std::vector<PointId> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) out.emplace_back(candidates[i]);
  return out;
}

KnnTable knn_table(const Eigen::MatrixXd& distances, std::size_t k, Metric metric) {
  const auto m = static_cast<std::size_t>(distances.rows());
  if (k < 1 || k >= m) {
    throw Error(Errc::KTooLarge, "k = " + std::to_string(k) + " requires 1 <= k <= " + std::to_string(m) + " - 1");
  }
  KnnTable table{k, metric, {}};
  table.sets.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    PointId q{i};
    table.sets.emplace_back(q, nearest_in_row(distances.row(static_cast<Eigen::Index>(i)), q, k));
  }
  return table;
}

KnnTable knn_table(const VectorSet& vs, std::size_t k, Metric metric) {
  if (k < 1 || k >= vs.count()) {
    throw Error(Errc::KTooLarge,
                "k = " + std::to_string(k) + " requires 1 <= k <= " + std::to_string(vs.count()) + " - 1");
  }
  return knn_table(pairwise_distances(metric, vs), k, metric);
}

}  // namespace opdr
