#pragma once

#include "opdr/core.hpp"
#include "opdr/knn.hpp"
#include "opdr/metrics.hpp"

#include <array>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace opdr {

/// A finite subset of point indices. Any subset is representable, which is
/// all the power-set sigma-algebra over a finite point set asks for.
class IndexSubset {
public:
  IndexSubset() = default;
  explicit IndexSubset(std::vector<PointId> members);
  IndexSubset(std::initializer_list<std::size_t> members);

  /// {0, ..., m-1}
  static IndexSubset full(std::size_t m);

  const std::vector<PointId>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }

private:
  std::vector<PointId> members_;  // sorted, unique
};

/// The pair of neighbor tables and the point whose neighborhoods are compared.
class MeasureContext {
public:
  MeasureContext(const KnnTable& table_x, const KnnTable& table_y, PointId point);

  std::size_t k() const noexcept { return table_x_.get().k; }
  PointId point() const noexcept { return point_; }
  const NeighborSet& neighbors_x() const { return table_x_.get().sets[point_.value]; }
  const NeighborSet& neighbors_y() const { return table_y_.get().sets[point_.value]; }

private:
  std::reference_wrapper<const KnnTable> table_x_;
  std::reference_wrapper<const KnnTable> table_y_;
  PointId point_;
};

/// |f ∩ E_y ∩ E_x|, the integer numerator of the measure.
std::size_t measure_count(const MeasureContext& ctx, const IndexSubset& f);

/// Fraction of the point's k-neighbors that lie in `f` and are shared by
/// both spaces.
double measure(const MeasureContext& ctx, const IndexSubset& f);

/// Checks that the measure of the empty set is zero and that the measure of
/// the union of `partition` equals the sum of the parts' measures. Counts are
/// compared as integers, so equality is exact. Throws OverlappingSubsets if
/// two parts share a point.
bool check_measure_axioms(const MeasureContext& ctx, const std::vector<IndexSubset>& partition);

struct AccuracyReport {
  std::size_t k = 0;
  Metric metric = Metric::L2;
  std::vector<double> per_point;
  double accuracy = 0.0;
  bool is_op_k = false;
};

/// Mean over points of |E_x ∩ E_y| / k. Tables must share count and k.
AccuracyReport accuracy(const KnnTable& table_x, const KnnTable& table_y);

/// True iff the first z entries of both ranked lists hold the same elements.
bool order_preserving_at(const std::vector<std::string>& ranked_x, const std::vector<std::string>& ranked_y,
                         std::size_t z);

struct OpLevelExample {
  std::vector<std::string> ranked_x;
  std::vector<std::string> ranked_y;
  std::array<bool, 3> op;  // op[z] for z = 0, 1, 2
};

/// Ranked lists (a, b, c) and (b, a, c): order preserving at 2 but not at 1.
OpLevelExample op_level_example();

struct OpWitness {
  VectorSet x;
  VectorSet y;
};

/// Three points in the plane and an image of them that keeps every 2-neighbor
/// set but changes a nearest neighbor, so A_2 = 1 while A_1 < 1.
OpWitness op_witness();

}  // namespace opdr
