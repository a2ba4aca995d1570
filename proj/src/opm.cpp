#include "opdr/opm.hpp"

#include "opdr/error.hpp"

#include <algorithm>
#include <set>

namespace opdr {

IndexSubset::IndexSubset(std::vector<PointId> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

IndexSubset::IndexSubset(std::initializer_list<std::size_t> members) {
  for (auto m : members) members_.emplace_back(m);
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

IndexSubset IndexSubset::full(std::size_t m) {
  std::vector<PointId> all;
  all.reserve(m);
  for (std::size_t i = 0; i < m; ++i) all.emplace_back(i);
  return IndexSubset(std::move(all));
}

MeasureContext::MeasureContext(const KnnTable& table_x, const KnnTable& table_y, PointId point)
    : table_x_(table_x), table_y_(table_y), point_(point) {
  if (table_x.count() != table_y.count() || table_x.k != table_y.k) {
    throw Error(Errc::InvalidContext, "tables disagree on count or k");
  }
  if (point.value >= table_x.count()) {
    throw Error(Errc::InvalidContext, "point " + std::to_string(point.value) + " out of range");
  }
}

std::size_t measure_count(const MeasureContext& ctx, const IndexSubset& f) {
  const auto& ex = ctx.neighbors_x();
  const auto& ey = ctx.neighbors_y();
  return static_cast<std::size_t>(
      std::count_if(f.members().begin(), f.members().end(), [&](PointId p) { return ex.contains(p) && ey.contains(p); }));
}

double measure(const MeasureContext& ctx, const IndexSubset& f) {
  return static_cast<double>(measure_count(ctx, f)) / static_cast<double>(ctx.k());
}

bool check_measure_axioms(const MeasureContext& ctx, const std::vector<IndexSubset>& partition) {
  std::vector<PointId> all;
  std::size_t parts_sum = 0;
  for (const auto& part : partition) {
    all.insert(all.end(), part.members().begin(), part.members().end());
    parts_sum += measure_count(ctx, part);
  }
  std::sort(all.begin(), all.end());
  if (auto dup = std::adjacent_find(all.begin(), all.end()); dup != all.end()) {
    throw Error(Errc::OverlappingSubsets, "point " + std::to_string(dup->value) + " appears in two parts");
  }
  const bool empty_is_zero = measure_count(ctx, IndexSubset{}) == 0;
  return empty_is_zero && measure_count(ctx, IndexSubset(std::move(all))) == parts_sum;
}

AccuracyReport accuracy(const KnnTable& table_x, const KnnTable& table_y) {
  if (table_x.count() != table_y.count() || table_x.k != table_y.k || table_x.count() == 0) {
    throw Error(Errc::TableMismatch, "tables have (m, k) = (" + std::to_string(table_x.count()) + ", " +
                                         std::to_string(table_x.k) + ") and (" + std::to_string(table_y.count()) +
                                         ", " + std::to_string(table_y.k) + ")");
  }
  AccuracyReport report;
  report.k = table_x.k;
  report.metric = table_x.metric;
  report.per_point.reserve(table_x.count());
  const auto k = static_cast<double>(table_x.k);
  double sum = 0.0;
  for (std::size_t i = 0; i < table_x.count(); ++i) {
    const auto& ex = table_x.sets[i].members();
    const auto& ey = table_y.sets[i].members();
    std::size_t shared = 0;
    for (auto a = ex.begin(), b = ey.begin(); a != ex.end() && b != ey.end();) {
      if (*a < *b) {
        ++a;
      } else if (*b < *a) {
        ++b;
      } else {
        ++shared;
        ++a;
        ++b;
      }
    }
    const double value = static_cast<double>(shared) / k;
    report.per_point.push_back(value);
    sum += value;
  }
  report.accuracy = sum / static_cast<double>(table_x.count());
  report.is_op_k = report.accuracy == 1.0;
  return report;
}

bool order_preserving_at(const std::vector<std::string>& ranked_x, const std::vector<std::string>& ranked_y,
                         std::size_t z) {
  z = std::min({z, ranked_x.size(), ranked_y.size()});
  std::set<std::string> head_x(ranked_x.begin(), ranked_x.begin() + static_cast<std::ptrdiff_t>(z));
  std::set<std::string> head_y(ranked_y.begin(), ranked_y.begin() + static_cast<std::ptrdiff_t>(z));
  return head_x == head_y;
}

OpLevelExample op_level_example() {
  OpLevelExample ex{{"a", "b", "c"}, {"b", "a", "c"}, {}};
  for (std::size_t z = 0; z < ex.op.size(); ++z) ex.op[z] = order_preserving_at(ex.ranked_x, ex.ranked_y, z);
  return ex;
}

OpWitness op_witness() {
  // In X, b's nearest neighbor is a; moving b away from a and c slightly off
  // the axis makes c the nearest neighbor of b in Y. With three points every
  // 2-neighbor set is "the other two", so it cannot change.
  Matrix x(3, 2);
  x << 0.0, 0.0,  //
      1.0, 0.0,   //
      3.0, 0.0;
  Matrix y(3, 2);
  y << 0.0, 0.0,  //
      2.0, 0.0,   //
      3.0, 0.5;
  return {VectorSet(std::move(x)), VectorSet(std::move(y))};
}

}  // namespace opdr
