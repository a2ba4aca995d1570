#include "opdr/error.hpp"
#include "opdr/knn.hpp"
#include "opdr/opm.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace opdr;

namespace {

KnnTable table_from(std::size_t k, const std::vector<std::vector<std::size_t>>& neighbors) {
  KnnTable t{k, Metric::L2, {}};
  for (std::size_t i = 0; i < neighbors.size(); ++i) {
    std::vector<PointId> members;
    for (auto n : neighbors[i]) members.emplace_back(n);
    t.sets.emplace_back(PointId{i}, members);
  }
  return t;
}

// Random disjoint partition of {0..m-1} into `parts` subsets; some points are left out.
std::vector<IndexSubset> random_partition(std::size_t m, std::size_t parts, std::mt19937_64& rng) {
  std::vector<std::vector<PointId>> buckets(parts);
  for (std::size_t i = 0; i < m; ++i) {
    const auto b = rng() % (parts + 1);
    if (b < parts) buckets[b].emplace_back(i);
  }
  std::vector<IndexSubset> out;
  for (auto& b : buckets) out.emplace_back(std::move(b));
  return out;
}

}  // namespace

TEST_CASE("measure examples") {
  // X-neighbors of p0 = {1,2}, Y-neighbors of p0 = {2,3}; shared = {2}.
  const auto tx = table_from(2, {{1, 2}, {0, 2}, {1, 3}, {1, 2}});
  const auto ty = table_from(2, {{2, 3}, {0, 2}, {1, 3}, {1, 2}});
  const MeasureContext ctx(tx, ty, PointId{0});

  CHECK(measure(ctx, IndexSubset{}) == 0.0);
  CHECK(measure(ctx, IndexSubset{2, 3}) == 0.5);
  CHECK(measure(ctx, IndexSubset{3}) == 0.0);
  CHECK(measure(ctx, IndexSubset::full(4)) == 0.5);

  const MeasureContext same(tx, tx, PointId{0});
  CHECK(measure(same, IndexSubset::full(4)) == 1.0);
}

TEST_CASE("measure context validation") {
  const auto t2 = table_from(1, {{1}, {0}});
  const auto t3 = table_from(1, {{1}, {0}, {1}});
  CHECK_THROWS_AS(MeasureContext(t2, t3, PointId{0}), Error);
  CHECK_THROWS_AS(MeasureContext(t2, t2, PointId{2}), Error);
}

TEST_CASE("measure axioms") {
  const auto tx = table_from(2, {{1, 2}, {0, 2}, {1, 3}, {1, 2}});
  const auto ty = table_from(2, {{2, 3}, {0, 2}, {1, 3}, {1, 2}});
  const MeasureContext ctx(tx, ty, PointId{0});

  CHECK(check_measure_axioms(ctx, {IndexSubset{}}));
  CHECK(check_measure_axioms(ctx, {IndexSubset{0, 1}, IndexSubset{2, 3}}));
  try {
    check_measure_axioms(ctx, {IndexSubset{1, 2}, IndexSubset{2, 3}});
    FAIL("expected OverlappingSubsets");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::OverlappingSubsets);
  }
}

TEST_CASE("measure is additive on random contexts") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 3 + rng() % 30;
    const std::size_t k = 1 + rng() % std::min<std::size_t>(8, m - 1);
    const auto x = test::gaussian_set(m, 4, rng());
    const auto y = test::gaussian_set(m, 2, rng());
    const auto tx = knn_table(x, k, Metric::L2);
    const auto ty = knn_table(y, k, Metric::L2);
    const MeasureContext ctx(tx, ty, PointId{rng() % m});
    const auto parts = random_partition(m, 1 + rng() % 4, rng);
    CHECK(check_measure_axioms(ctx, parts));

    std::size_t total = 0;
    std::vector<PointId> all;
    for (const auto& p : parts) {
      total += measure_count(ctx, p);
      all.insert(all.end(), p.members().begin(), p.members().end());
      const double mu = measure(ctx, p);
      CHECK(mu >= 0.0);
      CHECK(mu <= 1.0);
    }
    CHECK(measure_count(ctx, IndexSubset(all)) == total);
  }
}

TEST_CASE("accuracy") {
  SUBCASE("identical tables") {
    const auto t = knn_table(test::gaussian_set(20, 3, 1), 4, Metric::L2);
    const auto r = accuracy(t, t);
    CHECK(r.accuracy == 1.0);
    CHECK(r.is_op_k);
    CHECK(r.per_point.size() == 20);
  }
  SUBCASE("disjoint neighbor sets") {
    const auto tx = table_from(1, {{1}, {0}, {0}, {0}});
    const auto ty = table_from(1, {{2}, {2}, {1}, {1}});
    const auto r = accuracy(tx, ty);
    CHECK(r.accuracy == 0.0);
    CHECK_FALSE(r.is_op_k);
  }
  SUBCASE("three points with k = 2 always agree") {
    const auto tx = knn_table(test::gaussian_set(3, 5, 2), 2, Metric::L1);
    const auto ty = knn_table(test::gaussian_set(3, 1, 3), 2, Metric::L1);
    CHECK(accuracy(tx, ty).accuracy == 1.0);
  }
  SUBCASE("per-point values") {
    const auto tx = table_from(2, {{1, 2}, {0, 2}, {1, 3}, {1, 2}});
    const auto ty = table_from(2, {{2, 3}, {0, 2}, {0, 3}, {0, 1}});
    const auto r = accuracy(tx, ty);
    CHECK(r.per_point == std::vector<double>{0.5, 1.0, 0.5, 0.5});
    CHECK(r.accuracy == 0.625);
  }
  SUBCASE("mismatched tables") {
    const auto a = table_from(1, {{1}, {0}});
    const auto b = table_from(1, {{1}, {0}, {0}});
    try {
      accuracy(a, b);
      FAIL("expected TableMismatch");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::TableMismatch);
    }
  }
}

TEST_CASE("accuracy stays in range") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t m = 4 + rng() % 20;
    const std::size_t k = 1 + rng() % (m - 1);
    const auto r = accuracy(knn_table(test::gaussian_set(m, 3, rng()), k, Metric::L2),
                            knn_table(test::gaussian_set(m, 3, rng()), k, Metric::L2));
    CHECK(r.accuracy >= 0.0);
    CHECK(r.accuracy <= 1.0);
    for (double v : r.per_point) {
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
    }
  }
}

TEST_CASE("ranked-list order preservation") {
  const auto ex = op_level_example();
  CHECK(ex.ranked_x == std::vector<std::string>{"a", "b", "c"});
  CHECK(ex.ranked_y == std::vector<std::string>{"b", "a", "c"});
  CHECK(ex.op[0]);
  CHECK_FALSE(ex.op[1]);
  CHECK(ex.op[2]);
  CHECK(order_preserving_at(ex.ranked_x, ex.ranked_y, 3));
}

TEST_CASE("non-inclusiveness witness") {
  const auto w = op_witness();
  CHECK(w.x.count() == 3);
  CHECK(w.x.dim() == 2);
  const auto a2 = accuracy(knn_table(w.x, 2, Metric::L2), knn_table(w.y, 2, Metric::L2));
  const auto a1 = accuracy(knn_table(w.x, 1, Metric::L2), knn_table(w.y, 1, Metric::L2));
  CHECK(a2.accuracy == 1.0);
  CHECK(a2.is_op_k);
  CHECK(a1.accuracy < 1.0);
  CHECK(a1.accuracy == doctest::Approx(2.0 / 3.0));
}
