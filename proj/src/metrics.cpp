#include "opdr/metrics.hpp"

namespace opdr {

std::string_view to_string(Metric metric) noexcept {
  switch (metric) {
    case Metric::L1: return "l1";
    case Metric::L2: return "l2";
    case Metric::Cosine: return "cosine";
  }
  return "unknown";
}

std::optional<Metric> parse_metric(std::string_view text) noexcept {
  if (text == "l1") return Metric::L1;
  if (text == "l2") return Metric::L2;
  if (text == "cosine") return Metric::Cosine;
  return std::nullopt;
}

Eigen::MatrixXd pairwise_distances(Metric metric, const VectorSet& vs) {
  const auto m = static_cast<Eigen::Index>(vs.count());
  const auto& x = vs.data();
  if (metric == Metric::Cosine) {
    for (Eigen::Index i = 0; i < m; ++i) {
      if (x.row(i).squaredNorm() == 0.0) {
        throw Error(Errc::ZeroNormVector, "row " + std::to_string(i) + " has zero norm");
      }
    }
  }
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = i + 1; j < m; ++j) {
      const double d = distance(metric, x.row(i), x.row(j));
      out(i, j) = d;
      out(j, i) = d;
    }
  }
  return out;
}

}  // namespace opdr
