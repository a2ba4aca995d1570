#include "opdr/core.hpp"

#include "opdr/error.hpp"

#include <cmath>
#include <string>
#include <unordered_set>

namespace opdr {

namespace {

std::vector<std::uint64_t> default_ids(std::size_t n) {
  std::vector<std::uint64_t> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = i;
  return ids;
}

}  // namespace

VectorSet::VectorSet(Matrix data) : data_(std::move(data)) {
  ids_ = default_ids(count());
  validate();
}

VectorSet::VectorSet(Matrix data, std::vector<std::uint64_t> ids) : data_(std::move(data)), ids_(std::move(ids)) {
  validate();
}

void VectorSet::validate() const {
  if (data_.rows() < 1 || data_.cols() < 1) {
    throw Error(Errc::InvalidVectorSet, "count and dim must both be >= 1");
  }
  if (ids_.size() != count()) {
    throw Error(Errc::InvalidVectorSet, "expected " + std::to_string(count()) + " ids, got " +
                                            std::to_string(ids_.size()));
  }
  for (Eigen::Index r = 0; r < data_.rows(); ++r) {
    for (Eigen::Index c = 0; c < data_.cols(); ++c) {
      if (!std::isfinite(data_(r, c))) {
        throw Error(Errc::NonFiniteValue, "row " + std::to_string(r) + ", column " + std::to_string(c));
      }
    }
  }
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(ids_.size());
  for (auto id : ids_) {
    if (!seen.insert(id).second) throw Error(Errc::InvalidVectorSet, "duplicate id " + std::to_string(id));
  }
}

VectorSet VectorSet::select(const std::vector<std::size_t>& rows) const {
  Matrix out(static_cast<Eigen::Index>(rows.size()), data_.cols());
  std::vector<std::uint64_t> ids;
  ids.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out.row(static_cast<Eigen::Index>(i)) = data_.row(static_cast<Eigen::Index>(rows[i]));
    ids.push_back(ids_.at(rows[i]));
  }
  return VectorSet(std::move(out), std::move(ids));
}

}  // namespace opdr
