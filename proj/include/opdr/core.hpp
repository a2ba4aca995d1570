#pragma once

#include <Eigen/Core>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <vector>

namespace opdr {

using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;

/// Position of a point inside a VectorSet (row index).
struct PointId {
  std::size_t value = 0;

  constexpr PointId() = default;
  constexpr explicit PointId(std::size_t v) : value(v) {}

  friend constexpr auto operator<=>(PointId, PointId) = default;
};

enum class Dtype : std::uint8_t { Float32 = 0, Float64 = 1 };

/// Immutable set of `count` points in `dim` dimensions, stored row-major in
/// double precision. Construction rejects empty shapes, non-finite entries
/// and duplicate ids.
class VectorSet {
public:
  explicit VectorSet(Matrix data);
  VectorSet(Matrix data, std::vector<std::uint64_t> ids);

  std::size_t count() const noexcept { return static_cast<std::size_t>(data_.rows()); }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(data_.cols()); }

  const Matrix& data() const noexcept { return data_; }
  const std::vector<std::uint64_t>& ids() const noexcept { return ids_; }

  auto row(PointId p) const { return data_.row(static_cast<Eigen::Index>(p.value)); }

  /// New set made of the given rows, keeping their ids.
  VectorSet select(const std::vector<std::size_t>& rows) const;

private:
  void validate() const;

  Matrix data_;
  std::vector<std::uint64_t> ids_;
};

enum class FileFormat { Csv, Binary };

VectorSet load_vectors(const std::filesystem::path& path, FileFormat format);

/// Writes through a temporary sibling file and renames it into place, so a
/// failed write never leaves a partial file at `path`.
void save_vectors(const VectorSet& vs, const std::filesystem::path& path, FileFormat format,
                  Dtype dtype = Dtype::Float64);

/// Writes `contents` to `path` atomically (temp file + rename).
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

}  // namespace opdr
