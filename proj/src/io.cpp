#include "opdr/core.hpp"
#include "opdr/error.hpp"

#include <array>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <system_error>
#include <type_traits>

namespace opdr {

namespace {

constexpr std::array<char, 4> kMagic = {'O', 'P', 'D', 'R'};
constexpr std::uint32_t kVersion = 1;
constexpr std::size_t kHeaderBytes = 32;

std::string read_all(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IoRead, "cannot open " + path.string());
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(Errc::IoRead, "read failed for " + path.string());
  return bytes;
}

template <typename T>
T get_le(const std::string& bytes, std::size_t offset) {
  static_assert(std::is_integral_v<T>);
  T value = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    value |= static_cast<T>(static_cast<unsigned char>(bytes[offset + i])) << (8 * i);
  }
  return value;
}

template <typename T>
void put_le(std::string& out, T value) {
  static_assert(std::is_integral_v<T>);
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    out.push_back(static_cast<char>((value >> (8 * i)) & 0xFF));
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

VectorSet parse_csv(const std::string& text) {
  std::vector<double> values;
  std::size_t dim = 0;
  std::size_t rows = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    std::string_view line = trim(std::string_view(text).substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line_no == 1 && !line.empty() && line.front() == '#') continue;
    if (line.empty() && pos >= text.size()) break;

    std::size_t width = 0;
    std::size_t field_start = 0;
    while (true) {
      auto comma = line.find(',', field_start);
      auto field = trim(line.substr(field_start, comma == std::string_view::npos ? std::string_view::npos
                                                                               : comma - field_start));
      double v = 0.0;
      auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
      if (ec != std::errc() || ptr != field.data() + field.size() || field.empty()) {
        throw Error(Errc::MalformedValue, "line " + std::to_string(line_no) + " (row " + std::to_string(rows) + "): cannot parse '" +
                        std::string(field) + "'");
      }
      if (!std::isfinite(v)) {
        throw Error(Errc::NonFiniteValue, "line " + std::to_string(line_no) + " (row " + std::to_string(rows) + ")");
      }
      values.push_back(v);
      ++width;
      if (comma == std::string_view::npos) break;
      field_start = comma + 1;
    }
    if (rows == 0) {
      dim = width;
    } else if (width != dim) {
      throw Error(Errc::InconsistentRowWidth, "line " + std::to_string(line_no) + " (row " + std::to_string(rows) +
                                                  "): expected " + std::to_string(dim) + " values, got " +
                                                  std::to_string(width));
    }
    ++rows;
  }
  if (rows == 0) throw Error(Errc::EmptyFile, "no data rows");

  Matrix data(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(dim));
  std::memcpy(data.data(), values.data(), values.size() * sizeof(double));
  return VectorSet(std::move(data));
}

VectorSet parse_binary(const std::string& bytes) {
  if (bytes.empty()) throw Error(Errc::EmptyFile, "file has zero bytes");
  if (bytes.size() < kHeaderBytes) {
    throw Error(Errc::MalformedHeader, "header truncated at byte " + std::to_string(bytes.size()));
  }
  if (std::memcmp(bytes.data(), kMagic.data(), kMagic.size()) != 0) {
    throw Error(Errc::MalformedHeader, "bad magic at byte 0");
  }
  if (auto version = get_le<std::uint32_t>(bytes, 4); version != kVersion) {
    throw Error(Errc::MalformedHeader, "unsupported version " + std::to_string(version) + " at byte 4");
  }
  const auto count = get_le<std::uint64_t>(bytes, 8);
  const auto dim = get_le<std::uint64_t>(bytes, 16);
  const auto tag = static_cast<unsigned char>(bytes[24]);
  if (tag > 1) throw Error(Errc::MalformedHeader, "unknown dtype tag " + std::to_string(tag) + " at byte 24");
  for (std::size_t i = 25; i < kHeaderBytes; ++i) {
    if (bytes[i] != 0) throw Error(Errc::MalformedHeader, "non-zero padding at byte " + std::to_string(i));
  }
  if (count == 0) throw Error(Errc::EmptyFile, "count is zero (byte 8)");
  if (dim == 0) throw Error(Errc::MalformedHeader, "dim is zero at byte 16");

  const std::size_t width = tag == 0 ? 4 : 8;
  const auto payload = bytes.size() - kHeaderBytes;
  if (dim > payload / width || count > payload / width / dim || count * dim * width != payload) {
    throw Error(Errc::InconsistentRowWidth, "payload of " + std::to_string(payload) + " bytes at byte 32 does not hold " +
                                                std::to_string(count) + "x" + std::to_string(dim) + " values");
  }

  Matrix data(static_cast<Eigen::Index>(count), static_cast<Eigen::Index>(dim));
  std::size_t offset = kHeaderBytes;
  for (std::uint64_t r = 0; r < count; ++r) {
    for (std::uint64_t c = 0; c < dim; ++c, offset += width) {
      double v = 0.0;
      if (width == 4) {
        v = static_cast<double>(std::bit_cast<float>(get_le<std::uint32_t>(bytes, offset)));
      } else {
        v = std::bit_cast<double>(get_le<std::uint64_t>(bytes, offset));
      }
      if (!std::isfinite(v)) {
        throw Error(Errc::NonFiniteValue, "row " + std::to_string(r) + " at byte " + std::to_string(offset));
      }
      data(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = v;
    }
  }
  return VectorSet(std::move(data));
}

std::string format_csv(const VectorSet& vs) {
  std::string out;
  char buf[32];
  const auto& m = vs.data();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c > 0) out.push_back(',');
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), m(r, c));
      out.append(buf, ptr);
    }
    out.push_back('\n');
  }
  return out;
}

std::string format_binary(const VectorSet& vs, Dtype dtype) {
  std::string out;
  const std::size_t width = dtype == Dtype::Float32 ? 4 : 8;
  out.reserve(kHeaderBytes + vs.count() * vs.dim() * width);
  out.append(kMagic.data(), kMagic.size());
  put_le<std::uint32_t>(out, kVersion);
  put_le<std::uint64_t>(out, vs.count());
  put_le<std::uint64_t>(out, vs.dim());
  out.push_back(static_cast<char>(dtype));
  out.append(kHeaderBytes - out.size(), '\0');
  const auto& m = vs.data();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (dtype == Dtype::Float32) {
        put_le(out, std::bit_cast<std::uint32_t>(static_cast<float>(m(r, c))));
      } else {
        put_le(out, std::bit_cast<std::uint64_t>(m(r, c)));
      }
    }
  }
  return out;
}

}  // namespace

VectorSet load_vectors(const std::filesystem::path& path, FileFormat format) {
  const auto bytes = read_all(path);
  return format == FileFormat::Csv ? parse_csv(bytes) : parse_binary(bytes);
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::IoWrite, "cannot open " + tmp.string() + " for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) {
      out.close();
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw Error(Errc::IoWrite, "write failed for " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    throw Error(Errc::IoWrite, "cannot move into place " + path.string() + ": " + ec.message());
  }
}

void save_vectors(const VectorSet& vs, const std::filesystem::path& path, FileFormat format, Dtype dtype) {
  write_file_atomic(path, format == FileFormat::Csv ? format_csv(vs) : format_binary(vs, dtype));
}

}  // namespace opdr
