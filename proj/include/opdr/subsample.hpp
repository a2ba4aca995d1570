#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace opdr {

/// Identifier written into sweep outputs so a run can be reproduced with the
/// same sampling algorithm.
inline constexpr std::string_view kSamplerId = "splitmix64-ctr+fisher-yates/v1";

/// Counter-based stream: the i-th draw is a pure function of (key, i), so the
/// sequence does not depend on platform, library or call interleaving.
class CounterRng {
public:
  explicit CounterRng(std::uint64_t key) : key_(key) {}

  std::uint64_t next() noexcept;

  /// Uniform integer in [0, bound), bound >= 1, by rejection.
  std::uint64_t below(std::uint64_t bound) noexcept;

  static std::uint64_t mix(std::uint64_t z) noexcept;

private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Stream key for one sweep cell.
std::uint64_t stream_key(std::uint64_t seed, std::uint64_t m, std::uint64_t repeat) noexcept;

/// `m` distinct indices drawn without replacement from [0, population),
/// returned in ascending order.
std::vector<std::size_t> subsample(std::size_t population, std::size_t m, std::uint64_t key);

}  // namespace opdr
