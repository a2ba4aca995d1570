#include "opdr/subsample.hpp"

#include <algorithm>
#include <numeric>

namespace opdr {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t CounterRng::mix(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t CounterRng::next() noexcept {
  ++counter_;
  return mix(key_ + counter_ * kGolden);
}

std::uint64_t CounterRng::below(std::uint64_t bound) noexcept {
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

std::uint64_t stream_key(std::uint64_t seed, std::uint64_t m, std::uint64_t repeat) noexcept {
  std::uint64_t h = CounterRng::mix(seed + kGolden);
  h = CounterRng::mix(h ^ (m + 2 * kGolden));
  return CounterRng::mix(h ^ (repeat + 3 * kGolden));
}

std::vector<std::size_t> subsample(std::size_t population, std::size_t m, std::uint64_t key) {
  std::vector<std::size_t> pool(population);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  CounterRng rng(key);
  m = std::min(m, population);
  for (std::size_t i = 0; i < m; ++i) {
    const auto j = i + static_cast<std::size_t>(rng.below(population - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(m);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace opdr
