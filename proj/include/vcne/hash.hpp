#pragma once
#include <cstdint>

namespace vcne {

/// SplitMix64 finalizer. Used to key RNG streams and to hash edges into
/// partitions, so results depend only on ids and never on memory layout.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

constexpr std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t a) noexcept {
  return mix64(mix64(seed) ^ a);
}

constexpr std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) noexcept {
  return mix64(stream_seed(seed, a) ^ mix64(b + 0x632BE59BD9B4E019ull));
}

}  // namespace vcne
