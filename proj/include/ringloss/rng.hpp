#pragma once

#include <cstdint>
#include <vector>

namespace ringloss {

// Deterministic randomness for the whole pipeline.
//
// The generator is SplitMix64 (Steele/Lea/Vigna, public domain): the state
// advances by the 64-bit golden-ratio constant and outputs go through a
// two-round xorshift-multiply finalizer. It is pinned here, instead of using
// std::mt19937_64 plus std::shuffle, because the standard library does not
// specify shuffle's consumption pattern and the split/bootstrap contracts
// require identical results for identical seeds on every platform.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Unbiased draw in [0, bound): rejects the partial block at the top of the
  // 2^64 range, then reduces modulo bound. Requires bound >= 1.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  // Uniform double in [0, 1) from the top 53 bits.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
  std::uint64_t state_;
};

// The (index + 1)-th output of SplitMix64 seeded with `seed`. Child streams
// (for example per-tree seeds) derived this way never shift when more
// streams are appended.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// In-place Fisher-Yates shuffle: for i = n-1 .. 1 swap v[i] with v[j],
// j = next_below(i + 1). One bounded draw per position, high index first.
template <typename T>
void fisher_yates_shuffle(std::vector<T>& v, SplitMix64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.next_below(i));
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace ringloss
