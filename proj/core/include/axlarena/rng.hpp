#pragma once

#include <cstdint>
#include <initializer_list>

namespace axl {

// Every random draw in the library comes from SplitMix64 (Steele, Lea,
// Vigna 2014): the state advances by the golden-ratio increment and each
// output is the avalanche finalizer of the new state. The algorithm is
// fixed by the three constants below, so any seed reproduces the same
// sequence on every platform, compiler, and thread layout. Independent
// streams are made by deriving fresh seeds with derive_seed rather than
// by partitioning one sequence.

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ull;

constexpr std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ull;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBull;
  z ^= z >> 31;
  return z;
}

// Folds fields into a base seed one at a time:
//   state <- mix64(state + kGoldenGamma + field)
// Distinct field tuples give distinct results up to 64-bit collisions.
constexpr std::uint64_t derive_seed(std::uint64_t base,
                                    std::initializer_list<std::uint64_t> fields) {
  std::uint64_t s = base;
  for (std::uint64_t f : fields) s = mix64(s + kGoldenGamma + f);
  return s;
}

class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += kGoldenGamma;
    ++draws_;
    return mix64(state_);
  }

  // Uniform in [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return next_unit() < p; }

  // floor(u * bound / 2^64): multiply-high without rejection. Bias is
  // below 2^-32 for the small bounds used here.
  std::uint64_t next_below(std::uint64_t bound) {
    using u128 = unsigned __int128;
    return static_cast<std::uint64_t>((static_cast<u128>(next_u64()) * bound) >> 64);
  }

  // Number of raw draws consumed so far; lets tests pin down which
  // decision rules actually touch the stream.
  std::uint64_t draws() const { return draws_; }

 private:
  std::uint64_t state_;
  std::uint64_t draws_ = 0;
};

}  // namespace axl
