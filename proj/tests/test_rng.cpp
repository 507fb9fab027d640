#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>

#include "axlarena/rng.hpp"

namespace {

// Reference SplitMix64, written independently from the published algorithm
// description so a transcription bug in the library cannot hide.
std::uint64_t reference_next(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

TEST_CASE("splitmix64 matches the published reference outputs") {
  // First outputs for seed 1234567, as listed with the algorithm's
  // reference implementation.
  axl::RngStream r(1234567);
  CHECK(r.next_u64() == 6457827717110365317ull);
  CHECK(r.next_u64() == 3203168211198807973ull);
  CHECK(r.next_u64() == 9817491932198370423ull);

  axl::RngStream zero(0);
  CHECK(zero.next_u64() == 16294208416658607535ull);
  CHECK(zero.next_u64() == 7960286522194355700ull);
}

TEST_CASE("stream agrees with an independent reimplementation") {
  for (std::uint64_t seed : {0ull, 1ull, 42ull, 0xDEADBEEFull, ~0ull}) {
    axl::RngStream r(seed);
    std::uint64_t state = seed;
    for (int i = 0; i < 100; ++i) {
      CHECK(r.next_u64() == reference_next(state));
    }
  }
}

TEST_CASE("derive_seed folds fields one at a time") {
  const std::uint64_t base = 99;
  CHECK(axl::derive_seed(base, {}) == base);
  CHECK(axl::derive_seed(base, {7}) == axl::mix64(base + axl::kGoldenGamma + 7));
  const std::uint64_t once = axl::derive_seed(base, {7});
  CHECK(axl::derive_seed(base, {7, 9}) == axl::mix64(once + axl::kGoldenGamma + 9));

  // Field order matters and distinct tuples separate.
  CHECK(axl::derive_seed(base, {1, 2}) != axl::derive_seed(base, {2, 1}));
  CHECK(axl::derive_seed(base, {1}) != axl::derive_seed(base, {2}));
  CHECK(axl::derive_seed(1, {5}) != axl::derive_seed(2, {5}));
}

TEST_CASE("unit draws live in [0,1) and average near one half") {
  axl::RngStream r(2024);
  double sum = 0.0;
  const int n = 10000;
  for (int i = 0; i < n; ++i) {
    const double u = r.next_unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    sum += u;
  }
  CHECK(sum / n == doctest::Approx(0.5).epsilon(0.03));
}

TEST_CASE("bernoulli respects its endpoints") {
  axl::RngStream r(7);
  for (int i = 0; i < 100; ++i) {
    CHECK_FALSE(r.bernoulli(0.0));
    CHECK(r.bernoulli(1.0));
  }
}

TEST_CASE("next_below stays under its bound") {
  axl::RngStream r(11);
  for (int i = 0; i < 1000; ++i) {
    CHECK(r.next_below(1) == 0);
    CHECK(r.next_below(7) < 7);
    CHECK(r.next_below(1000000007ull) < 1000000007ull);
  }
}

TEST_CASE("draw counter tracks every raw draw") {
  axl::RngStream r(5);
  CHECK(r.draws() == 0);
  r.next_u64();
  CHECK(r.draws() == 1);
  r.next_unit();
  r.bernoulli(0.5);
  r.next_below(10);
  CHECK(r.draws() == 4);
}

TEST_CASE("equal seeds replay the same sequence") {
  axl::RngStream a(123), b(123);
  for (int i = 0; i < 50; ++i) CHECK(a.next_u64() == b.next_u64());
}
