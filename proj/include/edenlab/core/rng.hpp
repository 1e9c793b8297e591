#pragma once
// Deterministic random source.
//
// A 64-bit master seed expands into independent per-trial streams via the
// splitmix64 finalizer. All variates are produced from raw mt19937_64 output
// (whose sequence is fixed by the standard) through explicit bit
// manipulation — the std::*_distribution adaptors are implementation-defined
// and would break byte-for-byte reproducibility of experiment outputs.

#include <cmath>
#include <cstdint>
#include <random>

#include "edenlab/core/error.hpp"

namespace edenlab {

/// splitmix64 finalizer: mixes a 64-bit value into a well-distributed one.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/// Seed of the stream for trial index `trial` under `master`. Double mixing
/// decorrelates consecutive trial indices and distinct masters.
constexpr std::uint64_t derive_stream_seed(std::uint64_t master,
                                           std::uint64_t trial) noexcept {
  return splitmix64(splitmix64(master) ^ splitmix64(trial + 0x9E3779B97F4A7C15ull));
}

/// One reproducible stream of variates. Copyable; copying forks the state.
class rng_stream {
public:
  explicit rng_stream(std::uint64_t seed) : engine_(seed) {}

  /// Raw 64-bit draw.
  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1): the top 53 bits of one raw draw.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Unbiased uniform integer in [0, n). Rejection sampling; expected < 2
  /// draws for any n.
  std::uint64_t uniform_below(std::uint64_t n) {
    if (n == 0) throw usage_error("uniform_below: n must be positive");
    const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
      const std::uint64_t r = engine_();
      if (r >= threshold) return r % n;
    }
  }

  /// Exponential variate with the given rate. May return exactly 0.0
  /// (probability 2^-53); callers that require strict monotonicity of event
  /// times treat that as a tie and raise tie_error.
  double exponential(double rate) {
    if (!(rate > 0.0)) throw usage_error("exponential: rate must be positive");
    return -std::log1p(-uniform01()) / rate;
  }

private:
  std::mt19937_64 engine_;
};

} // namespace edenlab
