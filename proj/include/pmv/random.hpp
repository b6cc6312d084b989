#pragma once

#include <cstdint>
#include <random>

namespace pmv {

/// Deterministic sampling parameters carried by every algebra handle.
struct SamplerConfig {
  std::uint64_t seed = 20240601;
  /// Sampled rational coordinates have denominators bounded by this value.
  std::uint64_t denominator_bound = 1024;
  std::size_t sample_count = 1000;
};

/// Seeded 64-bit generator. `split` derives an independent stream so that each
/// check draws the same values no matter which checks ran before it.
///
/// Only the raw engine output is used (no std distributions), which keeps the
/// drawn values identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) : seed_(seed), stream_(stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    engine_.seed(seq);
  }

  std::uint64_t next() { return engine_(); }

  /// Uniform-ish integer in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  /// Integer in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

  Rng split(std::uint64_t stream) const { return Rng(seed_, stream_ * 0x9E3779B97F4A7C15ULL + stream + 1); }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
};

}  // namespace pmv
