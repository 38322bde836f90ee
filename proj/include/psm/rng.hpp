#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <utility>

namespace psm {

/// Deterministic pseudo-random stream. Streams are values: deriving one with
/// the same seed and id list replays the same sequence, so concurrent workers
/// can each derive their own stream instead of sharing mutable state.
class RngStream {
  public:
    explicit RngStream(std::uint64_t seed) : engine_(mix_seed(seed)) {}

    /// Derive a child stream from a base seed and a list of ids
    /// (e.g. realization index, pattern index, estimator tag).
    static RngStream derive(std::uint64_t seed, std::initializer_list<std::uint64_t> ids);

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on [0, 1) with 53-bit resolution.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Two independent N(0, 1) variates via Box-Muller. Consumes exactly two
    /// engine draws, which keeps call sequences reproducible.
    std::pair<double, double> normal_pair();

    /// Uniform integer in [0, n).
    std::uint64_t uniform_below(std::uint64_t n);

  private:
    static std::uint64_t mix_seed(std::uint64_t s);
    std::mt19937_64 engine_;
};

} // namespace psm
