#pragma once

#include <cstdint>
#include <random>

#include "sicmub/linalg.hpp"

namespace sicmub {

/// Deterministic random stream keyed by (seed, stream id).
///
/// Every parallel task derives its own stream from the campaign seed and a
/// task index, so results do not depend on scheduling. The key is mixed
/// with SplitMix64 before seeding a 64-bit Mersenne twister.
class RandomStream {
  public:
    RandomStream(std::uint64_t seed, std::uint64_t stream);

    /// Child stream keyed by this stream's key and `child`.
    [[nodiscard]] RandomStream split(std::uint64_t child) const;

    double normal() { return normal_(engine_); }
    Complex complex_normal() { return {normal_(engine_), normal_(engine_)}; }
    double uniform() { return uniform_(engine_); }
    /// Uniform integer in [lo, hi].
    std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi);

    [[nodiscard]] std::uint64_t key() const noexcept { return key_; }

  private:
    std::uint64_t key_;
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

[[nodiscard]] std::uint64_t splitmix64(std::uint64_t x) noexcept;

} // namespace sicmub
