#pragma once

#include <cstdint>
#include <random>

namespace shc {

/// Mixes a master seed with a stream tag and an index into an independent
/// 64-bit seed (splitmix64 finalizer applied twice). Streams derived this way
/// are how replicas, chunks and increments get reproducible randomness that
/// does not depend on execution order.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                          std::uint64_t index = 0) noexcept;

/// Stream tags used with derive_seed.
namespace stream {
inline constexpr std::uint64_t kPath = 0x70617468;
inline constexpr std::uint64_t kReplica = 0x7265706c;
inline constexpr std::uint64_t kChunk = 0x63686e6b;
inline constexpr std::uint64_t kProbe = 0x70726f62;
}  // namespace stream

/// Thin wrapper over std::mt19937_64 with the variates the samplers need.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on the open interval (0, 1); never returns 0 or 1.
  double uniform_open() noexcept {
    // 53 random mantissa bits, shifted by half an ulp off zero.
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Uniform on (lo, hi).
  double uniform(double lo, double hi) noexcept {
    return lo + (hi - lo) * uniform_open();
  }

  /// Standard exponential, mean 1.
  double exponential() noexcept;

  /// Standard normal.
  double normal() { return normal_(engine_); }

  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace shc
