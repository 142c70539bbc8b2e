#pragma once

// Counter-based random numbers (Philox4x32-10). A stream is keyed by
// (seed, stream index); the draw number is the rest of the counter, so every
// sample can be regenerated independently of thread scheduling.
//
// Distributions are implemented here rather than taken from <random>, whose
// normal/gamma algorithms are implementation-defined and would break golden
// files across standard libraries.

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace singlet {

using PhiloxBlock = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

inline PhiloxBlock philox4x32_10(PhiloxBlock ctr, PhiloxKey key) {
  constexpr std::uint32_t m0 = 0xD2511F53u;
  constexpr std::uint32_t m1 = 0xCD9E8D57u;
  constexpr std::uint32_t w0 = 0x9E3779B9u;
  constexpr std::uint32_t w1 = 0xBB67AE85u;
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      key[0] += w0;
      key[1] += w1;
    }
    const std::uint64_t p0 = static_cast<std::uint64_t>(m0) * ctr[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(m1) * ctr[2];
    const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const auto lo0 = static_cast<std::uint32_t>(p0);
    const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
    const auto lo1 = static_cast<std::uint32_t>(p1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
  }
  return ctr;
}

class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream)
      : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)}, stream_(stream) {}

  std::uint64_t next_u64() {
    if (buffered_ == 0) refill();
    const std::size_t i = 4 - 2 * buffered_;
    --buffered_;
    return (static_cast<std::uint64_t>(block_[i]) << 32) | block_[i + 1];
  }

  /// [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// (0, 1)
  double uniform_open() { return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Integer in [lo, hi].
  std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi) {
    const std::uint64_t span = hi - lo + 1;
    if (span == 0) return next_u64();
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t x = next_u64();
    while (x >= limit) x = next_u64();
    return lo + x % span;
  }

  /// Standard normal via Box-Muller.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double r = std::sqrt(-2.0 * std::log(uniform_open()));
    const double theta = 2.0 * std::numbers::pi * uniform();
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
  }

  /// Unit-rate exponential.
  double exponential() { return -std::log(uniform_open()); }

  [[nodiscard]] std::uint64_t draws() const { return draw_; }

 private:
  void refill() {
    block_ = philox4x32_10({static_cast<std::uint32_t>(draw_), static_cast<std::uint32_t>(draw_ >> 32),
                            static_cast<std::uint32_t>(stream_), static_cast<std::uint32_t>(stream_ >> 32)},
                           key_);
    ++draw_;
    buffered_ = 2;
  }

  PhiloxKey key_;
  std::uint64_t stream_;
  std::uint64_t draw_ = 0;
  PhiloxBlock block_{};
  std::size_t buffered_ = 0;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Flat Dirichlet(1, ..., 1) sample of dimension N.
template <std::size_t N>
std::array<double, N> flat_dirichlet(CounterRng& rng) {
  std::array<double, N> out{};
  double total = 0.0;
  for (auto& x : out) {
    x = rng.exponential();
    total += x;
  }
  for (auto& x : out) x /= total;
  return out;
}

}  // namespace singlet
