#pragma once

// Deterministic random streams for the Monte Carlo simulator.
//
// SplitMix64 with per-stream state derivation: stream k of master seed s
// starts from state mix64(mix64(s + GAMMA) + k * GAMMA) -- the k-th output
// of an outer SplitMix64 sequence seeded by s. The outer mix places stream
// origins pseudorandomly in the state space, so distinct (seed, trial)
// streams do not overlap in practice and a pair always yields the same draws
// no matter how trials are distributed over workers.

#include <cmath>
#include <cstdint>
#include <limits>

namespace fddi {

class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t state) : state_(state) {}

  static constexpr uint64_t kGamma = 0x9E3779B97F4A7C15ull;

  static uint64_t mix64(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  uint64_t next() {
    state_ += kGamma;
    return mix64(state_);
  }

  // uniform in (0, 1]
  double next_unit() {
    return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53;
  }

  // substream for (seed, stream_id); see header comment
  static SplitMix64 stream(uint64_t seed, uint64_t stream_id) {
    return SplitMix64(mix64(mix64(seed + kGamma) + stream_id * kGamma));
  }

 private:
  uint64_t state_;
};

// Geometric skip sampler for Bernoulli(p) sequences: returns the number of
// failures before the next success, so positions hit are cursor + skip.
class GeometricSkips {
 public:
  explicit GeometricSkips(double p) : p_(p), inv_log_q_(0) {
    if (p_ > 0 && p_ < 1) inv_log_q_ = 1.0 / std::log1p(-p_);
  }

  bool never() const { return p_ <= 0; }

  uint64_t next_skip(SplitMix64& rng) const {
    if (p_ >= 1) return 0;
    double u = rng.next_unit();
    double skip = std::floor(std::log(u) * inv_log_q_);
    if (skip >= 1e18) return static_cast<uint64_t>(1e18);
    return static_cast<uint64_t>(skip);
  }

 private:
  double p_;
  double inv_log_q_;
};

}  // namespace fddi
