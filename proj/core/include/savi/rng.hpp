#pragma once

#include <cstdint>
#include <random>

namespace savi {

// SplitMix64 finalizer; used to decorrelate nearby seeds.
[[nodiscard]] std::uint64_t splitmix64(std::uint64_t x) noexcept;

// Deterministic generator for Monte Carlo replicates.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the
// standard. Variates are derived by hand (53-bit uniforms, Box-Muller
// normals) so trajectories are bit-identical across standard libraries.
// Replicate r of a run with base seed s uses Rng(s + r); independent
// substreams of one replicate are obtained with substream(k).
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }

  // A generator whose state depends only on (seed, index).
  [[nodiscard]] Rng substream(std::uint64_t index) const;

  std::uint64_t next_u64() { return engine_(); }
  // Uniform on the open interval (0, 1).
  double uniform();
  // Standard normal.
  double normal();
  // +1 or -1 with probability 1/2 each.
  double sign();

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace savi
