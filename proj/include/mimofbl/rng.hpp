#pragma once

#include <cstdint>
#include <utility>

namespace mimofbl {

// Counter-based generator (Philox 4x32-10). State is a value: copying
// it forks the draw sequence, and identical (seed, stream) always
// reproduces identical draws. Monte Carlo code gives every trial its
// own stream (stream = trial index), which makes results independent
// of how trials are distributed over workers.
struct RngState {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;

  RngState() = default;
  RngState(std::uint64_t seed_, std::uint64_t stream_)
      : seed(seed_), stream(stream_) {}

  std::uint32_t next_u32();
  std::uint64_t next_u64();

  // Uniform on (0, 1]; never 0, so it is safe under log().
  double next_unit();

  // One Box-Muller pair of independent N(0,1) draws. Consumes exactly
  // one Philox block (two 64-bit uniforms), keeping the draw/counter
  // alignment easy to reason about.
  std::pair<double, double> next_normal_pair();

 private:
  std::uint64_t counter_ = 0;
  std::uint32_t block_[4] = {0, 0, 0, 0};
  int block_pos_ = 4;  // 4 = exhausted, refill on next draw

  void refill();
};

// Deterministic 64-bit mix (splitmix64 finalizer), used to derive
// independent sub-seeds for sweep points and fixtures.
std::uint64_t mix64(std::uint64_t x);

}  // namespace mimofbl
