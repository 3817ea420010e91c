#pragma once

#include <cstdint>

namespace curvelim {

// Deterministic splittable RNG (SplitMix64 core).  Every randomized routine
// takes an explicit seed or an Rng&, so identical inputs give identical
// outputs across runs and platforms.  split() derives an independent child
// stream; the parent advances so successive splits are distinct.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform value in [0, bound); bound > 0.
  uint64_t next_below(uint64_t bound) {
    // Rejection sampling to avoid modulo bias.
    uint64_t limit = bound * (UINT64_MAX / bound);
    uint64_t v = next_u64();
    while (v >= limit) v = next_u64();
    return v % bound;
  }

  // Uniform value in the inclusive range [lo, hi].
  int64_t next_range(int64_t lo, int64_t hi) {
    return lo + static_cast<int64_t>(next_below(static_cast<uint64_t>(hi - lo + 1)));
  }

  bool next_bool() { return (next_u64() & 1) != 0; }

  Rng split() { return Rng(next_u64() ^ 0xD1B54A32D192ED03ull); }

  // Deterministic child stream for a labelled subtask (trial index, worker
  // id, ...) that does not advance the parent.
  Rng child(uint64_t label) const {
    Rng c(state_ ^ (0xA0761D6478BD642Full * (label + 1)));
    c.next_u64();
    return c;
  }

 private:
  uint64_t state_;
};

}  // namespace curvelim
