#pragma once

#include <cstdint>

namespace subalg {

// Deterministic splittable generator (splitmix64 core). The standard engines
// would do, but std::uniform_int_distribution is implementation-defined and
// reports must be byte-identical across platforms, so the bounded draw is
// pinned here too.
class Rng {
public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t next_u64();

  // uniform over [lo, hi], both ends included
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  // uniform over [0, bound); bound must be positive
  std::uint64_t uniform_index(std::uint64_t bound);

  // independent stream determined by (seed, index) alone; the parent's
  // position does not matter
  Rng split(std::uint64_t index) const;

private:
  std::uint64_t seed_;
  std::uint64_t state_;
};

}  // namespace subalg
