#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace zforce {

using Seed = std::uint64_t;

/// One step of the SplitMix64 output function (Steele, Lea, Flood 2014).
std::uint64_t splitmix64(std::uint64_t x);

/// Stable 64-bit FNV-1a hash of a tag string, used to separate model streams.
std::uint64_t tag_hash(std::string_view tag);

/**
 * Seed for replica `replica` at grid point `grid_index` of an experiment.
 *
 * derived = splitmix64(splitmix64(splitmix64(master ^ tag_hash(tag)) ^ grid_index) ^ replica)
 *
 * This formula is part of the output contract: changing it changes every
 * published CSV, so it must stay fixed.
 */
Seed derive_seed(Seed master, std::string_view model_tag, std::uint64_t grid_index,
                 std::uint64_t replica);

/**
 * Deterministic random source. Wraps mt19937_64, whose output sequence is
 * fixed by the C++ standard, and draws bounded integers and doubles with
 * its own arithmetic so results do not depend on the standard library's
 * distribution implementations.
 */
class Rng {
 public:
  explicit Rng(Seed seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace zforce
