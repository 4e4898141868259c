#pragma once

#include <array>
#include <cstdint>

namespace adyne {

/// Philox-4x32 keyed counter block cipher, 10 rounds.
///
/// Counter-based generation keeps every trajectory stream a pure function of
/// (seed, trajectory, step), so ensembles are reproducible under any thread
/// count and any evaluation order.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

/// splitmix64 finalizer; used to derive independent sub-stream seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

/// Gaussian noise stream for one trajectory.
class NoiseStream {
 public:
  NoiseStream(std::uint64_t master_seed, std::int64_t trajectory_index)
      : seed_(master_seed), trajectory_(trajectory_index) {}

  /// Standard normal sample for the given step, deterministic in
  /// (master_seed, trajectory_index, step).
  double normal(std::int64_t step) const;

  /// Wiener increment with mean 0 and variance dv.
  double wiener_increment(std::int64_t step, double dv) const;

  std::uint64_t master_seed() const { return seed_; }
  std::int64_t trajectory_index() const { return trajectory_; }

 private:
  std::uint64_t seed_;
  std::int64_t trajectory_;
};

}  // namespace adyne
