#include "adyne/noise.hpp"

#include <cmath>

namespace adyne {

namespace {
constexpr std::uint32_t kMult0 = 0xD2511F53u;
constexpr std::uint32_t kMult1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;
}  // namespace

std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key) {
  for (int round = 0; round < 10; ++round) {
    const std::uint64_t p0 = static_cast<std::uint64_t>(kMult0) * counter[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(kMult1) * counter[2];
    counter = {static_cast<std::uint32_t>(p1 >> 32) ^ counter[1] ^ key[0],
               static_cast<std::uint32_t>(p1),
               static_cast<std::uint32_t>(p0 >> 32) ^ counter[3] ^ key[1],
               static_cast<std::uint32_t>(p0)};
    key[0] += kWeyl0;
    key[1] += kWeyl1;
  }
  return counter;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (salt + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

double NoiseStream::normal(std::int64_t step) const {
  // One Philox block yields a Box-Muller pair; adjacent steps share a block
  // and take the two independent branches.
  const std::uint64_t block = static_cast<std::uint64_t>(step) >> 1;
  const auto r = philox4x32({static_cast<std::uint32_t>(block),
                             static_cast<std::uint32_t>(block >> 32),
                             static_cast<std::uint32_t>(trajectory_),
                             static_cast<std::uint32_t>(static_cast<std::uint64_t>(trajectory_) >> 32)},
                            {static_cast<std::uint32_t>(seed_),
                             static_cast<std::uint32_t>(seed_ >> 32)});
  const std::uint64_t hi = (static_cast<std::uint64_t>(r[0]) << 32) | r[1];
  const std::uint64_t lo = (static_cast<std::uint64_t>(r[2]) << 32) | r[3];
  const double u1 = static_cast<double>((hi >> 11) + 1) * 0x1.0p-53;  // (0, 1]
  const double u2 = static_cast<double>(lo >> 11) * 0x1.0p-53;        // [0, 1)
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 6.28318530717958647692 * u2;
  return (step & 1) ? radius * std::sin(angle) : radius * std::cos(angle);
}

double NoiseStream::wiener_increment(std::int64_t step, double dv) const {
  return normal(step) * std::sqrt(dv);
}

}  // namespace adyne
