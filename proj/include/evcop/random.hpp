#pragma once

#include <cstdint>
#include <random>

namespace evcop {

/// Bit-exact random stream: std::mt19937_64 (fully specified by the standard)
/// with the top 53 bits of each draw mapped to a double. The mapping is done
/// here rather than through std::uniform_real_distribution, whose output is
/// implementation-defined.
class Rng
{
public:
  explicit Rng(std::uint64_t seed)
    : engine_(seed)
  {}

  /// [0, 1)
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// (0, 1)
  double uniform_open() { return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53; }
  std::uint64_t next() { return engine_(); }

private:
  std::mt19937_64 engine_;
};

/// splitmix64 finalizer; used to derive independent per-task seeds.
constexpr std::uint64_t mix_seed(std::uint64_t x)
{
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index)
{
  return mix_seed(seed ^ mix_seed(index + 1));
}

} // namespace evcop
