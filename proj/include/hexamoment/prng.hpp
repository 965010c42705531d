#ifndef HEXAMOMENT_PRNG_HPP
#define HEXAMOMENT_PRNG_HPP

#include <cstdint>

#include "hexamoment/numeric.hpp"

namespace hexamoment {

// splitmix64: counter-based generator with a fixed, platform-independent
// output sequence for a given seed.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

// Independent stream for (seed, index); draw i of a batch uses stream i.
SplitMix64 split_stream(std::uint64_t seed, std::uint64_t index);

// Uniform integer in [0, bound) via rejection from a power-of-two envelope.
// bound must be >= 1. Output depends only on the stream, never on the host.
BigInt uniform_bigint(SplitMix64& rng, const BigInt& bound);

}  // namespace hexamoment

#endif  // HEXAMOMENT_PRNG_HPP
