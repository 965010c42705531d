#include "hexamoment/prng.hpp"

namespace hexamoment {

namespace {

std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

SplitMix64 split_stream(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64(mix(seed + 0x9e3779b97f4a7c15ULL * (index + 1)));
}

BigInt uniform_bigint(SplitMix64& rng, const BigInt& bound) {
  if (bound <= 0) throw Error("uniform_bigint: bound must be positive");
  if (bound == 1) return 0;
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  const std::size_t words = (bits + 63) / 64;
  BigInt envelope = 1;
  envelope <<= 64 * words;
  const BigInt cutoff = envelope - envelope % bound;
  for (;;) {
    BigInt r = 0;
    for (std::size_t w = 0; w < words; ++w) {
      r <<= 64;
      r += BigInt(static_cast<unsigned long>(rng.next()));
    }
    if (r < cutoff) return r % bound;
  }
}

}  // namespace hexamoment
