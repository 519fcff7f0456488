#include "starpir/random.hpp"

#include "starpir/errors.hpp"

namespace starpir {

std::uint64_t SeededRng::below(std::uint64_t bound) {
  if (bound == 0) throw ValidationError("random bound must be positive");
  // Largest multiple of bound representable; draws at or above it are
  // rejected so every residue is equally likely.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

SeededRng SeededRng::split(std::uint64_t stream) const {
  // splitmix64 finaliser over (seed, stream)
  std::uint64_t z = seed_ + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return SeededRng(z ^ (z >> 31));
}

}  // namespace starpir
