#pragma once

#include <cstdint>
#include <random>

#include "starpir/field.hpp"

namespace starpir {

/// Seeded 64-bit generator. `split` derives independent child streams so
/// that, for example, database contents and query randomness can be drawn
/// from one user seed without overlapping.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t next() { return engine_(); }
  /// Uniform on [0, bound) by rejection; bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  Element element(const Field& f) { return static_cast<Element>(below(f.order())); }
  SeededRng split(std::uint64_t stream) const;

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace starpir
