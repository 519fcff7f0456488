#pragma once

#include <cstddef>
#include <vector>

#include "starpir/index_set.hpp"

namespace starpir {

/// Bijection of {0..n-1}; `image[j]` is sigma(j).
class Permutation {
 public:
  /// Throws ValidationError unless `image` is a bijection.
  explicit Permutation(std::vector<std::size_t> image);
  static Permutation identity(std::size_t n);
  /// j -> j + shift (mod n)
  static Permutation cyclic_shift(std::size_t n, std::size_t shift = 1);

  std::size_t size() const { return image_.size(); }
  std::size_t operator()(std::size_t j) const { return image_[j]; }
  const std::vector<std::size_t>& image() const { return image_; }

  Permutation inverse() const;
  /// (a * b)(j) = a(b(j))
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  /// {sigma(j) : j in s}
  IndexSet apply(const IndexSet& s) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> image_;
};

}  // namespace starpir
