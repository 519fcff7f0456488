#include "starpir/permutation.hpp"

#include "starpir/errors.hpp"

namespace starpir {

Permutation::Permutation(std::vector<std::size_t> image) : image_(std::move(image)) {
  std::vector<bool> hit(image_.size(), false);
  for (auto v : image_) {
    if (v >= image_.size() || hit[v]) throw ValidationError("permutation is not a bijection");
    hit[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) { return cyclic_shift(n, 0); }

Permutation Permutation::cyclic_shift(std::size_t n, std::size_t shift) {
  std::vector<std::size_t> image(n);
  for (std::size_t j = 0; j < n; ++j) image[j] = (j + shift) % n;
  return Permutation(std::move(image));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(image_.size());
  for (std::size_t j = 0; j < image_.size(); ++j) inv[image_[j]] = j;
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw ValidationError("composing permutations of different degree");
  std::vector<std::size_t> image(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) image[j] = a(b(j));
  return Permutation(std::move(image));
}

IndexSet Permutation::apply(const IndexSet& s) const {
  s.check_within(size());
  std::vector<std::size_t> out;
  out.reserve(s.size());
  for (auto j : s) out.push_back(image_[j]);
  return IndexSet(std::move(out));
}

}  // namespace starpir
