#include "starpir/index_set.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "starpir/errors.hpp"

namespace starpir {

IndexSet::IndexSet(std::vector<std::size_t> indices) : idx_(std::move(indices)) {
  std::sort(idx_.begin(), idx_.end());
  if (std::adjacent_find(idx_.begin(), idx_.end()) != idx_.end())
    throw ValidationError("index set contains duplicates");
}

IndexSet IndexSet::from_one_based(const std::vector<std::size_t>& indices) {
  std::vector<std::size_t> zero;
  zero.reserve(indices.size());
  for (auto i : indices) {
    if (i == 0) throw ValidationError("index 0 is not a valid 1-based label");
    zero.push_back(i - 1);
  }
  return IndexSet(std::move(zero));
}

IndexSet IndexSet::parse(std::string_view text) {
  std::vector<std::size_t> labels;
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::size_t>(text[i] - '0');
        ++i;
      }
      labels.push_back(v);
    } else if (ch == ',' || ch == '{' || ch == '}' || std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
    } else {
      throw ValidationError("cannot parse index set '" + std::string(text) + "'");
    }
  }
  return from_one_based(labels);
}

IndexSet IndexSet::range(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return IndexSet(std::move(v));
}

bool IndexSet::contains(std::size_t j) const { return std::binary_search(idx_.begin(), idx_.end(), j); }

void IndexSet::check_within(std::size_t n) const {
  if (!idx_.empty() && idx_.back() >= n)
    throw ValidationError("index " + std::to_string(idx_.back() + 1) + " outside [1, " +
                          std::to_string(n) + "]");
}

std::uint64_t IndexSet::mask() const {
  std::uint64_t m = 0;
  for (auto j : idx_) {
    if (j >= 64) throw ValidationError("index set mask needs indices below 64");
    m |= std::uint64_t{1} << j;
  }
  return m;
}

bool IndexSet::is_subset_of(const IndexSet& other) const {
  return std::includes(other.idx_.begin(), other.idx_.end(), idx_.begin(), idx_.end());
}

std::string IndexSet::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < idx_.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(idx_[i] + 1);
  }
  return s;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max())
      throw BudgetExceeded("binomial(" + std::to_string(n) + ", " + std::to_string(k) +
                           ") overflows 64 bits");
  }
  return static_cast<std::uint64_t>(r);
}

}  // namespace starpir
