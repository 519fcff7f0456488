#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace starpir {

/// Sorted set of distinct 0-based coordinate indices. Text I/O is 1-based.
class IndexSet {
 public:
  IndexSet() = default;
  /// Sorts; throws ValidationError on duplicates.
  explicit IndexSet(std::vector<std::size_t> indices);
  IndexSet(std::initializer_list<std::size_t> indices)
      : IndexSet(std::vector<std::size_t>(indices)) {}

  static IndexSet from_one_based(const std::vector<std::size_t>& indices);
  /// Parses "1,2,3" (or whitespace separated) 1-based labels.
  static IndexSet parse(std::string_view text);
  /// {0, ..., n-1}
  static IndexSet range(std::size_t n);

  std::size_t size() const { return idx_.size(); }
  bool empty() const { return idx_.empty(); }
  bool contains(std::size_t j) const;
  std::size_t operator[](std::size_t i) const { return idx_[i]; }
  auto begin() const { return idx_.begin(); }
  auto end() const { return idx_.end(); }
  const std::vector<std::size_t>& indices() const { return idx_; }

  /// Throws ValidationError unless every index is below n.
  void check_within(std::size_t n) const;
  /// Bit j set for every member; requires all indices < 64.
  std::uint64_t mask() const;
  bool is_subset_of(const IndexSet& other) const;

  /// 1-based, space separated: "1 2 3".
  std::string to_string() const;

  friend auto operator<=>(const IndexSet&, const IndexSet&) = default;
  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<std::size_t> idx_;
};

/// Visits every k-subset of {0..n-1} in lexicographic order; the visitor
/// returns false to stop early. Returns false if stopped.
template <class Visitor>
bool for_each_combination(std::size_t n, std::size_t k, Visitor&& visit) {
  if (k > n) return true;
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  while (true) {
    if (!visit(static_cast<const std::vector<std::size_t>&>(c))) return false;
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return true;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

/// Exact binomial coefficient; throws BudgetExceeded on 64-bit overflow.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace starpir
