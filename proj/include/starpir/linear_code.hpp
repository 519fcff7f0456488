#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "starpir/index_set.hpp"
#include "starpir/matrix.hpp"
#include "starpir/permutation.hpp"

namespace starpir {

/// Default cap on the number of codewords an exhaustive enumeration visits.
inline constexpr std::uint64_t kDefaultCodewordBudget = std::uint64_t{1} << 24;

/// Linear [n, k] code over a finite field.
///
/// The generator keeps the rows it was built from when they are linearly
/// independent (so printed fixture matrices survive bit-for-bit); otherwise
/// it is the RREF row basis. Equality compares canonical RREF generators.
class LinearCode {
 public:
  /// Code spanned by the rows of g. Throws ValidationError for the zero code.
  static LinearCode from_generator(Matrix g);
  /// Code {c : h * c^T = 0}. Throws ValidationError if that is the zero code.
  static LinearCode from_parity_check(const Matrix& h);

  const Field& field() const { return generator_.field(); }
  std::size_t length() const { return generator_.cols(); }
  std::size_t dimension() const { return generator_.rows(); }

  const Matrix& generator() const { return generator_; }
  const Matrix& canonical_generator() const { return canonical_; }
  /// (n - k) x n basis of the dual; zero rows when k = n.
  const Matrix& parity_check() const { return parity_check_; }

  friend bool operator==(const LinearCode& a, const LinearCode& b) {
    return a.canonical_ == b.canonical_;
  }

 private:
  LinearCode(Matrix generator, Matrix canonical, Matrix parity_check)
      : generator_(std::move(generator)),
        canonical_(std::move(canonical)),
        parity_check_(std::move(parity_check)) {}

  Matrix generator_;
  Matrix canonical_;
  Matrix parity_check_;
};

/// Component-wise product of two vectors.
std::vector<Element> star(const Field& f, std::span<const Element> a, std::span<const Element> b);

LinearCode dual(const LinearCode& c);
/// Span of all c * d; generated by products of generator-row pairs.
LinearCode star_product(const LinearCode& c, const LinearCode& d);

std::vector<Element> encode(const LinearCode& c, std::span<const Element> message);
bool contains(const LinearCode& c, std::span<const Element> word);

/// Number of codewords q^k, or nullopt past 2^64.
std::optional<std::uint64_t> codeword_count(const LinearCode& c);

/// Calls `visit` once per codeword (the zero word included) in modular Gray
/// code order. Throws BudgetExceeded if q^k exceeds `budget`.
void for_each_codeword(const LinearCode& c, std::uint64_t budget,
                       const std::function<void(std::span<const Element>)>& visit);

/// Support bit mask of every codeword (zero word included, duplicates
/// possible). Requires n <= 64; binary codes take a bit-packed fast path.
void for_each_support(const LinearCode& c, std::uint64_t budget,
                      const std::function<void(std::uint64_t)>& visit);

/// Entry w counts codewords of Hamming weight w, for w = 0..n.
std::vector<std::uint64_t> weight_distribution(const LinearCode& c,
                                               std::uint64_t budget = kDefaultCodewordBudget);
std::size_t min_distance(const LinearCode& c, std::uint64_t budget = kDefaultCodewordBudget);
std::uint64_t weight_count(const LinearCode& c, std::size_t weight,
                           std::uint64_t budget = kDefaultCodewordBudget);

/// k x |t| column submatrix of the generator.
Matrix restrict(const LinearCode& c, const IndexSet& t);
/// True iff the generator columns on t are linearly independent.
bool is_independent(const LinearCode& c, const IndexSet& t);
/// |s| must equal k.
bool is_information_set(const LinearCode& c, const IndexSet& s);

/// Greedy lexicographic search: scan `candidates` left to right, keeping
/// every column independent of those already kept, starting from `seed`.
/// Returns nullopt if the seed is dependent or no k columns are reached.
std::optional<IndexSet> extend_to_information_set(const LinearCode& c, const IndexSet& seed,
                                                  std::span<const std::size_t> candidates);
std::optional<IndexSet> extend_to_information_set(const LinearCode& c, const IndexSet& seed);
/// The lexicographically greedy information set.
IndexSet information_set(const LinearCode& c);

/// Pairwise disjoint information sets built by repeated greedy search on the
/// coordinates not yet used. Throws ValidationError if fewer than `count`
/// exist along that construction.
std::vector<IndexSet> disjoint_information_sets(const LinearCode& c, std::size_t count);

/// Code {(c_sigma(1), ..., c_sigma(n)) : c in C}.
LinearCode apply_permutation(const LinearCode& c, const Permutation& sigma);
bool is_automorphism(const LinearCode& c, const Permutation& sigma);

}  // namespace starpir
