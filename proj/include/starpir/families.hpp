#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "starpir/linear_code.hpp"
#include "starpir/permutation.hpp"

namespace starpir {

/// Binary Reed-Muller code RM(r, m): evaluations of polynomials of degree
/// at most r in m variables over all points of GF(2)^m.
struct RmSpec {
  unsigned r = 0;
  unsigned m = 0;

  std::size_t length() const { return std::size_t{1} << m; }
  std::size_t dimension() const;
  void validate() const;
};

/// sum_{i <= r} C(m, i)
std::size_t rm_dimension(unsigned r, unsigned m);

/// Point of GF(2)^m labelling column j: the bits of 2^m - 1 - j, with x1 the
/// most significant bit. Column 0 is the all-ones point.
std::uint32_t rm_point(std::size_t column, unsigned m);
std::size_t rm_column(std::uint32_t point, unsigned m);

/// Rows are the evaluation vectors of the monomials of degree <= r in
/// degree-lexicographic order (1, x1, ..., xm, x1x2, x1x3, ...). For
/// RM(1,4) this is exactly the 5 x 16 generator printed alongside the
/// worked RM(1,4) retrieval example.
LinearCode reed_muller(const RmSpec& spec);
inline LinearCode reed_muller(unsigned r, unsigned m) { return reed_muller(RmSpec{r, m}); }

struct GrsSpec {
  Field field;
  std::vector<Element> points;       // pairwise distinct
  std::vector<Element> multipliers;  // nonzero; empty means all ones
  std::size_t k = 1;
};

/// Row i is (v_j * a_j^i)_j for i = 0..k-1.
LinearCode grs(const GrsSpec& spec);
/// Reed-Solomon code of length n <= q on the points 0, 1, ..., n-1
/// (canonical representatives) with unit multipliers.
LinearCode reed_solomon(const Field& field, std::size_t n, std::size_t k);

LinearCode repetition(const Field& field, std::size_t n);

/// Named example codes: "C1" ([5,3,2] binary, given by parity check), "C2"
/// ([11,6,4] binary, given by parity check), "RM14-G" (the printed RM(1,4)
/// generator). Throws ValidationError for other names.
LinearCode fixture(std::string_view name);
Matrix c1_parity_check();
Matrix c2_parity_check();
Matrix rm14_printed_generator();

/// Translations v -> v + e_i, i = 1..m, as permutations of the 2^m columns.
std::vector<Permutation> translation_generators(unsigned m);
/// Translations plus a generating pair of GL(m, 2): the transvection
/// x1 <- x1 + x2 and the cyclic coordinate shift x_i <- x_{i+1}. Together
/// they generate the full affine group AGL(m, 2).
std::vector<Permutation> affine_generators(unsigned m);
/// Order of AGL(m, 2) = 2^m * prod_{i<m} (2^m - 2^i).
std::uint64_t affine_group_order(unsigned m);

}  // namespace starpir
