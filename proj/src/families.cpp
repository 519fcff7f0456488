#include "starpir/families.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "starpir/errors.hpp"

namespace starpir {

std::size_t rm_dimension(unsigned r, unsigned m) {
  std::size_t k = 0;
  for (unsigned i = 0; i <= r && i <= m; ++i) k += binomial(m, i);
  return k;
}

std::size_t RmSpec::dimension() const { return rm_dimension(r, m); }

void RmSpec::validate() const {
  if (m > 16) throw ValidationError("RM(r,m) needs m <= 16");
  if (r > m) throw ValidationError("RM(r,m) needs r <= m");
}

std::uint32_t rm_point(std::size_t column, unsigned m) {
  return static_cast<std::uint32_t>((std::size_t{1} << m) - 1 - column);
}

std::size_t rm_column(std::uint32_t point, unsigned m) {
  return (std::size_t{1} << m) - 1 - point;
}

LinearCode reed_muller(const RmSpec& spec) {
  spec.validate();
  const Field gf2 = Field::prime(2);
  const unsigned m = spec.m;
  const std::size_t n = spec.length();
  Matrix g(gf2, spec.dimension(), n);
  std::size_t row = 0;
  for (unsigned degree = 0; degree <= spec.r; ++degree) {
    for_each_combination(m, degree, [&](const std::vector<std::size_t>& vars) {
      // Variable x_{v+1} is bit m-1-v of the point.
      std::uint32_t mask = 0;
      for (auto v : vars) mask |= 1u << (m - 1 - v);
      for (std::size_t j = 0; j < n; ++j) g(row, j) = (rm_point(j, m) & mask) == mask ? 1 : 0;
      ++row;
      return true;
    });
  }
  return LinearCode::from_generator(std::move(g));
}

LinearCode grs(const GrsSpec& spec) {
  const Field& f = spec.field;
  const std::size_t n = spec.points.size();
  if (spec.k == 0 || spec.k > n) throw ValidationError("GRS code needs 1 <= k <= n");
  if (n > f.order()) throw ValidationError("GRS code needs n <= q");
  std::set<Element> seen;
  for (Element a : spec.points) {
    if (!f.contains(a)) throw ValidationError("GRS evaluation point outside the field");
    if (!seen.insert(a).second) throw ValidationError("GRS evaluation points must be distinct");
  }
  std::vector<Element> v = spec.multipliers;
  if (v.empty()) v.assign(n, 1);
  if (v.size() != n) throw ValidationError("GRS multiplier count differs from point count");
  for (Element x : v)
    if (x == 0 || !f.contains(x)) throw ValidationError("GRS multipliers must be nonzero field elements");

  Matrix g(f, spec.k, n);
  for (std::size_t i = 0; i < spec.k; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = f.mul(v[j], f.pow(spec.points[j], i));
  return LinearCode::from_generator(std::move(g));
}

LinearCode reed_solomon(const Field& field, std::size_t n, std::size_t k) {
  if (n > field.order()) throw ValidationError("Reed-Solomon length exceeds field order");
  std::vector<Element> points(n);
  for (std::size_t j = 0; j < n; ++j) points[j] = static_cast<Element>(j);
  return grs(GrsSpec{field, std::move(points), {}, k});
}

LinearCode repetition(const Field& field, std::size_t n) {
  if (n == 0) throw ValidationError("repetition code needs n >= 1");
  return LinearCode::from_generator(Matrix(field, 1, n, std::vector<Element>(n, 1)));
}

Matrix c1_parity_check() {
  return Matrix::from_rows(Field::prime(2), {
                                                {1, 1, 0, 1, 0},
                                                {0, 1, 1, 0, 1},
                                            });
}

Matrix c2_parity_check() {
  return Matrix::from_rows(Field::prime(2), {
                                                {1, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0},
                                                {0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1},
                                                {0, 0, 1, 0, 0, 0, 1, 1, 0, 1, 1},
                                                {0, 0, 0, 1, 0, 0, 1, 0, 1, 1, 0},
                                                {0, 0, 0, 0, 1, 1, 0, 1, 1, 1, 1},
                                            });
}

Matrix rm14_printed_generator() {
  return Matrix::from_rows(Field::prime(2), {
                                                {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
                                                {1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0},
                                                {1, 1, 1, 1, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0},
                                                {1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0},
                                                {1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0},
                                            });
}

LinearCode fixture(std::string_view name) {
  if (name == "C1") return LinearCode::from_parity_check(c1_parity_check());
  if (name == "C2") return LinearCode::from_parity_check(c2_parity_check());
  if (name == "RM14-G") return LinearCode::from_generator(rm14_printed_generator());
  throw ValidationError("unknown fixture '" + std::string(name) + "' (known: C1, C2, RM14-G)");
}

namespace {

template <class PointMap>
Permutation point_permutation(unsigned m, PointMap&& map) {
  const std::size_t n = std::size_t{1} << m;
  std::vector<std::size_t> image(n);
  for (std::size_t j = 0; j < n; ++j) image[j] = rm_column(map(rm_point(j, m)), m);
  return Permutation(std::move(image));
}

}  // namespace

std::vector<Permutation> translation_generators(unsigned m) {
  std::vector<Permutation> gens;
  for (unsigned i = 0; i < m; ++i) {
    const std::uint32_t e = 1u << (m - 1 - i);
    gens.push_back(point_permutation(m, [e](std::uint32_t p) { return p ^ e; }));
  }
  return gens;
}

std::vector<Permutation> affine_generators(unsigned m) {
  auto gens = translation_generators(m);
  if (m < 2) return gens;
  const std::uint32_t full = (1u << m) - 1;
  gens.push_back(point_permutation(m, [m](std::uint32_t p) {
    const std::uint32_t x2 = (p >> (m - 2)) & 1u;
    return p ^ (x2 << (m - 1));
  }));
  gens.push_back(point_permutation(m, [m, full](std::uint32_t p) {
    return ((p << 1) | (p >> (m - 1))) & full;
  }));
  return gens;
}

std::uint64_t affine_group_order(unsigned m) {
  std::uint64_t order = std::uint64_t{1} << m;
  for (unsigned i = 0; i < m; ++i) order *= (std::uint64_t{1} << m) - (std::uint64_t{1} << i);
  return order;
}

}  // namespace starpir
