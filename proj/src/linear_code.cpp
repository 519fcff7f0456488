#include "starpir/linear_code.hpp"

#include <bit>
#include <limits>

#include "starpir/errors.hpp"

namespace starpir {

LinearCode LinearCode::from_generator(Matrix g) {
  const Echelon e = rref(g);
  if (e.rank() == 0) throw ValidationError("generator spans the zero code");
  Matrix canonical = row_basis(g);
  Matrix parity = right_kernel(canonical);
  if (e.rank() == g.rows()) return LinearCode(std::move(g), std::move(canonical), std::move(parity));
  Matrix basis = canonical;
  return LinearCode(std::move(basis), std::move(canonical), std::move(parity));
}

LinearCode LinearCode::from_parity_check(const Matrix& h) {
  Matrix g = right_kernel(h);
  if (g.rows() == 0) throw ValidationError("parity-check matrix defines the zero code");
  return from_generator(std::move(g));
}

std::vector<Element> star(const Field& f, std::span<const Element> a, std::span<const Element> b) {
  if (a.size() != b.size()) throw ValidationError("star product of vectors of different length");
  std::vector<Element> out(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) out[j] = f.mul(a[j], b[j]);
  return out;
}

LinearCode dual(const LinearCode& c) {
  if (c.parity_check().rows() == 0)
    throw ValidationError("dual of the full space is the zero code");
  return LinearCode::from_generator(c.parity_check());
}

LinearCode star_product(const LinearCode& c, const LinearCode& d) {
  if (!(c.field() == d.field())) throw ValidationError("star product: field mismatch");
  if (c.length() != d.length()) throw ValidationError("star product: length mismatch");
  const Matrix& gc = c.generator();
  const Matrix& gd = d.generator();
  std::vector<Element> rows;
  rows.reserve(gc.rows() * gd.rows() * c.length());
  for (std::size_t i = 0; i < gc.rows(); ++i)
    for (std::size_t j = 0; j < gd.rows(); ++j) {
      auto p = star(c.field(), gc.row(i), gd.row(j));
      rows.insert(rows.end(), p.begin(), p.end());
    }
  return LinearCode::from_generator(
      Matrix(c.field(), gc.rows() * gd.rows(), c.length(), std::move(rows)));
}

std::vector<Element> encode(const LinearCode& c, std::span<const Element> message) {
  return multiply(message, c.generator());
}

bool contains(const LinearCode& c, std::span<const Element> word) {
  if (word.size() != c.length()) return false;
  const Matrix& h = c.parity_check();
  const Field& f = c.field();
  for (std::size_t i = 0; i < h.rows(); ++i) {
    Element s = 0;
    for (std::size_t j = 0; j < word.size(); ++j) s = f.fma(s, h(i, j), word[j]);
    if (s != 0) return false;
  }
  return true;
}

std::optional<std::uint64_t> codeword_count(const LinearCode& c) {
  std::uint64_t total = 1;
  const std::uint64_t q = c.field().order();
  for (std::size_t i = 0; i < c.dimension(); ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() / q) return std::nullopt;
    total *= q;
  }
  return total;
}

namespace {

void check_budget(const LinearCode& c, std::uint64_t budget) {
  const auto count = codeword_count(c);
  if (!count || *count > budget)
    throw BudgetExceeded("enumerating " + c.field().name() + "^" + std::to_string(c.dimension()) +
                         " codewords exceeds budget " + std::to_string(budget));
}

/// Drives the modular Gray code: each step adds one generator row, chosen as
/// the count of trailing zero base-q digits of the step number.
template <class Step>
void gray_walk(std::size_t k, std::uint32_t q, Step&& step) {
  std::vector<std::uint32_t> digits(k, 0);
  while (true) {
    std::size_t pos = 0;
    while (pos < k && ++digits[pos] == q) {
      digits[pos] = 0;
      ++pos;
    }
    if (pos == k) return;
    step(pos);
  }
}

bool binary_packable(const LinearCode& c) {
  return c.field().order() == 2;
}

std::vector<std::vector<std::uint64_t>> pack_rows(const Matrix& g) {
  const std::size_t words = (g.cols() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows(g.rows(), std::vector<std::uint64_t>(words, 0));
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j)
      if (g(i, j)) rows[i][j / 64] |= std::uint64_t{1} << (j % 64);
  return rows;
}

}  // namespace

void for_each_codeword(const LinearCode& c, std::uint64_t budget,
                       const std::function<void(std::span<const Element>)>& visit) {
  check_budget(c, budget);
  const Field& f = c.field();
  const Matrix& g = c.generator();
  std::vector<Element> word(c.length(), 0);
  // Coefficient of each row steps through 0, 1, ..., q-1 and wraps; the
  // word moves by (new - old) times that row.
  std::vector<Element> coef(c.dimension(), 0);
  visit(word);
  gray_walk(c.dimension(), f.order(), [&](std::size_t row) {
    const Element next = coef[row] + 1 == f.order() ? 0 : coef[row] + 1;
    const Element delta = f.sub(next, coef[row]);
    coef[row] = next;
    auto r = g.row(row);
    for (std::size_t j = 0; j < word.size(); ++j) word[j] = f.fma(word[j], delta, r[j]);
    visit(word);
  });
}

void for_each_support(const LinearCode& c, std::uint64_t budget,
                      const std::function<void(std::uint64_t)>& visit) {
  if (c.length() > 64) throw ValidationError("support masks need length at most 64");
  if (binary_packable(c)) {
    check_budget(c, budget);
    const auto rows = pack_rows(c.generator());
    std::uint64_t word = 0;
    visit(word);
    gray_walk(c.dimension(), 2, [&](std::size_t row) {
      word ^= rows[row][0];
      visit(word);
    });
    return;
  }
  for_each_codeword(c, budget, [&](std::span<const Element> w) {
    std::uint64_t m = 0;
    for (std::size_t j = 0; j < w.size(); ++j)
      if (w[j]) m |= std::uint64_t{1} << j;
    visit(m);
  });
}

std::vector<std::uint64_t> weight_distribution(const LinearCode& c, std::uint64_t budget) {
  std::vector<std::uint64_t> dist(c.length() + 1, 0);
  if (binary_packable(c)) {
    check_budget(c, budget);
    const auto rows = pack_rows(c.generator());
    std::vector<std::uint64_t> word(rows.empty() ? 0 : rows[0].size(), 0);
    ++dist[0];
    gray_walk(c.dimension(), 2, [&](std::size_t row) {
      std::size_t w = 0;
      for (std::size_t i = 0; i < word.size(); ++i) {
        word[i] ^= rows[row][i];
        w += static_cast<std::size_t>(std::popcount(word[i]));
      }
      ++dist[w];
    });
    return dist;
  }
  for_each_codeword(c, budget, [&](std::span<const Element> w) {
    std::size_t weight = 0;
    for (Element e : w) weight += e != 0;
    ++dist[weight];
  });
  return dist;
}

std::size_t min_distance(const LinearCode& c, std::uint64_t budget) {
  const auto dist = weight_distribution(c, budget);
  for (std::size_t w = 1; w < dist.size(); ++w)
    if (dist[w]) return w;
  throw ValidationError("code has no nonzero codeword");
}

std::uint64_t weight_count(const LinearCode& c, std::size_t weight, std::uint64_t budget) {
  if (weight > c.length()) return 0;
  return weight_distribution(c, budget)[weight];
}

Matrix restrict(const LinearCode& c, const IndexSet& t) {
  t.check_within(c.length());
  return select_columns(c.generator(), t.indices());
}

bool is_independent(const LinearCode& c, const IndexSet& t) {
  if (t.size() > c.dimension()) return false;
  return rank(restrict(c, t)) == t.size();
}

bool is_information_set(const LinearCode& c, const IndexSet& s) {
  if (s.size() != c.dimension())
    throw ValidationError("information set candidate has size " + std::to_string(s.size()) +
                          ", code dimension is " + std::to_string(c.dimension()));
  return is_independent(c, s);
}

std::optional<IndexSet> extend_to_information_set(const LinearCode& c, const IndexSet& seed,
                                                  std::span<const std::size_t> candidates) {
  if (!is_independent(c, seed)) return std::nullopt;
  std::vector<std::size_t> chosen = seed.indices();
  for (std::size_t j : candidates) {
    if (chosen.size() == c.dimension()) break;
    if (j >= c.length()) throw ValidationError("candidate column out of range");
    if (seed.contains(j)) continue;
    chosen.push_back(j);
    if (rank(select_columns(c.generator(), chosen)) < chosen.size()) chosen.pop_back();
  }
  if (chosen.size() < c.dimension()) return std::nullopt;
  return IndexSet(std::move(chosen));
}

std::optional<IndexSet> extend_to_information_set(const LinearCode& c, const IndexSet& seed) {
  const IndexSet all = IndexSet::range(c.length());
  return extend_to_information_set(c, seed, all.indices());
}

IndexSet information_set(const LinearCode& c) {
  // The pivots of the RREF are exactly the greedy left-to-right choice.
  return IndexSet(rref(c.generator()).pivots);
}

std::vector<IndexSet> disjoint_information_sets(const LinearCode& c, std::size_t count) {
  std::vector<IndexSet> sets;
  std::vector<bool> used(c.length(), false);
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < c.length(); ++j)
      if (!used[j]) free.push_back(j);
    auto s = extend_to_information_set(c, IndexSet{}, free);
    if (!s)
      throw ValidationError("only " + std::to_string(i) + " disjoint information sets found, " +
                            std::to_string(count) + " requested");
    for (auto j : *s) used[j] = true;
    sets.push_back(std::move(*s));
  }
  return sets;
}

LinearCode apply_permutation(const LinearCode& c, const Permutation& sigma) {
  if (sigma.size() != c.length()) throw ValidationError("permutation degree differs from code length");
  return LinearCode::from_generator(select_columns(c.generator(), sigma.image()));
}

bool is_automorphism(const LinearCode& c, const Permutation& sigma) {
  return apply_permutation(c, sigma) == c;
}

}  // namespace starpir
