#include "starpir/linear_code.hpp"

#include <gtest/gtest.h>

#include "starpir/errors.hpp"
#include "starpir/families.hpp"
#include "test_util.hpp"

namespace starpir {
namespace {

using testing::random_matrix;

const Field kGf2 = Field::prime(2);
const Field kGf11 = Field::prime(11);

// Weight distribution by direct evaluation of every message times G.
std::vector<std::uint64_t> naive_weight_distribution(const LinearCode& c) {
  const Field& f = c.field();
  const Matrix& g = c.generator();
  std::vector<std::uint64_t> dist(c.length() + 1, 0);
  std::vector<Element> msg(c.dimension(), 0);
  while (true) {
    std::size_t w = 0;
    for (std::size_t j = 0; j < c.length(); ++j) {
      Element s = 0;
      for (std::size_t i = 0; i < msg.size(); ++i) s = f.add(s, f.mul(msg[i], g(i, j)));
      w += s != 0;
    }
    ++dist[w];
    std::size_t i = 0;
    while (i < msg.size() && ++msg[i] == f.order()) msg[i++] = 0;
    if (i == msg.size()) break;
  }
  return dist;
}

LinearCode even_weight(std::size_t n) {
  return LinearCode::from_parity_check(Matrix(kGf2, 1, n, std::vector<Element>(n, 1)));
}

TEST(LinearCodeTest, FromGenerator) {
  const LinearCode rep = LinearCode::from_generator(Matrix(kGf2, 1, 16, std::vector<Element>(16, 1)));
  EXPECT_EQ(rep.length(), 16u);
  EXPECT_EQ(rep.dimension(), 1u);
  EXPECT_EQ(rep, repetition(kGf2, 16));

  const LinearCode rm = LinearCode::from_generator(rm14_printed_generator());
  EXPECT_EQ(rm.dimension(), 5u);
  EXPECT_EQ(rm.generator(), rm14_printed_generator());

  const LinearCode doubled = LinearCode::from_generator(vstack(rm.generator(), rm.generator()));
  EXPECT_EQ(doubled, rm);
  EXPECT_EQ(doubled.dimension(), 5u);

  EXPECT_THROW(LinearCode::from_generator(Matrix(kGf2, 2, 4)), ValidationError);
}

TEST(LinearCodeTest, FromParityCheck) {
  const LinearCode c1 = LinearCode::from_parity_check(c1_parity_check());
  EXPECT_EQ(c1.length(), 5u);
  EXPECT_EQ(c1.dimension(), 3u);
  EXPECT_EQ(min_distance(c1), 2u);

  const LinearCode c2 = LinearCode::from_parity_check(c2_parity_check());
  EXPECT_EQ(c2.length(), 11u);
  EXPECT_EQ(c2.dimension(), 6u);
  EXPECT_EQ(min_distance(c2), 4u);

  EXPECT_EQ(even_weight(9).dimension(), 8u);
  EXPECT_THROW(LinearCode::from_parity_check(Matrix::identity(kGf2, 4)), ValidationError);
}

TEST(LinearCodeTest, GeneratorAndParityCheckAreOrthogonal) {
  for (const char* name : {"C1", "C2", "RM14-G"}) {
    const LinearCode c = fixture(name);
    EXPECT_EQ(rank(c.generator()), c.dimension());
    EXPECT_EQ(rank(c.parity_check()), c.length() - c.dimension());
    EXPECT_EQ(c.generator() * transpose(c.parity_check()),
              Matrix(kGf2, c.dimension(), c.length() - c.dimension()));
  }
}

TEST(LinearCodeTest, Dual) {
  EXPECT_EQ(dual(repetition(kGf2, 7)), even_weight(7));
  EXPECT_EQ(dual(fixture("C1")).dimension(), 2u);
  EXPECT_EQ(dual(fixture("C1")), LinearCode::from_generator(c1_parity_check()));
  EXPECT_THROW(dual(LinearCode::from_generator(Matrix::identity(kGf2, 3))), ValidationError);
}

TEST(LinearCodeTest, DualIsInvolution) {
  std::mt19937_64 rng(5);
  for (const Field& f : {kGf2, kGf11}) {
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t n = 3 + rng() % 6;
      const std::size_t k = 1 + rng() % (n - 1);
      const Matrix g = random_matrix(f, k, n, rng);
      if (rank(g) == 0 || rank(g) == n) continue;
      const LinearCode c = LinearCode::from_generator(g);
      EXPECT_EQ(dual(dual(c)), c);
      EXPECT_EQ(dual(c).dimension(), n - c.dimension());
    }
  }
}

TEST(LinearCodeTest, StarProduct) {
  const auto v = star(kGf2, std::vector<Element>{1, 0, 1}, std::vector<Element>{1, 1, 0});
  EXPECT_EQ(v, (std::vector<Element>{1, 0, 0}));

  const LinearCode c2 = fixture("C2");
  EXPECT_EQ(star_product(repetition(kGf2, 11), c2), c2);
  EXPECT_EQ(star_product(c2, repetition(kGf2, 11)), c2);

  EXPECT_THROW(star_product(c2, repetition(kGf2, 10)), ValidationError);
  EXPECT_THROW(star_product(c2, repetition(kGf11, 11)), ValidationError);
}

TEST(LinearCodeTest, StarProductCommutativeAndMonotone) {
  std::mt19937_64 rng(9);
  for (const Field& f : {kGf2, kGf11}) {
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t n = 4 + rng() % 5;
      // Both codes contain the all-ones word.
      Matrix gc = vstack(Matrix(f, 1, n, std::vector<Element>(n, 1)), random_matrix(f, 1 + rng() % 2, n, rng));
      Matrix gd = vstack(Matrix(f, 1, n, std::vector<Element>(n, 1)), random_matrix(f, 1 + rng() % 2, n, rng));
      const LinearCode c = LinearCode::from_generator(gc);
      const LinearCode d = LinearCode::from_generator(gd);
      const LinearCode cd = star_product(c, d);
      EXPECT_EQ(cd, star_product(d, c));
      EXPECT_GE(cd.dimension(), std::max(c.dimension(), d.dimension()));
      for (std::size_t i = 0; i < c.dimension(); ++i) EXPECT_TRUE(contains(cd, c.generator().row(i)));
    }
  }
}

TEST(LinearCodeTest, MinDistanceAndWeights) {
  EXPECT_EQ(min_distance(repetition(kGf2, 9)), 9u);
  EXPECT_EQ(min_distance(repetition(kGf11, 5)), 5u);
  EXPECT_EQ(weight_count(repetition(kGf11, 5), 5), 10u);
  EXPECT_EQ(weight_count(repetition(kGf2, 16), 16), 1u);

  const LinearCode rm13 = reed_muller(1, 3);
  EXPECT_EQ(naive_weight_distribution(rm13)[4], 14u);
  EXPECT_EQ(weight_count(rm13, 4), 14u);

  EXPECT_THROW(min_distance(reed_muller(2, 5), 1000), BudgetExceeded);
}

TEST(LinearCodeTest, WeightDistributionMatchesNaiveOracle) {
  std::mt19937_64 rng(21);
  for (const Field& f : {kGf2, Field::prime(3), Field::binary(2), kGf11}) {
    for (int trial = 0; trial < 10; ++trial) {
      const std::size_t n = 3 + rng() % 8;
      const std::size_t k = 1 + rng() % std::min<std::size_t>(n, f.order() > 4 ? 3 : 5);
      const Matrix g = random_matrix(f, k, n, rng);
      if (rank(g) == 0) continue;
      const LinearCode c = LinearCode::from_generator(g);
      EXPECT_EQ(weight_distribution(c), naive_weight_distribution(c)) << f.name();
    }
  }
  // Binary codes longer than one machine word.
  const LinearCode rep = repetition(kGf2, 100);
  EXPECT_EQ(weight_distribution(rep)[100], 1u);
  const LinearCode rm = reed_muller(1, 7);
  const auto dist = weight_distribution(rm);
  EXPECT_EQ(dist[64], 254u);
  EXPECT_EQ(dist[128], 1u);
}

TEST(LinearCodeTest, InformationSets) {
  const LinearCode c1 = fixture("C1");
  EXPECT_TRUE(is_information_set(c1, IndexSet{0, 1, 2}));
  EXPECT_THROW(is_information_set(c1, IndexSet{0, 1}), ValidationError);

  const LinearCode rs = reed_solomon(kGf11, 7, 3);
  for_each_combination(7, 3, [&](const std::vector<std::size_t>& s) {
    EXPECT_TRUE(is_information_set(rs, IndexSet(s)));
    return true;
  });

  // Columns 1 and 2 equal.
  const LinearCode dup = LinearCode::from_generator(
      Matrix::from_rows(kGf2, {{1, 1, 0, 1}, {0, 0, 1, 1}}));
  EXPECT_FALSE(is_information_set(dup, IndexSet{0, 1}));
  EXPECT_EQ(information_set(dup), (IndexSet{0, 2}));
}

TEST(LinearCodeTest, ExtendToInformationSet) {
  const LinearCode c2 = fixture("C2");
  const auto s = extend_to_information_set(c2, IndexSet{9});
  ASSERT_TRUE(s.has_value());
  EXPECT_TRUE(s->contains(9));
  EXPECT_TRUE(is_information_set(c2, *s));
  const LinearCode rep = repetition(kGf2, 5);
  EXPECT_FALSE(extend_to_information_set(rep, IndexSet{0, 1}).has_value());
}

TEST(LinearCodeTest, DisjointInformationSets) {
  const auto singletons = disjoint_information_sets(repetition(kGf2, 6), 6);
  ASSERT_EQ(singletons.size(), 6u);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(singletons[i], (IndexSet{i}));

  EXPECT_EQ(disjoint_information_sets(repetition(kGf2, 16), 7).size(), 7u);
  EXPECT_EQ(disjoint_information_sets(reed_muller(1, 4), 1).size(), 1u);

  const auto two = disjoint_information_sets(reed_muller(1, 4), 2);
  ASSERT_EQ(two.size(), 2u);
  for (auto j : two[0]) EXPECT_FALSE(two[1].contains(j));

  EXPECT_THROW(disjoint_information_sets(fixture("C1"), 2), ValidationError);
}

TEST(LinearCodeTest, Restrict) {
  const LinearCode rm14 = reed_muller(1, 4);
  EXPECT_EQ(restrict(rm14, IndexSet::range(16)), rm14.generator());
  EXPECT_THROW(restrict(rm14, IndexSet{16}), ValidationError);

  for_each_combination(16, 3, [&](const std::vector<std::size_t>& t) {
    EXPECT_EQ(rank(restrict(rm14, IndexSet(t))), 3u);
    return true;
  });

  // Find a weight-4 codeword of RM(2,4) by enumeration; RM(1,4) is rank
  // deficient on its support.
  std::uint64_t support = 0;
  for_each_support(reed_muller(2, 4), kDefaultCodewordBudget, [&](std::uint64_t m) {
    if (support == 0 && std::popcount(m) == 4) support = m;
  });
  ASSERT_NE(support, 0u);
  std::vector<std::size_t> t;
  for (std::size_t j = 0; j < 16; ++j)
    if ((support >> j) & 1u) t.push_back(j);
  EXPECT_LT(rank(restrict(rm14, IndexSet(t))), 4u);
}

TEST(LinearCodeTest, Automorphisms) {
  const LinearCode rm14 = reed_muller(1, 4);
  EXPECT_TRUE(is_automorphism(rm14, Permutation::identity(16)));

  const LinearCode rep = repetition(kGf11, 6);
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = a + 1; b < 6; ++b) {
      std::vector<std::size_t> image(6);
      for (std::size_t j = 0; j < 6; ++j) image[j] = j;
      std::swap(image[a], image[b]);
      EXPECT_TRUE(is_automorphism(rep, Permutation(image)));
    }

  // v -> v + e1 on point labels.
  std::vector<std::size_t> image(16);
  for (std::size_t j = 0; j < 16; ++j) image[j] = rm_column(rm_point(j, 4) ^ 0b1000u, 4);
  EXPECT_TRUE(is_automorphism(rm14, Permutation(image)));

  // Some transposition breaks C1.
  const LinearCode c1 = fixture("C1");
  bool found_non_automorphism = false;
  for (std::size_t b = 1; b < 5; ++b) {
    std::vector<std::size_t> img = {0, 1, 2, 3, 4};
    std::swap(img[0], img[b]);
    if (!is_automorphism(c1, Permutation(img))) found_non_automorphism = true;
  }
  EXPECT_TRUE(found_non_automorphism);
  EXPECT_THROW(Permutation({0, 0, 1}), ValidationError);
  EXPECT_THROW(apply_permutation(c1, Permutation::identity(4)), ValidationError);
}

}  // namespace
}  // namespace starpir
