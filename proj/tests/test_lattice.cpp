#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "toric_bm/lattice.hpp"

using namespace toric_bm;

namespace {

IntegerMatrix mat(std::vector<std::vector<long long>> rows) {
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  IntegerMatrix a(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = rows[i][j];
  return a;
}

void expect_valid_smith(const IntegerMatrix& a) {
  const auto snf = smith_normal_form(a);
  EXPECT_EQ(snf.u * a * snf.v, snf.s);
  EXPECT_TRUE(is_unimodular(snf.u));
  EXPECT_TRUE(is_unimodular(snf.v));
  for (std::size_t i = 0; i < snf.s.rows(); ++i)
    for (std::size_t j = 0; j < snf.s.cols(); ++j)
      if (i != j) {
        EXPECT_EQ(snf.s(i, j), 0);
      }
  for (std::size_t i = 0; i < snf.diagonal.size(); ++i) {
    EXPECT_GE(snf.diagonal[i], 0);
    if (i + 1 < snf.diagonal.size() && snf.diagonal[i] != 0) {
      EXPECT_EQ(snf.diagonal[i + 1] % snf.diagonal[i], 0);
    }
    if (snf.diagonal[i] == 0 && i + 1 < snf.diagonal.size()) {
      EXPECT_EQ(snf.diagonal[i + 1], 0);
    }
  }
  std::vector<Integer> nonzero;
  for (const auto& d : snf.diagonal)
    if (d != 0) nonzero.push_back(d);
  EXPECT_EQ(nonzero, oracle::divisors_from_minors(a));
}

}  // namespace

TEST(Smith, IdentityIsFixed) {
  const auto snf = smith_normal_form(IntegerMatrix::identity(2));
  EXPECT_EQ(snf.diagonal, (std::vector<Integer>{1, 1}));
  EXPECT_TRUE(is_unimodular(snf.u));
  EXPECT_TRUE(is_unimodular(snf.v));
}

TEST(Smith, TwoByTwoExample) {
  const auto a = mat({{2, 4}, {6, 8}});
  EXPECT_EQ(smith_normal_form(a).diagonal, (std::vector<Integer>{2, 4}));
  expect_valid_smith(a);
}

TEST(Smith, EmptyShape) {
  const IntegerMatrix a(0, 3);
  const auto snf = smith_normal_form(a);
  EXPECT_TRUE(snf.diagonal.empty());
  EXPECT_EQ(snf.rank(), 0u);
  EXPECT_EQ(rank(a), 0u);
}

TEST(Smith, RandomMatricesAgreeWithMinorOracle) {
  std::mt19937_64 rng(20240611);
  for (int t = 0; t < 200; ++t) {
    const std::size_t rows = 1 + rng() % 5;
    const std::size_t cols = 1 + rng() % 6;
    const auto a = (t % 2 == 0) ? oracle::random_matrix(rng, rows, cols, 9)
                                : oracle::random_low_rank(rng, rows, cols, 1 + rng() % std::min(rows, cols));
    SCOPED_TRACE(t);
    expect_valid_smith(a);
  }
}

TEST(Smith, FastDivisorsMatchDense) {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 200; ++t) {
    const std::size_t rows = 1 + rng() % 9;
    const std::size_t cols = 1 + rng() % 9;
    auto a = oracle::random_low_rank(rng, rows, cols, 1 + rng() % std::min(rows, cols));
    // sparsify so the unit-pivot phase does real work
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (rng() % 3 == 0) a(i, j) = 0;
    std::vector<Integer> dense;
    for (const auto& d : smith_normal_form(a).diagonal)
      if (d != 0) dense.push_back(d);
    std::vector<Integer> fast;
    for (const auto& d : elementary_divisors(a))
      if (d != 0) fast.push_back(d);
    EXPECT_EQ(fast, dense) << "trial " << t;
  }
}

TEST(Smith, RankModPrime) {
  EXPECT_EQ(rank_mod_prime(mat({{2, 4}, {6, 8}}), 2), 0u);
  EXPECT_EQ(rank_mod_prime(mat({{2, 4}, {6, 8}}), 3), 2u);
  EXPECT_EQ(rank_mod_prime(mat({{2, 0}, {0, 6}}), 3), 1u);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    const auto a = oracle::random_matrix(rng, 1 + rng() % 5, 1 + rng() % 5, 6);
    const auto divs = oracle::divisors_from_minors(a);
    std::size_t expected = 0;
    for (const auto& d : divs)
      if (d % 7 != 0) ++expected;
    EXPECT_EQ(rank_mod_prime(a, 7), expected);
  }
}

TEST(Determinant, MatchesCofactorExpansion) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + rng() % 5;
    const auto a = oracle::random_matrix(rng, n, n, 7);
    std::vector<std::vector<Integer>> rows(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) rows[i][j] = a(i, j);
    EXPECT_EQ(determinant(a), oracle::laplace_det(rows));
  }
}

TEST(Unimodular, InverseRoundTrip) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; ++t) {
    const auto g = oracle::random_unimodular(rng, 1 + rng() % 5);
    EXPECT_TRUE(is_unimodular(g));
    EXPECT_EQ(g * inverse_unimodular(g), IntegerMatrix::identity(g.rows()));
  }
}

TEST(Kernel, SingleRow) {
  const auto a = mat({{1, 1}});
  const auto k = kernel_basis(a);
  ASSERT_EQ(k.size(), 1u);
  EXPECT_TRUE(is_zero(a.apply(k[0])));
  EXPECT_EQ(abs(k[0][0]), 1);
  EXPECT_EQ(k[0][0], -k[0][1]);
}

TEST(Kernel, IdentityAndZero) {
  EXPECT_TRUE(kernel_basis(IntegerMatrix::identity(3)).empty());
  const auto k = kernel_basis(IntegerMatrix(1, 2));
  ASSERT_EQ(k.size(), 2u);
  EXPECT_TRUE(is_unimodular(IntegerMatrix::from_columns(k, 2)));
}

TEST(Kernel, RandomKernelsAreSaturated) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 50; ++t) {
    const std::size_t rows = 1 + rng() % 4;
    const std::size_t cols = 2 + rng() % 4;
    const auto a = oracle::random_low_rank(rng, rows, cols, 1 + rng() % std::min(rows, cols));
    const auto k = kernel_basis(a);
    EXPECT_EQ(k.size(), cols - rank(a));
    for (const auto& v : k) EXPECT_TRUE(is_zero(a.apply(v)));
    if (!k.empty()) {
      // saturated: the kernel basis has all elementary divisors 1
      for (const auto& d : oracle::divisors_from_minors(IntegerMatrix::from_columns(k, cols))) EXPECT_EQ(d, 1);
    }
  }
}

TEST(Saturation, Examples) {
  auto s = saturation_and_complement({{2, 0}}, 2);
  ASSERT_EQ(s.saturation.size(), 1u);
  ASSERT_EQ(s.complement.size(), 1u);
  EXPECT_EQ(abs(s.saturation[0][0]), 1);
  EXPECT_EQ(s.saturation[0][1], 0);
  EXPECT_TRUE(is_unimodular(IntegerMatrix::from_columns({s.saturation[0], s.complement[0]}, 2)));

  s = saturation_and_complement({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3);
  EXPECT_EQ(s.saturation.size(), 3u);
  EXPECT_TRUE(s.complement.empty());

  s = saturation_and_complement({{1, 1}, {1, -1}}, 2);
  EXPECT_EQ(s.saturation.size(), 2u);
  EXPECT_TRUE(s.complement.empty());
  EXPECT_TRUE(is_unimodular(IntegerMatrix::from_columns(s.saturation, 2)));
}

TEST(Saturation, RandomSplitsAreUnimodular) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 2 + rng() % 4;
    const std::size_t k = 1 + rng() % n;
    const auto gens_m = oracle::random_low_rank(rng, n, k, 1 + rng() % k);
    std::vector<Vector> gens;
    for (std::size_t j = 0; j < k; ++j) gens.push_back(gens_m.column(j));
    const auto s = saturation_and_complement(gens, n);
    auto all = s.saturation;
    all.insert(all.end(), s.complement.begin(), s.complement.end());
    ASSERT_EQ(all.size(), n);
    EXPECT_TRUE(is_unimodular(IntegerMatrix::from_columns(all, n)));
    EXPECT_EQ(s.saturation.size(), rank(gens_m));
    // every generator lies in the span of the saturation basis
    auto sat = s.saturation;
    for (const auto& g : gens) {
      auto with = sat;
      with.push_back(g);
      EXPECT_EQ(rank(IntegerMatrix::from_columns(with, n)), sat.size());
    }
  }
}
