#include <gtest/gtest.h>

#include "oracles.hpp"
#include "toric_bm/koszul.hpp"
#include "toric_bm/presets.hpp"

using namespace toric_bm;

TEST(Exterior, Bases) {
  EXPECT_EQ(exterior_basis(3, 0), (std::vector<ExteriorBasisElement>{{{}}}));
  EXPECT_EQ(exterior_basis(3, 2), (std::vector<ExteriorBasisElement>{{{0, 1}}, {{0, 2}}, {{1, 2}}}));
  EXPECT_TRUE(exterior_basis(2, 3).empty());
  for (std::size_t n = 0; n <= 5; ++n)
    for (std::size_t s = 0; s <= n; ++s)
      EXPECT_EQ(Integer(exterior_basis(n, s).size()), oracle::binomial(static_cast<long long>(n), static_cast<long long>(s)));
}

TEST(Differential, ProjectiveLine) {
  const auto fan = Fan::build(presets::projective_space(1));
  ChowModule chow(fan);
  const auto d = differential_matrix(chow, 0, 1);
  ASSERT_EQ(d.rows(), 2u);
  ASSERT_EQ(d.cols(), 1u);
  // rows follow the K_0 basis order: ray (1) before ray (-1)
  const auto k0 = koszul_term(chow, 0, 0);
  ASSERT_EQ(k0.size(), 2u);
  EXPECT_EQ(fan.cone(k0[0].first.cone).rays, std::vector<std::size_t>{0});
  EXPECT_EQ(d(0, 0), 1);
  EXPECT_EQ(d(1, 0), -1);
}

TEST(Differential, PuncturedPlaneTopExterior) {
  const auto fan = Fan::build(presets::punctured_plane());
  ChowModule chow(fan);
  const auto d = differential_matrix(chow, 0, 2);
  const auto target = koszul_term(chow, 0, 1);
  ASSERT_EQ(d.cols(), 1u);
  ASSERT_EQ(d.rows(), target.size());
  // d(x_0 ⊗ t1∧t2) = x_{e1} ⊗ t2 − x_{e2} ⊗ t1
  for (std::size_t r = 0; r < target.size(); ++r) {
    const auto& [a, e] = target[r];
    const auto& rays = fan.cone(a.cone).rays;
    Integer expected = 0;
    if (rays == std::vector<std::size_t>{0} && e.indices == std::vector<std::size_t>{1}) expected = 1;
    if (rays == std::vector<std::size_t>{1} && e.indices == std::vector<std::size_t>{0}) expected = -1;
    EXPECT_EQ(d(r, 0), expected) << r;
  }
}

TEST(Differential, DegreeZeroHasEmptyTarget) {
  const auto fan = Fan::build(presets::projective_space(2));
  ChowModule chow(fan);
  for (int c = -2; c <= 4; c += 2) {
    const auto d = differential_matrix(chow, c, 0);
    EXPECT_EQ(d.rows(), 0u);
    EXPECT_EQ(d.cols(), koszul_term(chow, c, 0).size());
  }
}

TEST(Subcomplexes, TorusDifferentialsVanish) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto fan = Fan::build(presets::torus(n));
    ChowModule chow(fan);
    for (const auto& w : assemble_subcomplexes(chow)) {
      for (const auto& d : w.differentials) EXPECT_TRUE(d.is_zero());
      for (std::size_t s = 0; s < w.terms.size(); ++s)
        EXPECT_EQ(!w.terms[s].empty(), w.c == 2 * static_cast<int>(n) - 2 * static_cast<int>(s));
    }
  }
}

TEST(Subcomplexes, ProjectiveLineShape) {
  const auto fan = Fan::build(presets::projective_space(1));
  ChowModule chow(fan);
  const auto subs = assemble_subcomplexes(chow);
  std::vector<int> cs;
  for (const auto& w : subs) cs.push_back(w.c);
  EXPECT_EQ(cs, (std::vector<int>{0, 2}));
  EXPECT_EQ(subs[1].terms[0].size(), 1u);  // c = 2: A_2
  EXPECT_EQ(subs[0].terms[0].size(), 2u);  // c = 0: A_0
  EXPECT_EQ(subs[0].terms[1].size(), 1u);  //        A_2 ⊗ Λ^1
}

TEST(Subcomplexes, SquareZeroAndBookkeepingOnCorpus) {
  for (const auto& c : oracle::corpus()) {
    const auto fan = Fan::build(c.description);
    ChowModule chow(fan);
    std::vector<WeightSubcomplex> subs;
    ASSERT_NO_THROW(subs = assemble_subcomplexes(chow)) << c.name;
    for (const auto& w : subs) {
      EXPECT_EQ(w.c % 2, 0);
      for (std::size_t s = 1; s < w.differentials.size(); ++s) {
        const auto& d = w.differentials[s];
        if (s + 1 < w.differentials.size()) {
          EXPECT_TRUE((d * w.differentials[s + 1]).is_zero()) << c.name;
        }
        for (std::size_t r = 0; r < d.rows(); ++r)
          for (std::size_t col = 0; col < d.cols(); ++col) {
            if (d(r, col) == 0) continue;
            const auto& [ta, te] = w.terms[s - 1][r];
            const auto& [sa, se] = w.terms[s][col];
            EXPECT_EQ(chow.degree(sa) - chow.degree(ta), 2);
            EXPECT_EQ(se.indices.size(), te.indices.size() + 1);
          }
      }
    }
  }
}

TEST(Subcomplexes, HirzebruchOneSquareZero) {
  const auto fan = Fan::build(presets::hirzebruch(1));
  ChowModule chow(fan);
  EXPECT_NO_THROW(assemble_subcomplexes(chow));
}
