#pragma once

// The Koszul complex A^T_*(X) ⊗ Λ*M, split by weight. The summand
//
//   K_s = A_{c+2s} ⊗ Λ^s M,   d(a ⊗ e_{i1}∧…∧e_{is}) = Σ_j (-1)^{j-1} (e_{ij}·a) ⊗ (omit j)
//
// has d: K_s -> K_{s-1} preserving c = k - 2s (twice the weight). Position s
// of subcomplex c computes Borel–Moore homology in degree j = c + s.

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "toric_bm/chow.hpp"
#include "toric_bm/errors.hpp"
#include "toric_bm/lattice.hpp"

namespace toric_bm {

struct ExteriorBasisElement {
  std::vector<std::size_t> indices;  // strictly increasing, 0-based

  friend auto operator<=>(const ExteriorBasisElement&, const ExteriorBasisElement&) = default;
  friend bool operator==(const ExteriorBasisElement&, const ExteriorBasisElement&) = default;
};

/// All s-subsets of {0..n-1} in lexicographic order.
inline std::vector<ExteriorBasisElement> exterior_basis(std::size_t n, std::size_t s) {
  std::vector<ExteriorBasisElement> out;
  if (s > n) return out;
  detail::for_each_subset(n, s, [&](const std::vector<std::size_t>& idx) { out.push_back({idx}); });
  return out;
}

using KoszulBasisElement = std::pair<ChowBasisElement, ExteriorBasisElement>;

struct WeightSubcomplex {
  int c = 0;
  std::vector<std::vector<KoszulBasisElement>> terms;  // s = 0..n
  // differentials[s] : K_s -> K_{s-1}; differentials[0] is the 0 x |K_0| map.
  std::vector<IntegerMatrix> differentials;

  int weight() const { return c / 2; }
  int degree_at(std::size_t s) const { return c + static_cast<int>(s); }
};

/// Basis of K_s in subcomplex c: Chow-major, exterior-minor.
inline std::vector<KoszulBasisElement> koszul_term(const ChowModule& chow, int c, std::size_t s) {
  std::vector<KoszulBasisElement> out;
  const auto ext = exterior_basis(chow.fan().rank(), s);
  if (ext.empty()) return out;
  for (const auto& a : chow.basis_in_degree(c + 2 * static_cast<int>(s)))
    for (const auto& e : ext) out.emplace_back(a, e);
  return out;
}

inline IntegerMatrix differential_matrix(const ChowModule& chow, int c, std::size_t s) {
  const std::size_t n = chow.fan().rank();
  const auto source_chow = chow.basis_in_degree(c + 2 * static_cast<int>(s));
  const auto source_ext = exterior_basis(n, s);
  const std::size_t cols = source_chow.size() * source_ext.size();
  if (s == 0) return IntegerMatrix(0, cols);
  const auto target_chow = chow.basis_in_degree(c + 2 * static_cast<int>(s) - 2);
  const auto target_ext = exterior_basis(n, s - 1);
  IntegerMatrix d(target_chow.size() * target_ext.size(), cols);
  if (d.empty()) return d;

  std::map<ChowBasisElement, std::size_t> chow_row;
  for (std::size_t i = 0; i < target_chow.size(); ++i) chow_row.emplace(target_chow[i], i);
  std::map<ExteriorBasisElement, std::size_t> ext_row;
  for (std::size_t i = 0; i < target_ext.size(); ++i) ext_row.emplace(target_ext[i], i);

  std::vector<Vector> characters;
  for (std::size_t i = 0; i < n; ++i) {
    Vector e(n);
    e[i] = 1;
    characters.push_back(std::move(e));
  }

  for (std::size_t a = 0; a < source_chow.size(); ++a)
    for (std::size_t w = 0; w < source_ext.size(); ++w) {
      const std::size_t col = a * source_ext.size() + w;
      const auto& idx = source_ext[w].indices;
      for (std::size_t j = 0; j < idx.size(); ++j) {
        ExteriorBasisElement rest;
        for (std::size_t t = 0; t < idx.size(); ++t)
          if (t != j) rest.indices.push_back(idx[t]);
        const std::size_t ext_pos = ext_row.at(rest);
        const Integer sign = (j % 2 == 0) ? 1 : -1;
        const ChowElement image = chow.act(characters[idx[j]], source_chow[a]);
        for (const auto& [b, coeff] : image.terms()) {
          const std::size_t row = chow_row.at(b) * target_ext.size() + ext_pos;
          d(row, col) += sign * coeff;
        }
      }
    }
  return d;
}

/// Even c from -n to 2n, each with D_{s-1} D_s = 0 verified; throws
/// ConsistencyError otherwise.
inline std::vector<WeightSubcomplex> assemble_subcomplexes(const ChowModule& chow) {
  const int n = static_cast<int>(chow.fan().rank());
  std::vector<WeightSubcomplex> out;
  for (int c = -n; c <= 2 * n; ++c) {
    if (c % 2 != 0) continue;
    WeightSubcomplex w;
    w.c = c;
    for (int s = 0; s <= n; ++s) {
      w.terms.push_back(koszul_term(chow, c, static_cast<std::size_t>(s)));
      w.differentials.push_back(differential_matrix(chow, c, static_cast<std::size_t>(s)));
    }
    for (std::size_t s = 1; s + 1 < w.differentials.size(); ++s) {
      const auto& lower = w.differentials[s];
      const auto& upper = w.differentials[s + 1];
      if (lower.cols() != upper.rows())
        throw ConsistencyError("Koszul differentials are not composable at c=" + std::to_string(c));
      if (!(lower * upper).is_zero())
        throw ConsistencyError("d^2 != 0 in weight subcomplex c=" + std::to_string(c) + " at s=" +
                               std::to_string(s + 1));
    }
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace toric_bm
