// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all
// criteria pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "toric_bm/chow.hpp"
#include "toric_bm/homology.hpp"
#include "toric_bm/koszul.hpp"
#include "toric_bm/presets.hpp"
#include "toric_bm/report_io.hpp"

using namespace toric_bm;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Collects the first few failure messages of a criterion.
struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (notes.size() < 5) notes.push_back(what);
  }
};

// (rank, weight) of every piece in degree j.
std::vector<std::pair<std::size_t, int>> pieces_at(const HomologyReport& rep, int j) {
  std::vector<std::pair<std::size_t, int>> out;
  for (const auto& d : rep.degrees)
    if (d.j == j)
      for (const auto& p : d.pieces) out.emplace_back(p.group.free_rank, p.weight);
  return out;
}

bool torsion_free(const HomologyReport& rep) {
  for (const auto& d : rep.degrees)
    if (!rep.torsion_in_degree(d.j).empty()) return false;
  return true;
}

bool matches_betti_oracle(const Fan& fan, const HomologyReport& rep) {
  const auto betti = oracle_smooth_complete_betti(fan);
  if (!betti) return false;
  for (int j = 0; j <= 2 * static_cast<int>(fan.rank()); ++j)
    if (static_cast<long long>(rep.rank_in_degree(j)) != (*betti)[static_cast<std::size_t>(j)]) return false;
  return true;
}

Outcome criterion_projective_spaces() {
  Outcome o;
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto t0 = Clock::now();
    const auto fan = Fan::build(presets::projective_space(n));
    const auto rep = bm_homology_report(fan, CoefficientSpec::integers());
    const double elapsed = seconds_since(t0);
    const std::string tag = "P^" + std::to_string(n);
    for (int j = 0; j <= 2 * static_cast<int>(n); ++j) {
      const auto expected = (j % 2 == 0) ? std::vector<std::pair<std::size_t, int>>{{1, j / 2}}
                                         : std::vector<std::pair<std::size_t, int>>{};
      o.require(pieces_at(rep, j) == expected, tag + ": wrong group in degree " + std::to_string(j));
    }
    o.require(torsion_free(rep), tag + ": torsion present");
    o.require(matches_betti_oracle(fan, rep), tag + ": Betti oracle mismatch");
    o.require(elapsed < 10.0, tag + ": took " + std::to_string(elapsed) + " s");
  }
  return o;
}

Outcome criterion_surfaces() {
  Outcome o;
  const std::vector<std::pair<std::string, FanDescription>> fans = {
      {"hirzebruch 2", presets::hirzebruch(2)},
      {"P1 x P1", presets::product(presets::projective_space(1), presets::projective_space(1))},
  };
  for (const auto& [name, d] : fans) {
    const auto fan = Fan::build(d);
    const auto rep = bm_homology_report(fan, CoefficientSpec::integers());
    const std::vector<std::size_t> betti = {1, 0, 2, 0, 1};
    std::vector<int> weights;
    for (int j = 0; j <= 4; ++j) {
      o.require(rep.rank_in_degree(j) == betti[static_cast<std::size_t>(j)], name + ": b_" + std::to_string(j));
      o.require(rep.rank_in_degree(j) == rep.rank_in_degree(4 - j), name + ": Poincare symmetry at " + std::to_string(j));
      for (const auto& [r, w] : pieces_at(rep, j))
        for (std::size_t k = 0; k < r; ++k) weights.push_back(w);
    }
    o.require(weights == std::vector<int>{0, 1, 1, 2}, name + ": weights");
    o.require(torsion_free(rep), name + ": torsion present");
    o.require(matches_betti_oracle(fan, rep), name + ": Betti oracle mismatch");
  }
  return o;
}

Outcome criterion_punctured_plane() {
  Outcome o;
  const auto rep = bm_homology_report(Fan::build(presets::punctured_plane()), CoefficientSpec::integers());
  for (int j = 0; j <= 4; ++j) {
    std::vector<std::pair<std::size_t, int>> expected;
    if (j == 1) expected = {{1, 0}};
    if (j == 4) expected = {{1, 2}};
    o.require(pieces_at(rep, j) == expected, "degree " + std::to_string(j));
  }
  o.require(torsion_free(rep), "torsion present");
  // Poincare duality against S^3: H_j^{BM} = H^{4-j}(S^3), nonzero for j = 1, 4
  const std::vector<std::size_t> sphere_cohomology = {1, 0, 0, 1};  // H^0..H^3
  for (int j = 1; j <= 4; ++j)
    o.require(rep.rank_in_degree(j) == sphere_cohomology[static_cast<std::size_t>(4 - j)], "duality at " + std::to_string(j));
  o.require(rep.rank_in_degree(0) == 0, "degree 0");
  return o;
}

Outcome criterion_tori() {
  Outcome o;
  for (std::size_t n = 1; n <= 4; ++n)
    for (auto coeff : {CoefficientSpec::integers(), CoefficientSpec::rationals()}) {
      const auto rep = bm_homology_report(Fan::build(presets::torus(n)), coeff);
      for (int j = 0; j <= 2 * static_cast<int>(n); ++j) {
        const auto rank = oracle::binomial(static_cast<long long>(n), 2 * static_cast<long long>(n) - j);
        std::vector<std::pair<std::size_t, int>> expected;
        if (rank > 0) expected = {{rank.convert_to<std::size_t>(), j - static_cast<int>(n)}};
        o.require(pieces_at(rep, j) == expected,
                  "torus " + std::to_string(n) + " over " + coeff.to_string() + ", degree " + std::to_string(j));
      }
      o.require(torsion_free(rep), "torus " + std::to_string(n) + ": torsion");
    }
  return o;
}

Outcome criterion_structural(const std::vector<oracle::CorpusFan>& corpus) {
  Outcome o;
  const auto t0 = Clock::now();
  o.require(corpus.size() >= 20, "corpus has only " + std::to_string(corpus.size()) + " fans");
  std::mt19937_64 rng(5);
  for (const auto& c : corpus) {
    const auto fan = Fan::build(c.description);
    ChowModule chow(fan);
    const int n = static_cast<int>(fan.rank());

    // d^2 = 0 rechecked on the assembled matrices
    std::vector<WeightSubcomplex> subs;
    try {
      subs = assemble_subcomplexes(chow);
    } catch (const ConsistencyError& e) {
      o.require(false, c.name + ": " + e.what());
      continue;
    }
    for (const auto& w : subs)
      for (std::size_t s = 1; s + 1 < w.differentials.size(); ++s)
        o.require((w.differentials[s] * w.differentials[s + 1]).is_zero(), c.name + ": d^2 != 0");

    // vanishing outside [0, 2n], read from the raw page
    const auto kh = koszul_homology(fan, CoefficientSpec::integers());
    for (const auto& e : kh.entries)
      if (e.degree() < 0 || e.degree() > 2 * n)
        o.require(e.group.is_zero(), c.name + ": homology in degree " + std::to_string(e.degree()));

    // Chow ranks against the orbit count
    for (int k = 2 * n; k >= -2 * n; k -= 2)
      o.require(chow.basis_in_degree(k).size() == oracle::orbit_sum_rank(fan, k),
                c.name + ": rank of A_" + std::to_string(k));

    // module commutativity on random triples
    std::vector<ChowBasisElement> basis;
    for (int k = 2 * n; k >= -2 * n; k -= 2)
      for (const auto& e : chow.basis_in_degree(k)) basis.push_back(e);
    for (int t = 0; t < 100 && !basis.empty(); ++t) {
      Vector m(fan.rank()), m2(fan.rank());
      for (auto& x : m) x = static_cast<long long>(rng() % 9) - 4;
      for (auto& x : m2) x = static_cast<long long>(rng() % 9) - 4;
      const ChowElement e(basis[rng() % basis.size()]);
      o.require(chow.act(m, chow.act(m2, e)) == chow.act(m2, chow.act(m, e)), c.name + ": act does not commute");
    }

    // Euler characteristic against the number of top-dimensional cones
    std::string rep_error;
    HomologyReport rep;
    try {
      rep = make_report(kh);
    } catch (const ConsistencyError& e) {
      o.require(false, c.name + ": " + e.what());
      continue;
    }
    long long chi = 0;
    for (int j = 0; j <= 2 * n; ++j) chi += (j % 2 == 0 ? 1 : -1) * static_cast<long long>(rep.rank_in_degree(j));
    o.require(chi == static_cast<long long>(fan.count_cones_of_dim(fan.rank())), c.name + ": Euler characteristic");

    // unimodular change of basis of N
    const auto base = report_to_json(rep).dump(2);
    for (int trial = 0; trial < 2; ++trial) {
      const auto g = oracle::random_unimodular(rng, fan.rank());
      const auto moved = report_to_json(bm_homology_report(Fan::build(transform_rays(c.description, g)),
                                                           CoefficientSpec::integers())).dump(2);
      o.require(moved == base, c.name + ": report changed under basis change");
    }
  }
  const double elapsed = seconds_since(t0);
  o.require(elapsed < 300.0, "structural suite took " + std::to_string(elapsed) + " s");
  return o;
}

Outcome criterion_universal_coefficients(const std::vector<oracle::CorpusFan>& corpus) {
  Outcome o;
  for (const auto& c : corpus) {
    const auto fan = Fan::build(c.description);
    const auto integral = bm_homology_report(fan, CoefficientSpec::integers());
    for (std::uint64_t q : {101, 103}) {
      o.require(certification_thresholds(fan.rank(), q).field_degeneration, c.name + ": q not certified");
      std::string why;
      const auto mod_q = bm_homology_report(fan, CoefficientSpec::prime_field(q));
      o.require(oracle::universal_coefficients_hold(integral, mod_q, q, &why), c.name + " q=" + std::to_string(q) + ": " + why);
    }
  }
  return o;
}

Outcome criterion_thresholds() {
  Outcome o;
  o.require(certification_thresholds(6, 3) == Certification{3, false, false}, "(n=6, q=3)");
  o.require(certification_thresholds(6, 5) == Certification{5, true, true}, "(n=6, q=5)");
  o.require(certification_thresholds(2, 2) == Certification{2, true, false}, "(n=2, q=2)");
  return o;
}

Outcome criterion_smith() {
  Outcome o;
  const auto t0 = Clock::now();
  std::mt19937_64 rng(8);
  for (int t = 0; t < 500; ++t) {
    const std::size_t rows = 1 + rng() % 6;
    const std::size_t cols = 1 + rng() % 8;
    const auto a = (t % 3 == 0) ? oracle::random_matrix(rng, rows, cols, 20)
                                : oracle::random_low_rank(rng, rows, cols, 1 + rng() % std::min(rows, cols));
    const auto snf = smith_normal_form(a);
    const std::string tag = "matrix " + std::to_string(t);
    o.require(snf.u * a * snf.v == snf.s, tag + ": U A V != S");
    o.require(is_unimodular(snf.u) && is_unimodular(snf.v), tag + ": not unimodular");
    bool diagonal = true;
    for (std::size_t i = 0; i < snf.s.rows(); ++i)
      for (std::size_t j = 0; j < snf.s.cols(); ++j)
        if (i != j && snf.s(i, j) != 0) diagonal = false;
    o.require(diagonal, tag + ": S not diagonal");
    std::vector<Integer> nonzero;
    for (std::size_t i = 0; i < snf.diagonal.size(); ++i) {
      const auto& d = snf.diagonal[i];
      o.require(d >= 0, tag + ": negative divisor");
      if (i + 1 < snf.diagonal.size())
        o.require(d == 0 ? snf.diagonal[i + 1] == 0 : snf.diagonal[i + 1] % d == 0, tag + ": divisibility");
      if (d != 0) nonzero.push_back(d);
    }
    o.require(nonzero == oracle::divisors_from_minors(a), tag + ": gcd-of-minors mismatch");
  }
  const double elapsed = seconds_since(t0);
  o.require(elapsed < 30.0, "took " + std::to_string(elapsed) + " s");
  return o;
}

Outcome criterion_conjugation(const std::vector<oracle::CorpusFan>& corpus) {
  Outcome o;
  for (const auto& c : corpus) {
    const auto fan = Fan::build(c.description);
    for (auto coeff : {CoefficientSpec::integers(), CoefficientSpec::rationals(), CoefficientSpec::prime_field(101)})
      for (const auto& d : bm_homology_report(fan, coeff).degrees)
        for (const auto& p : d.pieces)
          o.require(p.conjugation_sign == (p.weight % 2 == 0 ? 1 : -1),
                    c.name + ": sign at j=" + std::to_string(d.j) + " weight " + std::to_string(p.weight));
  }
  return o;
}

}  // namespace

int main() {
  const auto corpus = oracle::corpus();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"projective spaces P^1..P^4 over Z", criterion_projective_spaces},
      {"Hirzebruch(2) and P1 x P1", criterion_surfaces},
      {"punctured plane", criterion_punctured_plane},
      {"tori of rank <= 4", criterion_tori},
      {"structural suite over " + std::to_string(corpus.size()) + " fans", [&] { return criterion_structural(corpus); }},
      {"universal coefficients at q = 101, 103", [&] { return criterion_universal_coefficients(corpus); }},
      {"certification thresholds", criterion_thresholds},
      {"Smith normal form on 500 random matrices", criterion_smith},
      {"conjugation signs", [&] { return criterion_conjugation(corpus); }},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", seconds_since(t0));
    std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << (i + 1) << ": " << criteria[i].first << " (" << timing
              << ")\n";
    for (const auto& note : o.notes) std::cout << "      " << note << "\n";
    all = all && o.ok;
  }
  return all ? 0 : 1;
}
