#pragma once

// Seeded search for Koszul torsion: mutate a seed fan by stellar
// subdivisions at random interior lattice points and keep every fan whose
// integral report has torsion.

#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "toric_bm/fan.hpp"
#include "toric_bm/homology.hpp"

namespace toric_bm {

/// Star subdivision of one maximal cone (dim >= 2) at a random primitive
/// vector of its relative interior. Returns the input unchanged when no such
/// cone exists.
inline FanDescription stellar_subdivision(const Fan& fan, std::mt19937_64& rng) {
  std::vector<std::size_t> candidates;
  const auto maximal = fan.maximal_cones();
  for (auto i : maximal)
    if (fan.cone(i).dim >= 2) candidates.push_back(i);
  FanDescription out = fan.description();
  if (candidates.empty()) return out;

  const std::size_t target = candidates[rng() % candidates.size()];
  const Cone& sigma = fan.cone(target);
  Vector v(fan.rank());
  for (auto r : sigma.rays) {
    const long long a = 1 + static_cast<long long>(rng() % 4);
    for (std::size_t j = 0; j < v.size(); ++j) v[j] += a * fan.rays()[r][j];
  }
  const Integer g = vector_gcd(v);
  for (auto& x : v) x /= g;

  const std::size_t new_ray = out.rays.size();
  out.rays.push_back(v);
  out.max_cones.clear();
  for (auto i : maximal)
    if (i != target) out.max_cones.push_back(fan.cone(i).rays);
  for (const auto& f : sigma.facets) {
    std::vector<std::size_t> c = f.rays;
    c.push_back(new_ray);
    out.max_cones.push_back(std::move(c));
  }
  return out;
}

struct TorsionFinding {
  std::size_t trial = 0;
  FanDescription fan;
  HomologyReport report;
  std::vector<std::pair<std::uint64_t, bool>> primes;  // (prime, certified)
};

struct SearchResult {
  std::vector<FanDescription> trial_fans;  // every generated fan, by trial index
  std::vector<TorsionFinding> findings;    // ordered by trial index
};

/// Trial i draws from its own generator seeded by (seed, i), so the fan
/// sequence depends only on the seed.
inline SearchResult search_torsion(const FanDescription& seed_fan, std::uint64_t seed, std::size_t trials) {
  (void)Fan::build(seed_fan);  // throws on an invalid seed fan, even for zero trials
  SearchResult result;
  for (std::size_t t = 0; t < trials; ++t) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(t), static_cast<std::uint32_t>(t >> 32)};
    std::mt19937_64 rng(seq);
    const std::size_t steps = 1 + static_cast<std::size_t>(rng() % 3);
    FanDescription current = seed_fan;
    for (std::size_t k = 0; k < steps; ++k) current = stellar_subdivision(Fan::build(current), rng);
    const Fan fan = Fan::build(current);
    result.trial_fans.push_back(current);

    HomologyReport rep = bm_homology_report(fan, CoefficientSpec::integers());
    std::set<std::uint64_t> primes;
    for (const auto& d : rep.degrees)
      for (const auto& p : d.pieces)
        for (const auto& x : p.group.torsion)
          for (auto q : prime_factors(x)) primes.insert(q);
    if (primes.empty()) continue;
    TorsionFinding f{t, current, std::move(rep), {}};
    for (auto q : primes) f.primes.emplace_back(q, certification_thresholds(fan.rank(), q).integral_torsion);
    result.findings.push_back(std::move(f));
  }
  return result;
}

}  // namespace toric_bm
