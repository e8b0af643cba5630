#pragma once

// Homology of the weight subcomplexes over Z, Q and F_q, assembled into a
// Borel–Moore homology report with weights, conjugation signs and the
// per-prime certification thresholds. Also the classical oracles used to
// cross-check reports.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "toric_bm/chow.hpp"
#include "toric_bm/errors.hpp"
#include "toric_bm/fan.hpp"
#include "toric_bm/koszul.hpp"
#include "toric_bm/lattice.hpp"

namespace toric_bm {

struct HomologyGroup {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // each >= 2, d_i | d_{i+1}

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

inline bool is_prime(std::uint64_t q) {
  if (q < 2) return false;
  for (std::uint64_t p = 2; p * p <= q; ++p)
    if (q % p == 0) return false;
  return true;
}

/// Distinct prime factors by trial division.
inline std::vector<std::uint64_t> prime_factors(Integer x) {
  std::vector<std::uint64_t> out;
  x = abs(x);
  for (std::uint64_t p = 2; Integer(p) * p <= x; ++p) {
    if ((x % p).is_zero()) {
      out.push_back(p);
      while ((x % p).is_zero()) x /= p;
    }
  }
  if (x > 1) out.push_back(x.convert_to<std::uint64_t>());
  return out;
}

struct CoefficientSpec {
  enum class Kind { integers, rationals, prime_field };
  Kind kind = Kind::integers;
  std::uint64_t q = 0;

  static CoefficientSpec integers() { return {}; }
  static CoefficientSpec rationals() { return {Kind::rationals, 0}; }
  static CoefficientSpec prime_field(std::uint64_t q) {
    if (!is_prime(q)) throw std::invalid_argument("coefficient field order " + std::to_string(q) + " is not prime");
    if (q >= (std::uint64_t{1} << 32)) throw std::invalid_argument("coefficient field order too large");
    return {Kind::prime_field, q};
  }

  /// "Z", "Q" or "Fq:<q>".
  static CoefficientSpec parse(std::string_view text) {
    if (text == "Z") return integers();
    if (text == "Q") return rationals();
    if (text.substr(0, 3) == "Fq:" && text.size() > 3) {
      std::uint64_t q = 0;
      for (char ch : text.substr(3)) {
        if (ch < '0' || ch > '9' || q > (std::uint64_t{1} << 40)) throw std::invalid_argument("invalid coefficient spec: " + std::string(text));
        q = q * 10 + static_cast<std::uint64_t>(ch - '0');
      }
      return prime_field(q);
    }
    throw std::invalid_argument("invalid coefficient spec: " + std::string(text));
  }

  std::string to_string() const {
    switch (kind) {
      case Kind::integers: return "Z";
      case Kind::rationals: return "Q";
      case Kind::prime_field: return "Fq:" + std::to_string(q);
    }
    return "?";
  }

  friend bool operator==(const CoefficientSpec&, const CoefficientSpec&) = default;
};

struct Certification {
  std::uint64_t q = 0;
  bool field_degeneration = false;  // q > ceil(n/2)
  bool integral_torsion = false;    // q > ceil((n+1)/2)

  friend bool operator==(const Certification&, const Certification&) = default;
};

inline Certification certification_thresholds(std::size_t n, std::uint64_t q) {
  if (!is_prime(q)) throw std::invalid_argument("certification_thresholds: " + std::to_string(q) + " is not prime");
  if (n < 1) throw std::invalid_argument("certification_thresholds: dimension must be positive");
  const std::uint64_t half = (n + 1) / 2;          // ceil(n/2)
  const std::uint64_t half_plus = (n + 2) / 2;     // ceil((n+1)/2)
  return {q, q > half, q > half_plus};
}

/// Primes q <= ceil((n+1)/2): those whose torsion is only conjecturally
/// Borel–Moore torsion.
inline std::vector<std::uint64_t> uncertified_primes(std::size_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p <= (n + 2) / 2; ++p)
    if (is_prime(p)) out.push_back(p);
  return out;
}

namespace detail {

inline HomologyGroup group_from(std::size_t middle, std::size_t rank_out, const std::vector<Integer>& divisors_in) {
  HomologyGroup g;
  std::size_t rank_in = 0;
  for (const auto& d : divisors_in) {
    if (d.is_zero()) continue;
    ++rank_in;
    if (d > 1) g.torsion.push_back(d);
  }
  g.free_rank = middle - rank_out - rank_in;
  return g;
}

}  // namespace detail

/// Homology of  . --d_in--> C --d_out--> .  over Z. Torsion comes from the
/// elementary divisors of d_in (ker d_out is saturated, so nothing else
/// contributes).
inline HomologyGroup homology_at(const IntegerMatrix& d_in, const IntegerMatrix& d_out) {
  if (d_in.rows() != d_out.cols())
    throw std::invalid_argument("homology_at: differentials do not share a middle term");
  if (!(d_out * d_in).is_zero()) throw std::invalid_argument("homology_at: d_out * d_in != 0");
  return detail::group_from(d_in.rows(), rank(d_out), elementary_divisors(d_in));
}

/// One (c, s) entry of the computed page.
struct PageEntry {
  int c = 0;
  std::size_t s = 0;
  std::size_t term_rank = 0;  // rank of K_s = A_{c+2s} ⊗ Λ^s M
  HomologyGroup group;

  int chow_degree() const { return c + 2 * static_cast<int>(s); }
  int degree() const { return c + static_cast<int>(s); }
  int weight() const { return c / 2; }
};

struct KoszulHomology {
  std::size_t n = 0;
  CoefficientSpec coefficients;
  std::vector<WeightSubcomplex> subcomplexes;
  std::vector<PageEntry> entries;  // ordered by c, then s
};

inline KoszulHomology koszul_homology(const Fan& fan, CoefficientSpec coeff) {
  ChowModule chow(fan);
  KoszulHomology out;
  out.n = fan.rank();
  out.coefficients = coeff;
  out.subcomplexes = assemble_subcomplexes(chow);
  for (const auto& w : out.subcomplexes) {
    const std::size_t top = w.differentials.size();
    // Ranks (and, over Z, divisors) of each D_s computed once.
    std::vector<std::size_t> ranks(top, 0);
    std::vector<std::vector<Integer>> divisors(top);
    for (std::size_t s = 1; s < top; ++s) {
      const auto& d = w.differentials[s];
      if (coeff.kind == CoefficientSpec::Kind::prime_field) {
        ranks[s] = rank_mod_prime(d, coeff.q);
      } else {
        divisors[s] = elementary_divisors(d);
        ranks[s] = static_cast<std::size_t>(
            std::count_if(divisors[s].begin(), divisors[s].end(), [](const Integer& x) { return !x.is_zero(); }));
      }
    }
    for (std::size_t s = 0; s < top; ++s) {
      PageEntry e;
      e.c = w.c;
      e.s = s;
      e.term_rank = w.terms[s].size();
      const std::size_t rank_in = (s + 1 < top) ? ranks[s + 1] : 0;
      e.group.free_rank = e.term_rank - ranks[s] - rank_in;
      if (coeff.kind == CoefficientSpec::Kind::integers && s + 1 < top)
        for (const auto& d : divisors[s + 1])
          if (d > 1) e.group.torsion.push_back(d);
      out.entries.push_back(std::move(e));
    }
  }
  return out;
}

struct HomologyPiece {
  int weight = 0;
  HomologyGroup group;
  std::vector<bool> torsion_certified;
  int conjugation_sign = 1;
};

struct DegreeHomology {
  int j = 0;
  std::vector<HomologyPiece> pieces;  // nonzero pieces, increasing weight
};

struct HomologyReport {
  std::size_t n = 0;
  CoefficientSpec coefficients;
  std::vector<DegreeHomology> degrees;  // j = 0..2n
  std::vector<Certification> certification;

  std::size_t rank_in_degree(int j) const {
    std::size_t r = 0;
    for (const auto& d : degrees)
      if (d.j == j)
        for (const auto& p : d.pieces) r += p.group.free_rank;
    return r;
  }
  std::vector<Integer> torsion_in_degree(int j) const {
    std::vector<Integer> t;
    for (const auto& d : degrees)
      if (d.j == j)
        for (const auto& p : d.pieces) t.insert(t.end(), p.group.torsion.begin(), p.group.torsion.end());
    return t;
  }
};

/// Builds the report from computed Koszul homology. Nonzero homology outside
/// degrees [0, 2n] is a ConsistencyError.
inline HomologyReport make_report(const KoszulHomology& kh) {
  HomologyReport rep;
  rep.n = kh.n;
  rep.coefficients = kh.coefficients;
  const int top = 2 * static_cast<int>(kh.n);
  for (int j = 0; j <= top; ++j) rep.degrees.push_back({j, {}});

  std::set<std::uint64_t> primes;
  for (std::uint64_t p = 2; p <= kh.n + 1; ++p)
    if (is_prime(p)) primes.insert(p);
  if (kh.coefficients.kind == CoefficientSpec::Kind::prime_field) primes.insert(kh.coefficients.q);

  for (const auto& e : kh.entries) {
    if (e.group.is_zero()) continue;
    const int j = e.degree();
    if (j < 0 || j > top)
      throw ConsistencyError("nonzero Koszul homology in degree " + std::to_string(j) + " (weight subcomplex c=" +
                             std::to_string(e.c) + ") outside [0, " + std::to_string(top) + "]");
    HomologyPiece piece;
    piece.weight = e.weight();
    piece.group = e.group;
    piece.conjugation_sign = (piece.weight % 2 == 0) ? 1 : -1;
    for (const auto& t : e.group.torsion) {
      bool certified = true;
      for (auto p : prime_factors(t)) {
        primes.insert(p);
        if (!certification_thresholds(kh.n, p).integral_torsion) certified = false;
      }
      piece.torsion_certified.push_back(certified);
    }
    rep.degrees[static_cast<std::size_t>(j)].pieces.push_back(std::move(piece));
  }
  for (auto& d : rep.degrees)
    std::sort(d.pieces.begin(), d.pieces.end(),
              [](const HomologyPiece& a, const HomologyPiece& b) { return a.weight < b.weight; });
  for (auto p : primes) rep.certification.push_back(certification_thresholds(kh.n, p));
  return rep;
}

inline HomologyReport bm_homology_report(const Fan& fan, CoefficientSpec coeff) {
  return make_report(koszul_homology(fan, coeff));
}

/// Integral report viewed over Z[1/S]: the S-primary parts of every torsion
/// coefficient are dropped.
inline HomologyReport invert_primes(const HomologyReport& rep, const std::vector<std::uint64_t>& inverted) {
  if (rep.coefficients.kind != CoefficientSpec::Kind::integers)
    throw std::invalid_argument("invert_primes: needs an integral report");
  HomologyReport out = rep;
  for (auto& d : out.degrees) {
    std::vector<HomologyPiece> kept;
    for (auto& p : d.pieces) {
      HomologyPiece q = p;
      q.group.torsion.clear();
      q.torsion_certified.clear();
      for (std::size_t i = 0; i < p.group.torsion.size(); ++i) {
        Integer t = p.group.torsion[i];
        for (auto s : inverted)
          while ((t % s).is_zero()) t /= s;
        if (t > 1) {
          q.group.torsion.push_back(t);
          q.torsion_certified.push_back(p.torsion_certified[i]);
        }
      }
      if (!q.group.is_zero()) kept.push_back(std::move(q));
    }
    d.pieces = std::move(kept);
  }
  return out;
}

/// Compact-support Euler characteristic check: sum (-1)^j rank H_j equals the
/// number of n-dimensional cones.
inline bool oracle_euler(const HomologyReport& rep, const Fan& fan) {
  long long chi = 0;
  for (const auto& d : rep.degrees) {
    long long r = static_cast<long long>(rep.rank_in_degree(d.j));
    chi += (d.j % 2 == 0) ? r : -r;
  }
  return chi == static_cast<long long>(fan.count_cones_of_dim(fan.rank()));
}

/// Every cone's rays extend to a lattice basis.
inline bool is_smooth(const Fan& fan) {
  for (const auto& c : fan.cones()) {
    std::vector<Vector> gens;
    for (auto r : c.rays) gens.push_back(fan.rays()[r]);
    if (gens.empty()) continue;
    auto d = elementary_divisors(IntegerMatrix::from_rows(gens, fan.rank()));
    if (c.dim != gens.size()) return false;
    for (const auto& x : d)
      if (x != 1) return false;
  }
  return true;
}

/// Exact part: every (n-1)-cone bounds exactly two n-cones. Heuristic part:
/// `samples` pseudo-random integer directions (fixed seed) each lie in some
/// n-cone.
inline bool appears_complete(const Fan& fan, std::size_t samples = 64) {
  const std::size_t n = fan.rank();
  std::vector<std::size_t> top;
  for (std::size_t i = 0; i < fan.cones().size(); ++i) {
    const auto& c = fan.cone(i);
    if (c.dim == n) top.push_back(i);
    if (n >= 1 && c.dim + 1 == n) {
      std::size_t bounding = 0;
      for (auto idx : fan.incidences_from(i))
        if (fan.cone(fan.incidences()[idx].coface).dim == n) ++bounding;
      if (bounding != 2) return false;
    }
  }
  if (top.empty()) return false;
  std::mt19937_64 rng(0x5eedULL);
  for (std::size_t k = 0; k < samples; ++k) {
    Vector x(n);
    for (auto& v : x) v = static_cast<long long>(rng() % 2001) - 1000;
    if (is_zero(x)) continue;
    bool covered = std::any_of(top.begin(), top.end(), [&](std::size_t c) { return fan.contains_point(c, x); });
    if (!covered) return false;
  }
  return true;
}

/// Even Betti numbers of a smooth complete toric variety from its face
/// numbers: b_{2k} = sum_{i>=k} (-1)^{i-k} C(i,k) d_{n-i}. Returns b_0..b_{2n}
/// (odd entries zero), or nothing when the fan is not smooth and complete.
inline std::optional<std::vector<long long>> oracle_smooth_complete_betti(const Fan& fan) {
  if (!is_smooth(fan) || !appears_complete(fan)) return std::nullopt;
  const std::size_t n = fan.rank();
  auto binom = [](long long a, long long b) {
    long long r = 1;
    for (long long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
  };
  std::vector<long long> betti(2 * n + 1, 0);
  for (std::size_t k = 0; k <= n; ++k) {
    long long b = 0;
    for (std::size_t i = k; i <= n; ++i) {
      long long term = binom(static_cast<long long>(i), static_cast<long long>(k)) *
                       static_cast<long long>(fan.count_cones_of_dim(n - i));
      b += ((i - k) % 2 == 0) ? term : -term;
    }
    betti[2 * k] = b;
  }
  return betti;
}

}  // namespace toric_bm
