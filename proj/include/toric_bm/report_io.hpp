#pragma once

// Rendering of homology reports, fan validation reports and page dumps, as
// JSON and as plain-text tables.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "toric_bm/chow.hpp"
#include "toric_bm/fan.hpp"
#include "toric_bm/homology.hpp"

namespace toric_bm {

using ordered_json = nlohmann::ordered_json;

namespace detail {

inline ordered_json integer_json(const Integer& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return x.convert_to<long long>();
  return x.str();
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace detail

inline ordered_json report_to_json(const HomologyReport& rep) {
  ordered_json doc;
  doc["n"] = rep.n;
  doc["coefficients"] = rep.coefficients.to_string();
  doc["degrees"] = ordered_json::array();
  for (const auto& d : rep.degrees) {
    ordered_json deg;
    deg["j"] = d.j;
    deg["pieces"] = ordered_json::array();
    for (const auto& p : d.pieces) {
      ordered_json piece;
      piece["weight"] = p.weight;
      piece["rank"] = p.group.free_rank;
      piece["torsion"] = ordered_json::array();
      for (const auto& t : p.group.torsion) piece["torsion"].push_back(detail::integer_json(t));
      piece["torsion_certified"] = ordered_json::array();
      for (bool b : p.torsion_certified) piece["torsion_certified"].push_back(b);
      piece["conjugation_sign"] = p.conjugation_sign;
      deg["pieces"].push_back(std::move(piece));
    }
    doc["degrees"].push_back(std::move(deg));
  }
  doc["certification"] = ordered_json::array();
  for (const auto& c : rep.certification)
    doc["certification"].push_back(
        {{"q", c.q}, {"field_degeneration", c.field_degeneration}, {"integral_torsion", c.integral_torsion}});
  return doc;
}

inline std::string group_to_string(const HomologyGroup& g, const CoefficientSpec& coeff) {
  if (g.is_zero()) return "0";
  std::string ring = "Z";
  if (coeff.kind == CoefficientSpec::Kind::rationals) ring = "Q";
  if (coeff.kind == CoefficientSpec::Kind::prime_field) ring = "F" + std::to_string(coeff.q);
  std::string s;
  if (g.free_rank == 1) s = ring;
  if (g.free_rank > 1) s = ring + "^" + std::to_string(g.free_rank);
  for (const auto& t : g.torsion) s += (s.empty() ? "" : " + ") + ("Z/" + t.str());
  return s;
}

/// One row per (degree, weight piece); degrees with no homology print as 0.
inline std::string report_to_table(const HomologyReport& rep) {
  std::ostringstream os;
  os << "Borel-Moore homology, n = " << rep.n << ", coefficients " << rep.coefficients.to_string() << "\n";
  os << "  j  weight  conj  group                flags\n";
  for (const auto& d : rep.degrees) {
    if (d.pieces.empty()) {
      os << "  " << d.j << (d.j < 10 ? " " : "") << "  -       -     0\n";
      continue;
    }
    for (const auto& p : d.pieces) {
      std::string w = std::to_string(p.weight);
      std::string sign = p.conjugation_sign > 0 ? "+1" : "-1";
      std::string group = group_to_string(p.group, rep.coefficients);
      std::string flags;
      for (std::size_t i = 0; i < p.group.torsion.size(); ++i)
        if (!p.torsion_certified[i]) flags += (flags.empty() ? "" : " ") + ("conjectural(Z/" + p.group.torsion[i].str() + ")");
      os << "  " << d.j << (d.j < 10 ? " " : "") << "  " << w << std::string(w.size() < 8 ? 8 - w.size() : 1, ' ')
         << sign << "    " << group << std::string(group.size() < 21 ? 21 - group.size() : 1, ' ') << flags << "\n";
    }
  }
  if (rep.coefficients.kind == CoefficientSpec::Kind::prime_field) {
    auto c = certification_thresholds(rep.n, rep.coefficients.q);
    if (!c.field_degeneration) os << "warning: q = " << c.q << " is below the degeneration threshold; ranks are Koszul (E3) ranks\n";
  }
  os << "certification:";
  for (const auto& c : rep.certification)
    os << "  q=" << c.q << " (degeneration " << detail::yes_no(c.field_degeneration) << ", integral torsion "
       << detail::yes_no(c.integral_torsion) << ")";
  os << "\n";
  return os.str();
}

inline ordered_json validation_to_json(const ValidationReport& rep) {
  ordered_json doc;
  doc["ok"] = rep.ok();
  doc["checks"] = ordered_json::array();
  for (const auto& c : rep.checks) doc["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return doc;
}

inline std::string validation_to_table(const ValidationReport& rep) {
  std::ostringstream os;
  for (const auto& c : rep.checks) {
    os << (c.passed ? "pass  " : "FAIL  ") << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << "\n";
  }
  return os.str();
}

namespace detail {

inline std::string basis_element_to_string(const Fan& fan, const ChowBasisElement& e) {
  std::string s = "x" + cone_name(fan.cone(e.cone).rays);
  if (!e.exponents.empty()) {
    s += "*l^(";
    for (std::size_t i = 0; i < e.exponents.size(); ++i) s += (i ? "," : "") + std::to_string(e.exponents[i]);
    s += ")";
  }
  return s;
}

}  // namespace detail

/// E2 term ranks per (k, s), the Chow bases involved and the E3 groups.
inline std::string pages_to_table(const Fan& fan, const KoszulHomology& kh) {
  ChowModule chow(fan);
  std::ostringstream os;
  const int n = static_cast<int>(kh.n);
  os << "Chow bases A_k:\n";
  for (int k = 2 * n; k >= -n; k -= 2) {
    auto basis = chow.basis_in_degree(k);
    os << "  A_" << k << " (rank " << basis.size() << "):";
    for (const auto& b : basis) os << " " << detail::basis_element_to_string(fan, b);
    os << "\n";
  }
  os << "E2 terms K_s = A_k (x) L^s M, k = c + 2s:\n";
  os << "  c   s  k   j   rank   E3\n";
  for (const auto& e : kh.entries) {
    if (e.term_rank == 0) continue;
    os << "  " << e.c << "  " << e.s << "  " << e.chow_degree() << "  " << e.degree() << "  " << e.term_rank << "  "
       << group_to_string(e.group, kh.coefficients) << "\n";
  }
  return os.str();
}

inline ordered_json pages_to_json(const Fan& fan, const KoszulHomology& kh, bool with_matrices) {
  ChowModule chow(fan);
  ordered_json doc;
  const int n = static_cast<int>(kh.n);
  doc["chow_bases"] = ordered_json::array();
  for (int k = 2 * n; k >= -n; k -= 2) {
    ordered_json b;
    b["k"] = k;
    b["basis"] = ordered_json::array();
    for (const auto& e : chow.basis_in_degree(k))
      b["basis"].push_back({{"cone", fan.cone(e.cone).rays}, {"exponents", e.exponents}});
    doc["chow_bases"].push_back(std::move(b));
  }
  doc["terms"] = ordered_json::array();
  for (const auto& e : kh.entries) {
    ordered_json t;
    t["c"] = e.c;
    t["s"] = e.s;
    t["k"] = e.chow_degree();
    t["j"] = e.degree();
    t["rank"] = e.term_rank;
    t["e3_rank"] = e.group.free_rank;
    t["e3_torsion"] = ordered_json::array();
    for (const auto& x : e.group.torsion) t["e3_torsion"].push_back(detail::integer_json(x));
    doc["terms"].push_back(std::move(t));
  }
  if (with_matrices) {
    doc["differentials"] = ordered_json::array();
    for (const auto& w : kh.subcomplexes)
      for (std::size_t s = 1; s < w.differentials.size(); ++s) {
        const auto& d = w.differentials[s];
        if (d.empty()) continue;
        ordered_json m;
        m["c"] = w.c;
        m["s"] = s;
        m["rows"] = d.rows();
        m["cols"] = d.cols();
        m["entries"] = ordered_json::array();
        for (const auto& x : d.entries()) m["entries"].push_back(detail::integer_json(x));
        doc["differentials"].push_back(std::move(m));
      }
  }
  return doc;
}

}  // namespace toric_bm
