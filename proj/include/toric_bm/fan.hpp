#pragma once

// Rational polyhedral fans in N = Z^n: parsing, face closure, validation,
// codimension-one incidences with their lattice normals, and the per-cone
// lattices M(sigma) = sigma^perp ∩ M and sections L_sigma.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "toric_bm/errors.hpp"
#include "toric_bm/lattice.hpp"

namespace toric_bm {

/// The fan file contents: ambient rank, ray generators, listed cones (as
/// 0-based ray indices). The listed cones need not be maximal.
struct FanDescription {
  std::size_t rank = 0;
  std::vector<Vector> rays;
  std::vector<std::vector<std::size_t>> max_cones;

  friend bool operator==(const FanDescription&, const FanDescription&) = default;
};

/// How L_sigma is chosen as a complement of M(sigma) in M. Homology must not
/// depend on the choice; the alternate rule exists to test exactly that.
enum class SectionRule { canonical, alternate };

struct FanOptions {
  SectionRule section_rule = SectionRule::canonical;
};

struct Facet {
  Vector normal;                    // in M; >= 0 on the cone, 0 on the facet
  std::vector<std::size_t> rays;    // global ray indices lying on the facet
};

struct Cone {
  std::vector<std::size_t> rays;    // sorted global ray indices; empty = zero cone
  std::size_t dim = 0;
  std::vector<Vector> n_sigma_basis;    // span(sigma) ∩ N
  std::vector<Vector> m_perp_basis;     // sigma^perp ∩ M
  std::vector<Vector> l_section_basis;  // M = M(sigma) ⊕ L_sigma
  std::vector<Facet> facets;

  std::size_t codim(std::size_t rank) const { return rank - dim; }
};

/// sigma ≺ tau with dim tau = dim sigma + 1, annotated with n_{sigma,tau}.
struct Incidence {
  std::size_t face;
  std::size_t coface;
  Vector normal;
};

struct ValidationCheck {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const ValidationCheck& c) { return c.passed; });
  }
};

namespace detail {

inline Vector to_vector(const std::vector<long long>& v) {
  return Vector(v.begin(), v.end());
}

template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline Integer ceil_div(const Integer& a, const Integer& b) {
  // b > 0
  Integer q = a / b;
  if (q * b < a) ++q;
  return q;
}

/// Geometry of the cone spanned by `gens` (rows) in Z^n, worked out in
/// coordinates of the saturated span N_sigma where the cone is full
/// dimensional.
struct ConeGeometry {
  std::size_t dim = 0;
  std::vector<Vector> span_basis;
  IntegerMatrix to_local;  // dim x n; exact on N_sigma
  bool pointed = true;
  std::vector<Vector> facet_normals;                 // ambient, in M
  std::vector<std::vector<std::size_t>> facet_sets;  // positions into gens
};

inline ConeGeometry analyze_cone(std::size_t n, const std::vector<Vector>& gens) {
  ConeGeometry g;
  auto split = saturation_and_complement(gens, n);
  g.dim = split.saturation.size();
  g.span_basis = split.saturation;
  std::vector<Vector> cols = split.saturation;
  cols.insert(cols.end(), split.complement.begin(), split.complement.end());
  IntegerMatrix inv = inverse_unimodular(IntegerMatrix::from_columns(cols, n));
  g.to_local = IntegerMatrix(g.dim, n);
  for (std::size_t i = 0; i < g.dim; ++i)
    for (std::size_t j = 0; j < n; ++j) g.to_local(i, j) = inv(i, j);
  if (g.dim == 0) return g;

  std::vector<Vector> local;
  for (const auto& r : gens) local.push_back(g.to_local.apply(r));

  std::set<Vector> seen;
  for_each_subset(local.size(), g.dim - 1, [&](const std::vector<std::size_t>& idx) {
    std::vector<Vector> sub;
    for (auto i : idx) sub.push_back(local[i]);
    auto ker = kernel_basis(IntegerMatrix::from_rows(sub, g.dim));
    if (ker.size() != 1) return;
    Vector u = ker[0];
    bool nonneg = true;
    bool nonpos = true;
    for (const auto& r : local) {
      Integer v = dot(u, r);
      if (v > 0) nonpos = false;
      if (v < 0) nonneg = false;
    }
    if (!nonneg && !nonpos) return;
    if (!nonneg)
      for (auto& x : u) x = -x;
    if (!seen.insert(u).second) return;
    Vector ambient(n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < g.dim; ++i) ambient[j] += u[i] * g.to_local(i, j);
    std::vector<std::size_t> zero;
    for (std::size_t i = 0; i < local.size(); ++i)
      if (dot(u, local[i]) == 0) zero.push_back(i);
    g.facet_normals.push_back(std::move(ambient));
    g.facet_sets.push_back(std::move(zero));
  });
  std::vector<Vector> local_normals(seen.begin(), seen.end());
  g.pointed = rank(IntegerMatrix::from_rows(local_normals, g.dim)) == g.dim;
  return g;
}

/// Faces of a pointed cone as sets of generator positions: the closure of the
/// full set under intersection with facet sets.
inline std::set<std::vector<std::size_t>> face_sets(std::size_t generator_count,
                                                    const std::vector<std::vector<std::size_t>>& facets) {
  std::vector<std::size_t> all(generator_count);
  for (std::size_t i = 0; i < generator_count; ++i) all[i] = i;
  std::set<std::vector<std::size_t>> faces{all};
  std::vector<std::vector<std::size_t>> frontier{all};
  while (!frontier.empty()) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& f : frontier)
      for (const auto& z : facets) {
        std::vector<std::size_t> meet;
        std::set_intersection(f.begin(), f.end(), z.begin(), z.end(), std::back_inserter(meet));
        if (faces.insert(meet).second) next.push_back(std::move(meet));
      }
    frontier = std::move(next);
  }
  return faces;
}

inline std::size_t rank_of(std::size_t n, const std::vector<Vector>& vs) {
  return rank(IntegerMatrix::from_rows(vs, n));
}

}  // namespace detail

inline FanDescription parse_fan_description(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw FanError(std::string("malformed fan document: ") + e.what());
  }
  auto fail = [](const std::string& what) { throw FanError("malformed fan document: " + what); };
  if (!doc.is_object()) fail("top level must be an object");
  for (const char* key : {"rank", "rays", "max_cones"})
    if (!doc.contains(key)) fail(std::string("missing field \"") + key + "\"");
  if (!doc["rank"].is_number_integer() || doc["rank"].get<long long>() < 1) fail("\"rank\" must be a positive integer");
  FanDescription d;
  d.rank = doc["rank"].get<std::size_t>();
  if (!doc["rays"].is_array()) fail("\"rays\" must be an array");
  for (const auto& r : doc["rays"]) {
    if (!r.is_array() || r.size() != d.rank) fail("each ray must be an array of " + std::to_string(d.rank) + " integers");
    Vector v;
    for (const auto& x : r) {
      if (!x.is_number_integer()) fail("ray coordinates must be integers");
      v.emplace_back(x.get<long long>());
    }
    if (vector_gcd(v) != 1)
      throw FanError("ray " + std::to_string(d.rays.size()) + " is not primitive");
    d.rays.push_back(std::move(v));
  }
  if (!doc["max_cones"].is_array()) fail("\"max_cones\" must be an array");
  for (const auto& c : doc["max_cones"]) {
    if (!c.is_array()) fail("each cone must be an array of ray indices");
    std::vector<std::size_t> idx;
    for (const auto& x : c) {
      if (!x.is_number_integer() || x.get<long long>() < 0) fail("ray indices must be nonnegative integers");
      auto i = x.get<std::size_t>();
      if (i >= d.rays.size())
        throw FanError("cone " + std::to_string(d.max_cones.size()) + " references unknown ray " + std::to_string(i));
      idx.push_back(i);
    }
    std::sort(idx.begin(), idx.end());
    if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
      throw FanError("cone " + std::to_string(d.max_cones.size()) + " lists a ray twice");
    d.max_cones.push_back(std::move(idx));
  }
  return d;
}

/// Renders the fan file format. Output parses back to an equal description.
inline std::string to_fan_file(const FanDescription& d) {
  std::ostringstream os;
  auto list = [&os](const auto& v) {
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << ']';
  };
  os << "{\n  \"rank\": " << d.rank << ",\n  \"rays\": [";
  for (std::size_t i = 0; i < d.rays.size(); ++i) {
    os << (i ? ", " : "");
    list(d.rays[i]);
  }
  os << "],\n  \"max_cones\": [";
  for (std::size_t i = 0; i < d.max_cones.size(); ++i) {
    os << (i ? ", " : "");
    list(d.max_cones[i]);
  }
  os << "]\n}\n";
  return os.str();
}

/// Face closure of the listed cones (global ray index sets, zero cone
/// included). Cones that are not strongly convex contribute only themselves.
inline std::set<std::vector<std::size_t>> build_face_closure(const FanDescription& d) {
  std::set<std::vector<std::size_t>> closure{{}};
  for (const auto& cone : d.max_cones) {
    std::vector<Vector> gens;
    for (auto i : cone) gens.push_back(d.rays[i]);
    auto geo = detail::analyze_cone(d.rank, gens);
    if (!geo.pointed) {
      closure.insert(cone);
      continue;
    }
    for (const auto& local : detail::face_sets(cone.size(), geo.facet_sets)) {
      std::vector<std::size_t> global;
      for (auto p : local) global.push_back(cone[p]);
      closure.insert(std::move(global));
    }
  }
  return closure;
}

namespace detail {

// Is cone(a) ∩ cone(b) the cone over their common rays, and is that a face
// of both? Works on exact H-descriptions restricted to span(a) ∩ span(b).
inline bool meets_in_common_face(const FanDescription& d, const std::vector<std::size_t>& a,
                                 const std::vector<std::size_t>& b, std::string& why) {
  const std::size_t n = d.rank;
  auto gens_of = [&](const std::vector<std::size_t>& c) {
    std::vector<Vector> g;
    for (auto i : c) g.push_back(d.rays[i]);
    return g;
  };
  auto ga = analyze_cone(n, gens_of(a));
  auto gb = analyze_cone(n, gens_of(b));
  std::vector<std::size_t> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));

  auto is_face = [&](const std::vector<std::size_t>& cone, const ConeGeometry& g) {
    std::vector<std::size_t> local;
    for (std::size_t p = 0; p < cone.size(); ++p)
      if (std::binary_search(common.begin(), common.end(), cone[p])) local.push_back(p);
    return face_sets(cone.size(), g.facet_sets).count(local) > 0;
  };
  if (!is_face(a, ga) || !is_face(b, gb)) {
    why = "common rays do not span a face";
    return false;
  }

  std::vector<Vector> equalities;
  for (const auto* g : {&ga, &gb}) {
    auto perp = kernel_basis(IntegerMatrix::from_rows(g->span_basis, n));
    equalities.insert(equalities.end(), perp.begin(), perp.end());
  }
  auto meet_basis = kernel_basis(IntegerMatrix::from_rows(equalities, n));
  const std::size_t dl = meet_basis.size();
  if (dl == 0) return true;

  std::vector<Vector> ineq;
  for (const auto* g : {&ga, &gb})
    for (const auto& f : g->facet_normals) {
      Vector row(dl);
      for (std::size_t k = 0; k < dl; ++k) row[k] = dot(f, meet_basis[k]);
      ineq.push_back(std::move(row));
    }
  // Facets of `a` containing the common face cut it out of `a`.
  std::vector<const Vector*> face_normals;
  for (std::size_t f = 0; f < ga.facet_sets.size(); ++f) {
    bool contains = true;
    for (auto r : common) {
      auto pos = static_cast<std::size_t>(std::lower_bound(a.begin(), a.end(), r) - a.begin());
      if (!std::binary_search(ga.facet_sets[f].begin(), ga.facet_sets[f].end(), pos)) contains = false;
    }
    if (contains) face_normals.push_back(&ga.facet_normals[f]);
  }

  bool ok = true;
  for_each_subset(ineq.size(), dl - 1, [&](const std::vector<std::size_t>& idx) {
    if (!ok) return;
    std::vector<Vector> sub;
    for (auto i : idx) sub.push_back(ineq[i]);
    auto ker = kernel_basis(IntegerMatrix::from_rows(sub, dl));
    if (ker.size() != 1) return;
    for (int sign : {1, -1}) {
      Vector u = ker[0];
      if (sign < 0)
        for (auto& x : u) x = -x;
      bool inside = std::all_of(ineq.begin(), ineq.end(), [&](const Vector& r) { return dot(r, u) >= 0; });
      if (!inside) continue;
      Vector x(n);
      for (std::size_t k = 0; k < dl; ++k)
        for (std::size_t j = 0; j < n; ++j) x[j] += u[k] * meet_basis[k][j];
      for (const auto* fn : face_normals)
        if (dot(*fn, x) != 0) {
          ok = false;
          why = "intersection is not the cone over the common rays";
          return;
        }
    }
  });
  return ok;
}

inline std::string cone_name(const std::vector<std::size_t>& c) {
  std::string s = "[";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + "]";
}

}  // namespace detail

/// Checks strong convexity, face closure, and that listed cones meet in
/// common faces. Failures become report entries; nothing throws.
inline ValidationReport validate_fan(const FanDescription& d) {
  ValidationReport rep;
  ValidationCheck convex{"strong_convexity", true, ""};
  ValidationCheck closure{"face_closure", true, ""};
  ValidationCheck fan_cond{"fan_condition", true, ""};

  std::vector<char> pointed(d.max_cones.size(), 1);
  for (std::size_t c = 0; c < d.max_cones.size(); ++c) {
    const auto& cone = d.max_cones[c];
    std::vector<Vector> gens;
    for (auto i : cone) gens.push_back(d.rays[i]);
    auto geo = detail::analyze_cone(d.rank, gens);
    if (!geo.pointed) {
      pointed[c] = 0;
      if (convex.passed) convex.detail = "cone " + detail::cone_name(cone) + " contains a line";
      convex.passed = false;
      continue;
    }
    auto faces = detail::face_sets(cone.size(), geo.facet_sets);
    for (std::size_t p = 0; p < cone.size(); ++p)
      if (!faces.count({p})) {
        if (closure.passed)
          closure.detail = "ray " + std::to_string(cone[p]) + " is not an edge of cone " + detail::cone_name(cone);
        closure.passed = false;
      }
  }
  if (closure.passed && convex.passed) {
    auto once = build_face_closure(d);
    FanDescription again{d.rank, d.rays, {once.begin(), once.end()}};
    if (build_face_closure(again) != once) {
      closure.passed = false;
      closure.detail = "face closure is not idempotent";
    }
  }
  for (std::size_t a = 0; a < d.max_cones.size() && fan_cond.passed; ++a)
    for (std::size_t b = a + 1; b < d.max_cones.size(); ++b) {
      if (!pointed[a] || !pointed[b]) continue;
      std::string why;
      if (!detail::meets_in_common_face(d, d.max_cones[a], d.max_cones[b], why)) {
        fan_cond.passed = false;
        fan_cond.detail = "cones " + detail::cone_name(d.max_cones[a]) + " and " +
                          detail::cone_name(d.max_cones[b]) + ": " + why;
        break;
      }
    }
  rep.checks = {convex, closure, fan_cond};
  return rep;
}

/// An immutable, validated fan with per-cone lattice data and incidences.
class Fan {
 public:
  static Fan build(const FanDescription& d, FanOptions options = {});

  std::size_t rank() const noexcept { return desc_.rank; }
  const FanDescription& description() const noexcept { return desc_; }
  const std::vector<Vector>& rays() const noexcept { return desc_.rays; }
  const std::vector<Cone>& cones() const noexcept { return cones_; }
  const Cone& cone(std::size_t i) const { return cones_.at(i); }
  const std::vector<Incidence>& incidences() const noexcept { return incidences_; }
  /// Indices into incidences() of the pairs (sigma, tau) with face sigma.
  const std::vector<std::size_t>& incidences_from(std::size_t sigma) const { return outgoing_.at(sigma); }

  std::optional<std::size_t> find_cone(const std::vector<std::size_t>& rays) const {
    auto it = index_.find(rays);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t count_cones_of_dim(std::size_t d) const {
    return static_cast<std::size_t>(
        std::count_if(cones_.begin(), cones_.end(), [d](const Cone& c) { return c.dim == d; }));
  }

  /// Cones that are not proper faces of another cone.
  std::vector<std::size_t> maximal_cones() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < cones_.size(); ++i)
      if (outgoing_[i].empty()) out.push_back(i);
    return out;
  }

  bool contains_point(std::size_t cone, const Vector& x) const {
    const Cone& c = cones_.at(cone);
    for (const auto& m : c.m_perp_basis)
      if (dot(m, x) != 0) return false;
    for (const auto& f : c.facets)
      if (dot(f.normal, x) < 0) return false;
    return true;
  }

 private:
  FanDescription desc_;
  std::vector<Cone> cones_;
  std::vector<Incidence> incidences_;
  std::vector<std::vector<std::size_t>> outgoing_;
  std::map<std::vector<std::size_t>, std::size_t> index_;
};

/// n_{sigma,tau}: a lattice point of tau whose class generates N_tau/N_sigma,
/// oriented so the rays of tau outside sigma map to positive multiples.
inline Vector normal_generator(const Fan& fan, std::size_t sigma, std::size_t tau) {
  const Cone& s = fan.cone(sigma);
  const Cone& t = fan.cone(tau);
  const std::size_t n = fan.rank();
  if (t.dim != s.dim + 1 || !std::includes(t.rays.begin(), t.rays.end(), s.rays.begin(), s.rays.end()))
    throw std::invalid_argument("normal_generator: sigma is not a facet of tau");

  // Work in coordinates of N_tau.
  std::vector<Vector> cols = t.n_sigma_basis;
  auto comp = saturation_and_complement(t.n_sigma_basis, n).complement;
  cols.insert(cols.end(), comp.begin(), comp.end());
  IntegerMatrix inv = inverse_unimodular(IntegerMatrix::from_columns(cols, n));
  auto local = [&](const Vector& x) {
    Vector y = inv.apply(x);
    y.resize(t.dim);
    return y;
  };
  std::vector<Vector> sub;
  for (const auto& b : s.n_sigma_basis) sub.push_back(local(b));
  auto split = saturation_and_complement(sub, t.dim);
  Vector c = split.complement.at(0);

  std::vector<Vector> w = split.saturation;
  w.push_back(c);
  IntegerMatrix w_inv = inverse_unimodular(IntegerMatrix::from_columns(w, t.dim));
  std::size_t outside = *std::find_if(t.rays.begin(), t.rays.end(), [&](std::size_t r) {
    return !std::binary_search(s.rays.begin(), s.rays.end(), r);
  });
  Integer lambda = w_inv.apply(local(fan.rays()[outside])).back();
  Vector v(n);
  for (std::size_t i = 0; i < t.dim; ++i)
    for (std::size_t j = 0; j < n; ++j) v[j] += c[i] * t.n_sigma_basis[i][j];
  if (lambda < 0)
    for (auto& x : v) x = -x;

  // Slide along the interior of sigma to the first lattice point of tau.
  Vector interior(n);
  for (auto r : s.rays)
    for (std::size_t j = 0; j < n; ++j) interior[j] += fan.rays()[r][j];
  if (!is_zero(interior)) {
    std::optional<Integer> k;
    for (const auto& f : t.facets) {
      Integer fs = dot(f.normal, interior);
      if (fs <= 0) continue;
      Integer need = detail::ceil_div(-dot(f.normal, v), fs);
      if (!k || need > *k) k = need;
    }
    if (k)
      for (std::size_t j = 0; j < n; ++j) v[j] += *k * interior[j];
  }
  return v;
}

/// (M(sigma), L_sigma) for a cone of the fan.
inline std::pair<std::vector<Vector>, std::vector<Vector>> cone_lattices(const Fan& fan, std::size_t sigma) {
  const Cone& c = fan.cone(sigma);
  return {c.m_perp_basis, c.l_section_basis};
}

inline Fan Fan::build(const FanDescription& d, FanOptions options) {
  auto report = validate_fan(d);
  for (const auto& c : report.checks)
    if (!c.passed) throw FanError(c.name + " failed: " + c.detail);
  const std::size_t n = d.rank;
  for (const auto& r : d.rays)
    if (r.size() != n || vector_gcd(r) != 1) throw FanError("ray is not a primitive vector of the ambient rank");

  Fan fan;
  fan.desc_ = d;
  auto closure = build_face_closure(d);
  std::vector<std::pair<std::size_t, std::vector<std::size_t>>> ordered;
  for (const auto& rays : closure) {
    std::vector<Vector> gens;
    for (auto i : rays) gens.push_back(d.rays[i]);
    ordered.emplace_back(detail::rank_of(n, gens), rays);
  }
  std::sort(ordered.begin(), ordered.end());

  for (const auto& [dim, rays] : ordered) {
    Cone c;
    c.rays = rays;
    std::vector<Vector> gens;
    for (auto i : rays) gens.push_back(d.rays[i]);
    auto geo = detail::analyze_cone(n, gens);
    c.dim = geo.dim;
    c.n_sigma_basis = geo.span_basis;
    c.m_perp_basis = kernel_basis(IntegerMatrix::from_rows(gens, n));
    c.l_section_basis = saturation_and_complement(c.m_perp_basis, n).complement;
    if (options.section_rule == SectionRule::alternate && !c.l_section_basis.empty()) {
      std::reverse(c.l_section_basis.begin(), c.l_section_basis.end());
      for (auto& x : c.l_section_basis.front()) x = -x;
      for (auto& l : c.l_section_basis)
        for (const auto& m : c.m_perp_basis)
          for (std::size_t j = 0; j < n; ++j) l[j] += m[j];
    }
    for (std::size_t f = 0; f < geo.facet_normals.size(); ++f) {
      Facet facet{geo.facet_normals[f], {}};
      for (auto p : geo.facet_sets[f]) facet.rays.push_back(rays[p]);
      c.facets.push_back(std::move(facet));
    }
    fan.index_[rays] = fan.cones_.size();
    fan.cones_.push_back(std::move(c));
  }

  fan.outgoing_.assign(fan.cones_.size(), {});
  for (std::size_t s = 0; s < fan.cones_.size(); ++s)
    for (std::size_t t = 0; t < fan.cones_.size(); ++t) {
      const Cone& cs = fan.cones_[s];
      const Cone& ct = fan.cones_[t];
      if (ct.dim != cs.dim + 1) continue;
      if (!std::includes(ct.rays.begin(), ct.rays.end(), cs.rays.begin(), cs.rays.end())) continue;
      fan.outgoing_[s].push_back(fan.incidences_.size());
      fan.incidences_.push_back({s, t, normal_generator(fan, s, t)});
    }
  return fan;
}

inline Fan parse_fan(std::string_view text, FanOptions options = {}) {
  return Fan::build(parse_fan_description(text), options);
}

inline ValidationReport validate_fan(const Fan& fan) { return validate_fan(fan.description()); }

/// Applies g (n x n, unimodular) to every ray; the cone structure is kept.
inline FanDescription transform_rays(const FanDescription& d, const IntegerMatrix& g) {
  if (g.rows() != d.rank || !is_unimodular(g)) throw std::invalid_argument("transform_rays: need a unimodular matrix");
  FanDescription out = d;
  for (auto& r : out.rays) r = g.apply(r);
  return out;
}

}  // namespace toric_bm
