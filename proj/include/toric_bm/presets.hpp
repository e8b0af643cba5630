#pragma once

// Named fan families used as a test corpus and by the CLI `preset` command.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "toric_bm/errors.hpp"
#include "toric_bm/fan.hpp"
#include "toric_bm/lattice.hpp"

namespace toric_bm {

namespace presets {

inline FanDescription torus(std::size_t n) {
  if (n < 1) throw FanError("torus: rank must be positive");
  return {n, {}, {}};
}

/// Rays e_1..e_n, -(e_1+...+e_n); maximal cones are all n-subsets.
inline FanDescription projective_space(std::size_t n) {
  if (n < 1) throw FanError("projective_space: dimension must be positive");
  FanDescription d{n, {}, {}};
  for (std::size_t i = 0; i < n; ++i) {
    Vector e(n);
    e[i] = 1;
    d.rays.push_back(std::move(e));
  }
  d.rays.push_back(Vector(n, Integer(-1)));
  for (std::size_t skip = n + 1; skip-- > 0;) {
    std::vector<std::size_t> cone;
    for (std::size_t i = 0; i <= n; ++i)
      if (i != skip) cone.push_back(i);
    d.max_cones.push_back(std::move(cone));
  }
  return d;
}

/// Rays e1, e2, -e1 + a e2, -e2 with four consecutive 2-cones.
inline FanDescription hirzebruch(long long a) {
  if (a < 0) throw FanError("hirzebruch: parameter must be nonnegative");
  FanDescription d{2, {}, {}};
  d.rays = {{1, 0}, {0, 1}, {-1, Integer(a)}, {0, -1}};
  d.max_cones = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
  return d;
}

/// Fan of P(w_0, ..., w_n). For w_0 = 1 the rays are e_1..e_n followed by
/// -(w_1, ..., w_n); otherwise they are the images of the standard basis in
/// Z^{n+1} / Z·w, made primitive.
inline FanDescription weighted_projective(const std::vector<long long>& weights) {
  if (weights.size() < 2) throw FanError("weighted_projective: need at least two weights");
  for (auto w : weights)
    if (w <= 0) throw FanError("weighted_projective: weights must be positive");
  const std::size_t n = weights.size() - 1;
  FanDescription d{n, {}, {}};
  if (weights[0] == 1) {
    for (std::size_t i = 0; i < n; ++i) {
      Vector e(n);
      e[i] = 1;
      d.rays.push_back(std::move(e));
    }
    Vector last(n);
    for (std::size_t i = 0; i < n; ++i) last[i] = -weights[i + 1];
    Integer g = vector_gcd(last);
    for (auto& x : last) x /= g;
    d.rays.push_back(std::move(last));
  } else {
    Vector w(weights.begin(), weights.end());
    Integer g = vector_gcd(w);
    for (auto& x : w) x /= g;
    auto split = saturation_and_complement({w}, n + 1);
    std::vector<Vector> cols{w};
    cols.insert(cols.end(), split.complement.begin(), split.complement.end());
    IntegerMatrix inv = inverse_unimodular(IntegerMatrix::from_columns(cols, n + 1));
    for (std::size_t i = 0; i <= n; ++i) {
      Vector r(n);
      for (std::size_t k = 0; k < n; ++k) r[k] = inv(k + 1, i);
      Integer rg = vector_gcd(r);
      for (auto& x : r) x /= rg;
      d.rays.push_back(std::move(r));
    }
  }
  for (std::size_t skip = n + 1; skip-- > 0;) {
    std::vector<std::size_t> cone;
    for (std::size_t i = 0; i <= n; ++i)
      if (i != skip) cone.push_back(i);
    d.max_cones.push_back(std::move(cone));
  }
  return d;
}

inline FanDescription punctured_plane() { return {2, {{1, 0}, {0, 1}}, {{0}, {1}}}; }

inline FanDescription quadric_cone_affine() { return {2, {{0, 1}, {2, -1}}, {{0, 1}}}; }

/// Product fan in N_f ⊕ N_g: cones are products of listed cones.
inline FanDescription product(const FanDescription& f, const FanDescription& g) {
  FanDescription d{f.rank + g.rank, {}, {}};
  for (const auto& r : f.rays) {
    Vector v = r;
    v.resize(d.rank);
    d.rays.push_back(std::move(v));
  }
  for (const auto& r : g.rays) {
    Vector v(f.rank);
    v.insert(v.end(), r.begin(), r.end());
    d.rays.push_back(std::move(v));
  }
  auto fc = f.max_cones.empty() ? std::vector<std::vector<std::size_t>>{{}} : f.max_cones;
  auto gc = g.max_cones.empty() ? std::vector<std::vector<std::size_t>>{{}} : g.max_cones;
  if (f.max_cones.empty() && g.max_cones.empty()) return d;
  for (const auto& a : fc)
    for (const auto& b : gc) {
      std::vector<std::size_t> c = a;
      for (auto i : b) c.push_back(i + f.rays.size());
      d.max_cones.push_back(std::move(c));
    }
  return d;
}

}  // namespace presets

/// Parses a preset in prefix form, e.g. {"product", "projective_space", "1",
/// "hirzebruch", "2"}, starting at `pos`; advances `pos` past it.
inline FanDescription preset_fan(const std::vector<std::string>& tokens, std::size_t& pos) {
  if (pos >= tokens.size()) throw FanError("missing preset name");
  const std::string name = tokens[pos++];
  auto is_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto next_int = [&](const char* what) -> long long {
    if (pos >= tokens.size() || !is_int(tokens[pos]))
      throw FanError("preset " + name + ": expected integer parameter " + what);
    return std::stoll(tokens[pos++]);
  };
  auto positive = [&](long long v) {
    if (v < 1) throw FanError("preset " + name + ": parameter must be positive");
    return static_cast<std::size_t>(v);
  };
  if (name == "projective_space") return presets::projective_space(positive(next_int("n")));
  if (name == "torus") return presets::torus(positive(next_int("n")));
  if (name == "hirzebruch") return presets::hirzebruch(next_int("a"));
  if (name == "punctured_plane") return presets::punctured_plane();
  if (name == "quadric_cone_affine") return presets::quadric_cone_affine();
  if (name == "weighted_projective") {
    std::vector<long long> w;
    while (pos < tokens.size() && is_int(tokens[pos])) w.push_back(std::stoll(tokens[pos++]));
    return presets::weighted_projective(w);
  }
  if (name == "product") {
    auto f = preset_fan(tokens, pos);
    auto g = preset_fan(tokens, pos);
    return presets::product(f, g);
  }
  throw FanError("unknown preset: " + name);
}

/// Whole-token-list form; trailing tokens are an error.
inline FanDescription preset_fan(const std::vector<std::string>& tokens) {
  std::size_t pos = 0;
  auto d = preset_fan(tokens, pos);
  if (pos != tokens.size()) throw FanError("unexpected preset parameter: " + tokens[pos]);
  return d;
}

}  // namespace toric_bm
