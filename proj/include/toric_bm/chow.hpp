#pragma once

// The equivariant Chow module A^T_*(X) of a toric variety as a free abelian
// group with basis Sym(L_sigma) · x_sigma over all cones sigma, and its
// structure as a module over Sym M.
//
// Generators x_sigma satisfy, for m in M(sigma) = sigma^perp ∩ M,
//
//   m · x_sigma = sum over sigma ≺ tau (dim tau = dim sigma + 1)
//                 of <m, n_{sigma,tau}> x_tau.
//
// A basis element (sigma, u) stands for l^u · x_sigma, where l_1..l_d is the
// chosen basis of L_sigma. It sits in homological degree 2(codim sigma - |u|).

#include <compare>
#include <cstddef>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "toric_bm/fan.hpp"
#include "toric_bm/lattice.hpp"

namespace toric_bm {

struct ChowBasisElement {
  std::size_t cone = 0;
  std::vector<unsigned> exponents;

  friend auto operator<=>(const ChowBasisElement&, const ChowBasisElement&) = default;
  friend bool operator==(const ChowBasisElement&, const ChowBasisElement&) = default;
};

/// Finite integer combination of basis elements; zero coefficients are never
/// stored.
class ChowElement {
 public:
  using Terms = std::map<ChowBasisElement, Integer>;

  ChowElement() = default;
  explicit ChowElement(ChowBasisElement e, Integer c = 1) { add(std::move(e), c); }

  void add(const ChowBasisElement& e, const Integer& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  void add(const ChowElement& other, const Integer& scale = 1) {
    if (scale.is_zero()) return;
    for (const auto& [e, c] : other.terms_) add(e, c * scale);
  }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Integer coefficient(const ChowBasisElement& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  friend bool operator==(const ChowElement&, const ChowElement&) = default;

 private:
  Terms terms_;
};

/// A formal Sym M-combination of generators: each term is
/// coefficient · (product of characters) · x_cone.
struct SymTerm {
  Integer coefficient = 1;
  std::vector<Vector> factors;
  std::size_t cone = 0;
};
using SymExpression = std::vector<SymTerm>;

/// act() memoizes results behind a mutex, so one instance may be shared by
/// concurrent readers. Holds a pointer to the fan, which must outlive it.
class ChowModule {
 public:
  explicit ChowModule(const Fan& fan) : fan_(&fan) {
    const std::size_t n = fan.rank();
    for (const auto& c : fan.cones()) {
      std::vector<Vector> cols = c.m_perp_basis;
      cols.insert(cols.end(), c.l_section_basis.begin(), c.l_section_basis.end());
      split_.push_back(inverse_unimodular(IntegerMatrix::from_columns(cols, n)));
    }
  }

  const Fan& fan() const noexcept { return *fan_; }

  int degree(const ChowBasisElement& e) const {
    const auto& c = fan_->cone(e.cone);
    int total = 0;
    for (auto x : e.exponents) total += static_cast<int>(x);
    return 2 * (static_cast<int>(c.codim(fan_->rank())) - total);
  }

  /// Basis of A_k ordered by cone index, then lexicographic exponents.
  std::vector<ChowBasisElement> basis_in_degree(int k) const {
    std::vector<ChowBasisElement> out;
    if (k % 2 != 0 || k > 2 * static_cast<int>(fan_->rank())) return out;
    for (std::size_t ci = 0; ci < fan_->cones().size(); ++ci) {
      const auto& c = fan_->cone(ci);
      const int sym_degree = static_cast<int>(c.codim(fan_->rank())) - k / 2;
      if (sym_degree < 0) continue;
      if (c.dim == 0) {
        if (sym_degree == 0) out.push_back({ci, {}});
        continue;
      }
      std::vector<unsigned> u(c.dim, 0);
      compositions(ci, 0, static_cast<unsigned>(sym_degree), u, out);
    }
    return out;
  }

  /// m · e in normal form.
  ChowElement act(const Vector& m, const ChowBasisElement& e) const {
    if (m.size() != fan_->rank()) throw std::invalid_argument("act: character has wrong rank");
    Key key{e.cone, e.exponents, m};
    {
      std::lock_guard lock(memo_mutex_);
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
    }
    ChowElement result = act_uncached(m, e);
    std::lock_guard lock(memo_mutex_);
    memo_.emplace(std::move(key), result);
    return result;
  }

  ChowElement act(const Vector& m, const ChowElement& x) const {
    ChowElement out;
    for (const auto& [e, c] : x.terms()) out.add(act(m, e), c);
    return out;
  }

  /// Class of a formal expression in the module.
  ChowElement normal_form(const SymExpression& expr) const {
    ChowElement out;
    for (const auto& t : expr) {
      ChowElement x(ChowBasisElement{t.cone, std::vector<unsigned>(fan_->cone(t.cone).dim, 0)});
      for (const auto& m : t.factors) x = act(m, x);
      out.add(x, t.coefficient);
    }
    return out;
  }

  /// Re-expands each basis element as l^u · x_sigma and normalizes again.
  ChowElement normal_form(const ChowElement& x) const {
    SymExpression expr;
    for (const auto& [e, c] : x.terms()) {
      SymTerm t{c, {}, e.cone};
      const auto& sec = fan_->cone(e.cone).l_section_basis;
      for (std::size_t j = 0; j < e.exponents.size(); ++j)
        for (unsigned r = 0; r < e.exponents[j]; ++r) t.factors.push_back(sec[j]);
      expr.push_back(std::move(t));
    }
    return normal_form(expr);
  }

 private:
  using Key = std::tuple<std::size_t, std::vector<unsigned>, Vector>;

  void compositions(std::size_t cone, std::size_t pos, unsigned remaining, std::vector<unsigned>& u,
                    std::vector<ChowBasisElement>& out) const {
    if (pos + 1 == u.size()) {
      u[pos] = remaining;
      out.push_back({cone, u});
      return;
    }
    for (unsigned x = 0; x <= remaining; ++x) {
      u[pos] = x;
      compositions(cone, pos + 1, remaining - x, u, out);
    }
    u[pos] = 0;
  }

  // l^u · x_tau, where l are the section vectors of `from`.
  ChowElement push(std::size_t from, const std::vector<unsigned>& u, std::size_t tau) const {
    ChowElement x(ChowBasisElement{tau, std::vector<unsigned>(fan_->cone(tau).dim, 0)});
    const auto& sec = fan_->cone(from).l_section_basis;
    for (std::size_t j = 0; j < u.size(); ++j)
      for (unsigned r = 0; r < u[j]; ++r) x = act(sec[j], x);
    return x;
  }

  ChowElement act_uncached(const Vector& m, const ChowBasisElement& e) const {
    const std::size_t n = fan_->rank();
    const Cone& c = fan_->cone(e.cone);
    const std::size_t perp = c.m_perp_basis.size();
    Vector coords = split_[e.cone].apply(m);

    ChowElement out;
    for (std::size_t j = 0; j < c.dim; ++j) {
      const Integer& b = coords[perp + j];
      if (b.is_zero()) continue;
      ChowBasisElement bumped = e;
      ++bumped.exponents[j];
      out.add(bumped, b);
    }
    Vector m_perp(n);
    for (std::size_t i = 0; i < perp; ++i) {
      if (coords[i].is_zero()) continue;
      for (std::size_t k = 0; k < n; ++k) m_perp[k] += coords[i] * c.m_perp_basis[i][k];
    }
    if (is_zero(m_perp)) return out;
    for (auto idx : fan_->incidences_from(e.cone)) {
      const auto& inc = fan_->incidences()[idx];
      Integer w = dot(m_perp, inc.normal);
      if (w.is_zero()) continue;
      out.add(push(e.cone, e.exponents, inc.coface), w);
    }
    return out;
  }

  const Fan* fan_;
  std::vector<IntegerMatrix> split_;  // coordinates against (M(sigma) | L_sigma)
  mutable std::mutex memo_mutex_;
  mutable std::map<Key, ChowElement> memo_;
};

}  // namespace toric_bm
