#pragma once

// Exact integer linear algebra: dense integer matrices, Smith normal form,
// kernels, saturations and lattice complements.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace toric_bm {

// Expression templates off: values are stored in containers and returned by
// value far more often than they are combined in long expressions.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Vector = std::vector<Integer>;

inline Integer dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Integer vector_gcd(const Vector& v) {
  Integer g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
  return abs(g);
}

inline bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

/// Dense row-major matrix of arbitrary-precision integers. Either dimension
/// may be zero; such a matrix is the zero map between the corresponding
/// free modules.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
      throw std::invalid_argument("IntegerMatrix: entry count does not match shape");
  }

  static IntegerMatrix identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Builds a matrix whose rows are the given vectors; `cols` fixes the width
  /// when the list is empty.
  static IntegerMatrix from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    IntegerMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("from_rows: ragged input");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static IntegerMatrix from_columns(const std::vector<Vector>& columns, std::size_t rows) {
    IntegerMatrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != rows) throw std::invalid_argument("from_columns: ragged input");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  const std::vector<Integer>& entries() const noexcept { return entries_; }

  Vector row(std::size_t r) const {
    return Vector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }
  Vector column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
    return v;
  }

  IntegerMatrix transpose() const {
    IntegerMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Integer& x) { return x == 0; });
  }

  Vector apply(const Vector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("apply: length mismatch");
    Vector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      Integer s = 0;
      for (std::size_t j = 0; j < cols_; ++j)
        if (!v[j].is_zero()) s += (*this)(i, j) * v[j];
      out[i] = std::move(s);
    }
    return out;
  }

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    IntegerMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Integer& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!b(k, j).is_zero()) c(i, j) += x * b(k, j);
      }
    return c;
  }

  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  // row dst += f * row src
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& f) {
    if (f.is_zero()) return;
    for (std::size_t j = 0; j < cols_; ++j)
      if (!(*this)(src, j).is_zero()) (*this)(dst, j) += f * (*this)(src, j);
  }
  // col dst += f * col src
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& f) {
    if (f.is_zero()) return;
    for (std::size_t i = 0; i < rows_; ++i)
      if (!(*this)(i, src).is_zero()) (*this)(i, dst) += f * (*this)(i, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
  }
  void negate_col(std::size_t c) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = -(*this)(i, c);
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

/// U * A * V = S with U, V unimodular and S diagonal with d_1 | d_2 | ...
struct SmithDecomposition {
  IntegerMatrix u;
  IntegerMatrix s;
  IntegerMatrix v;
  std::vector<Integer> diagonal;  // length min(rows, cols); zeros trail

  std::size_t rank() const {
    return static_cast<std::size_t>(
        std::count_if(diagonal.begin(), diagonal.end(), [](const Integer& d) { return d != 0; }));
  }
};

namespace detail {

// Transformation matrices are optional so the same reduction serves both the
// full decomposition and the divisor-only path. `u_inv` tracks U^{-1}.
struct SmithTracking {
  IntegerMatrix* u = nullptr;
  IntegerMatrix* u_inv = nullptr;
  IntegerMatrix* v = nullptr;
};

// Pivot rule: nonzero entry of least absolute value in the trailing
// submatrix, ties broken by (row, col) lexicographic order.
inline void smith_reduce(IntegerMatrix& s, SmithTracking track) {
  const std::size_t m = s.rows();
  const std::size_t n = s.cols();

  auto swap_rows = [&](std::size_t a, std::size_t b) {
    s.swap_rows(a, b);
    if (track.u) track.u->swap_rows(a, b);
    if (track.u_inv) track.u_inv->swap_cols(a, b);
  };
  auto add_row = [&](std::size_t dst, std::size_t src, const Integer& f) {
    s.add_row_multiple(dst, src, f);
    if (track.u) track.u->add_row_multiple(dst, src, f);
    if (track.u_inv) track.u_inv->add_col_multiple(src, dst, -f);
  };
  auto negate_row = [&](std::size_t r) {
    s.negate_row(r);
    if (track.u) track.u->negate_row(r);
    if (track.u_inv) track.u_inv->negate_col(r);
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    s.swap_cols(a, b);
    if (track.v) track.v->swap_cols(a, b);
  };
  auto add_col = [&](std::size_t dst, std::size_t src, const Integer& f) {
    s.add_col_multiple(dst, src, f);
    if (track.v) track.v->add_col_multiple(dst, src, f);
  };

  const std::size_t steps = std::min(m, n);
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      std::optional<std::pair<std::size_t, std::size_t>> pivot;
      Integer best;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          const Integer& x = s(i, j);
          if (x.is_zero()) continue;
          Integer a = abs(x);
          if (!pivot || a < best) {
            pivot = {i, j};
            best = std::move(a);
          }
        }
      if (!pivot) return;
      swap_rows(t, pivot->first);
      swap_cols(t, pivot->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (s(i, t).is_zero()) continue;
        Integer q = s(i, t) / s(t, t);
        add_row(i, t, -q);
        if (!s(i, t).is_zero()) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (s(t, j).is_zero()) continue;
        Integer q = s(t, j) / s(t, t);
        add_col(j, t, -q);
        if (!s(t, j).is_zero()) clean = false;
      }
      if (!clean) continue;

      std::optional<std::size_t> offending_row;
      for (std::size_t i = t + 1; i < m && !offending_row; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!(s(i, j) % s(t, t)).is_zero()) {
            offending_row = i;
            break;
          }
      if (offending_row) {
        add_row(t, *offending_row, Integer(1));
        continue;
      }
      break;
    }
    if (s(t, t) < 0) negate_row(t);
  }
}

inline std::vector<Integer> read_diagonal(const IntegerMatrix& s) {
  std::vector<Integer> d(std::min(s.rows(), s.cols()));
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = s(i, i);
  return d;
}

}  // namespace detail

inline SmithDecomposition smith_normal_form(const IntegerMatrix& a) {
  SmithDecomposition out{IntegerMatrix::identity(a.rows()), a, IntegerMatrix::identity(a.cols()), {}};
  detail::smith_reduce(out.s, {&out.u, nullptr, &out.v});
  out.diagonal = detail::read_diagonal(out.s);
  return out;
}

namespace detail {

using SparseRow = std::vector<std::pair<std::size_t, Integer>>;

// row <- row - f * pivot_row, both sorted by column.
inline SparseRow axpy(const SparseRow& row, const Integer& f, const SparseRow& pivot_row) {
  SparseRow out;
  out.reserve(row.size() + pivot_row.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < row.size() || j < pivot_row.size()) {
    if (j == pivot_row.size() || (i < row.size() && row[i].first < pivot_row[j].first)) {
      out.push_back(row[i++]);
    } else if (i == row.size() || pivot_row[j].first < row[i].first) {
      out.emplace_back(pivot_row[j].first, -f * pivot_row[j].second);
      ++j;
    } else {
      Integer x = row[i].second - f * pivot_row[j].second;
      if (!x.is_zero()) out.emplace_back(row[i].first, std::move(x));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace detail

/// Elementary divisors of `a` (the Smith diagonal, length min(rows, cols)).
/// Unit pivots are eliminated sparsely first; whatever survives goes through
/// the dense reduction. Agrees with smith_normal_form(a).diagonal.
inline std::vector<Integer> elementary_divisors(const IntegerMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::vector<detail::SparseRow> rows(m);
  std::vector<std::vector<std::size_t>> col_rows(n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!a(i, j).is_zero()) {
        rows[i].emplace_back(j, a(i, j));
        col_rows[j].push_back(i);
      }
  std::vector<char> row_alive(m, 1);
  std::vector<char> col_alive(n, 1);
  std::size_t units = 0;

  auto entry_in = [](const detail::SparseRow& row, std::size_t col) -> const Integer* {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const auto& e, std::size_t c) { return e.first < c; });
    return (it != row.end() && it->first == col) ? &it->second : nullptr;
  };

  for (;;) {
    std::optional<std::pair<std::size_t, std::size_t>> pivot;
    std::size_t best_cost = 0;
    for (std::size_t i = 0; i < m && !(pivot && best_cost == 0); ++i) {
      if (!row_alive[i]) continue;
      for (const auto& [j, x] : rows[i]) {
        if (!col_alive[j] || !(x == 1 || x == -1)) continue;
        std::size_t cost = (rows[i].size() - 1) * (col_rows[j].size() - 1);
        if (!pivot || cost < best_cost) {
          pivot = {i, j};
          best_cost = cost;
          if (cost == 0) break;
        }
      }
    }
    if (!pivot) break;
    const auto [pr, pc] = *pivot;
    const Integer p = *entry_in(rows[pr], pc);
    const std::vector<std::size_t> touched = col_rows[pc];
    for (std::size_t r : touched) {
      if (r == pr || !row_alive[r]) continue;
      const Integer* x = entry_in(rows[r], pc);
      if (!x) continue;
      Integer f = *x * p;
      rows[r] = detail::axpy(rows[r], f, rows[pr]);
    }
    row_alive[pr] = 0;
    col_alive[pc] = 0;
    ++units;
    // Fill-in only appears in the pivot row's columns; rebuild their row lists.
    for (const auto& e : rows[pr]) {
      if (e.first == pc || !col_alive[e.first]) continue;
      auto& list = col_rows[e.first];
      list.insert(list.end(), touched.begin(), touched.end());
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
      list.erase(std::remove_if(list.begin(), list.end(),
                                [&](std::size_t r) { return !row_alive[r] || !entry_in(rows[r], e.first); }),
                 list.end());
    }
  }

  std::vector<std::size_t> live_rows;
  std::vector<std::size_t> col_map(n, n);
  std::size_t live_cols = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (!row_alive[i]) continue;
    bool any = false;
    for (const auto& [j, x] : rows[i])
      if (col_alive[j]) {
        any = true;
        if (col_map[j] == n) col_map[j] = live_cols++;
      }
    if (any) live_rows.push_back(i);
  }
  IntegerMatrix rest(live_rows.size(), live_cols);
  for (std::size_t r = 0; r < live_rows.size(); ++r)
    for (const auto& [j, x] : rows[live_rows[r]])
      if (col_alive[j]) rest(r, col_map[j]) = x;
  detail::smith_reduce(rest, {});
  std::vector<Integer> diag(std::min(m, n), Integer(0));
  std::size_t k = 0;
  for (; k < units; ++k) diag[k] = 1;
  for (const auto& d : detail::read_diagonal(rest)) {
    if (d.is_zero()) break;
    diag[k++] = d;
  }
  return diag;
}

inline std::size_t rank(const IntegerMatrix& a) {
  auto d = elementary_divisors(a);
  return static_cast<std::size_t>(std::count_if(d.begin(), d.end(), [](const Integer& x) { return x != 0; }));
}

/// Rank of `a` reduced modulo the prime `q` (q < 2^32).
inline std::size_t rank_mod_prime(const IntegerMatrix& a, std::uint64_t q) {
  if (q < 2 || q >= (std::uint64_t{1} << 32)) throw std::invalid_argument("rank_mod_prime: modulus out of range");
  using u64 = std::uint64_t;
  using u128 = unsigned __int128;
  auto reduce = [q](const Integer& x) -> u64 {
    Integer r = x % q;
    if (r < 0) r += q;
    return r.convert_to<u64>();
  };
  auto pow_mod = [q](u64 b, u64 e) {
    u64 r = 1;
    while (e) {
      if (e & 1) r = static_cast<u64>(static_cast<u128>(r) * b % q);
      b = static_cast<u64>(static_cast<u128>(b) * b % q);
      e >>= 1;
    }
    return r;
  };
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::vector<std::vector<std::pair<std::size_t, u64>>> rows(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (u64 x = reduce(a(i, j))) rows[i].emplace_back(j, x);

  // Eliminate row by row: each surviving row is reduced against the stored
  // pivot rows (indexed by leading column) until it is zero or gets a new lead.
  std::vector<std::vector<std::pair<std::size_t, u64>>> pivots(n);
  std::size_t r = 0;
  for (auto& row : rows) {
    while (!row.empty()) {
      const std::size_t lead = row.front().first;
      auto& prow = pivots[lead];
      if (prow.empty()) {
        u64 inv = pow_mod(row.front().second, q - 2);
        for (auto& e : row) e.second = static_cast<u64>(static_cast<u128>(e.second) * inv % q);
        prow = std::move(row);
        ++r;
        break;
      }
      const u64 f = row.front().second;
      std::vector<std::pair<std::size_t, u64>> out;
      std::size_t i = 0;
      std::size_t j = 0;
      while (i < row.size() || j < prow.size()) {
        if (j == prow.size() || (i < row.size() && row[i].first < prow[j].first)) {
          out.push_back(row[i++]);
        } else {
          const u64 sub = static_cast<u64>(static_cast<u128>(f) * prow[j].second % q);
          u64 x = (i < row.size() && row[i].first == prow[j].first) ? row[i++].second : 0;
          x = (x + q - sub) % q;
          if (x) out.emplace_back(prow[j].first, x);
          ++j;
        }
      }
      row = std::move(out);
    }
  }
  return r;
}

/// Fraction-free determinant (Bareiss).
inline Integer determinant(const IntegerMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntegerMatrix m = a;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m(p, k).is_zero()) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

inline bool is_unimodular(const IntegerMatrix& a) {
  if (a.rows() != a.cols()) return false;
  Integer d = determinant(a);
  return d == 1 || d == -1;
}

/// Inverse of a unimodular matrix; throws if `a` is not unimodular.
inline IntegerMatrix inverse_unimodular(const IntegerMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse_unimodular: matrix not square");
  auto snf = smith_normal_form(a);
  for (const auto& d : snf.diagonal)
    if (d != 1) throw std::invalid_argument("inverse_unimodular: matrix is not unimodular");
  return snf.v * snf.u;
}

/// Basis of the saturated integer kernel {v : A v = 0}.
inline std::vector<Vector> kernel_basis(const IntegerMatrix& a) {
  auto snf = smith_normal_form(a);
  const std::size_t r = snf.rank();
  std::vector<Vector> basis;
  for (std::size_t j = r; j < a.cols(); ++j) basis.push_back(snf.v.column(j));
  return basis;
}

struct SaturationSplit {
  std::vector<Vector> saturation;  // basis of span(B) ∩ Z^n
  std::vector<Vector> complement;  // saturation ⊕ complement = Z^n
};

inline SaturationSplit saturation_and_complement(const std::vector<Vector>& generators, std::size_t ambient_rank) {
  IntegerMatrix a = IntegerMatrix::from_columns(generators, ambient_rank);
  IntegerMatrix s = a;
  IntegerMatrix u_inv = IntegerMatrix::identity(ambient_rank);
  detail::smith_reduce(s, {nullptr, &u_inv, nullptr});
  std::size_t r = 0;
  while (r < std::min(s.rows(), s.cols()) && !s(r, r).is_zero()) ++r;
  SaturationSplit out;
  for (std::size_t j = 0; j < ambient_rank; ++j)
    (j < r ? out.saturation : out.complement).push_back(u_inv.column(j));
  return out;
}

}  // namespace toric_bm
