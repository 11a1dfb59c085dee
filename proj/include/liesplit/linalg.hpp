#pragma once

// Exact sparse row reduction over the rationals.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "liesplit/scalar.hpp"

namespace liesplit {

using Vector = std::vector<Scalar>;

/// Sparse row: strictly increasing column indices, no stored zeros.
class SparseRow {
 public:
  using Entry = std::pair<std::size_t, Scalar>;

  SparseRow() = default;

  static SparseRow from_dense(const Vector& v) {
    SparseRow r;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!is_zero(v[i])) r.entries_.emplace_back(i, v[i]);
    return r;
  }

  /// Builds from unsorted entries, summing duplicates.
  static SparseRow from_entries(std::vector<Entry> raw) {
    std::sort(raw.begin(), raw.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    SparseRow r;
    for (auto& [c, v] : raw) {
      if (!r.entries_.empty() && r.entries_.back().first == c) {
        r.entries_.back().second += v;
        if (is_zero(r.entries_.back().second)) r.entries_.pop_back();
      } else if (!is_zero(v)) {
        r.entries_.emplace_back(c, std::move(v));
      }
    }
    return r;
  }

  [[nodiscard]] bool empty() const { return entries_.empty(); }
  [[nodiscard]] std::size_t size() const { return entries_.size(); }
  [[nodiscard]] const std::vector<Entry>& entries() const { return entries_; }
  [[nodiscard]] std::size_t lead() const { return entries_.front().first; }
  [[nodiscard]] const Scalar& lead_value() const { return entries_.front().second; }

  [[nodiscard]] Scalar at(std::size_t col) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), col,
                               [](const Entry& e, std::size_t c) { return e.first < c; });
    if (it != entries_.end() && it->first == col) return it->second;
    return Scalar(0);
  }

  [[nodiscard]] Vector to_dense(std::size_t n) const {
    Vector v(n);
    for (const auto& [c, x] : entries_)
      if (c < n) v[c] = x;
    return v;
  }

  void scale(const Scalar& s) {
    for (auto& e : entries_) e.second *= s;
  }

  /// this -= factor * other
  void sub_multiple(const Scalar& factor, const SparseRow& other) {
    std::vector<Entry> out;
    out.reserve(entries_.size() + other.entries_.size());
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() || b != other.entries_.end()) {
      if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
        out.push_back(std::move(*a++));
      } else if (a == entries_.end() || b->first < a->first) {
        out.emplace_back(b->first, -factor * b->second);
        ++b;
      } else {
        Scalar v = a->second - factor * b->second;
        if (!is_zero(v)) out.emplace_back(a->first, std::move(v));
        ++a;
        ++b;
      }
    }
    entries_ = std::move(out);
  }

  friend bool operator==(const SparseRow&, const SparseRow&) = default;

 private:
  std::vector<Entry> entries_;
};

/// Incremental row echelon form. Rows are inserted one at a time and kept
/// with distinct leading columns (pivot normalized to 1); `reduce()` turns the
/// stored rows into reduced row echelon form. Results depend only on the
/// sequence of inserted rows.
class Echelon {
 public:
  explicit Echelon(std::size_t ncols) : ncols_(ncols) {}

  [[nodiscard]] std::size_t cols() const { return ncols_; }
  [[nodiscard]] std::size_t rank() const { return rows_.size(); }
  [[nodiscard]] const std::map<std::size_t, SparseRow>& rows() const { return rows_; }

  /// Returns true when the row was independent of the stored ones.
  bool insert(SparseRow row) {
    while (!row.empty()) {
      auto it = rows_.find(row.lead());
      if (it == rows_.end()) {
        Scalar inv = 1 / row.lead_value();
        row.scale(inv);
        rows_.emplace(row.lead(), std::move(row));
        reduced_ = false;
        return true;
      }
      Scalar f = row.lead_value();
      row.sub_multiple(f, it->second);
    }
    return false;
  }

  bool insert(const Vector& v) { return insert(SparseRow::from_dense(v)); }

  /// Would `row` be independent? Does not modify the basis.
  [[nodiscard]] bool independent(SparseRow row) const {
    while (!row.empty()) {
      auto it = rows_.find(row.lead());
      if (it == rows_.end()) return true;
      Scalar f = row.lead_value();
      row.sub_multiple(f, it->second);
    }
    return false;
  }

  /// Back-substitution into reduced row echelon form.
  void reduce() {
    if (reduced_) return;
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
      SparseRow& row = it->second;
      std::size_t k = 1;
      while (k < row.size()) {
        std::size_t col = row.entries()[k].first;
        auto piv = rows_.find(col);
        if (piv == rows_.end()) {
          ++k;
          continue;
        }
        Scalar f = row.entries()[k].second;
        row.sub_multiple(f, piv->second);
      }
    }
    reduced_ = true;
  }

  [[nodiscard]] std::vector<std::size_t> pivots() const {
    std::vector<std::size_t> p;
    p.reserve(rows_.size());
    for (const auto& [c, r] : rows_) p.push_back(c);
    return p;
  }

  /// Kernel basis of the stored rows restricted to the first `n` columns
  /// (n defaults to all columns). One vector per free column, ascending;
  /// each has a 1 at its free column and 0 at the other free columns.
  [[nodiscard]] std::vector<Vector> kernel(std::optional<std::size_t> n = std::nullopt) {
    reduce();
    std::size_t width = n.value_or(ncols_);
    std::vector<bool> is_pivot(width, false);
    for (const auto& [c, r] : rows_)
      if (c < width) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < width; ++f) {
      if (is_pivot[f]) continue;
      Vector x(width);
      x[f] = 1;
      for (const auto& [c, r] : rows_)
        if (c < width) x[c] = -r.at(f);
      basis.push_back(std::move(x));
    }
    return basis;
  }

 private:
  std::size_t ncols_;
  std::map<std::size_t, SparseRow> rows_;
  bool reduced_ = true;
};

/// Solution set of A x = b.
struct AffineSolution {
  bool feasible = false;
  Vector particular;               // empty when infeasible
  std::vector<Vector> homogeneous;  // kernel of A
};

/// Solves an augmented system whose rows hold A in columns [0, n) and b in
/// column n.
inline AffineSolution solve_augmented(Echelon& system, std::size_t n) {
  AffineSolution sol;
  system.reduce();
  sol.homogeneous = system.kernel(n);
  sol.feasible = system.rows().find(n) == system.rows().end();
  if (sol.feasible) {
    sol.particular.assign(n, Scalar(0));
    for (const auto& [c, r] : system.rows()) sol.particular[c] = r.at(n);
  }
  return sol;
}

inline std::size_t rank_of(const std::vector<Vector>& vectors, std::size_t n) {
  Echelon e(n);
  for (const auto& v : vectors) e.insert(v);
  return e.rank();
}

/// Reduced echelon basis of the span of `vectors`.
inline std::vector<Vector> span_basis(const std::vector<Vector>& vectors, std::size_t n) {
  Echelon e(n);
  for (const auto& v : vectors) e.insert(v);
  e.reduce();
  std::vector<Vector> out;
  for (const auto& [c, r] : e.rows()) out.push_back(r.to_dense(n));
  return out;
}

/// Kernel of the matrix whose rows are given.
inline std::vector<Vector> kernel_of(const std::vector<Vector>& rows, std::size_t n) {
  Echelon e(n);
  for (const auto& r : rows) e.insert(r);
  return e.kernel();
}

inline bool span_contains(const std::vector<Vector>& basis, const Vector& v) {
  Echelon e(v.size());
  for (const auto& b : basis) e.insert(b);
  return !e.independent(SparseRow::from_dense(v));
}

/// Basis of span(a) ∩ span(b), as reduced echelon rows.
inline std::vector<Vector> intersect(const std::vector<Vector>& a, const std::vector<Vector>& b,
                                     std::size_t n) {
  auto ba = span_basis(a, n);
  auto bb = span_basis(b, n);
  if (ba.empty() || bb.empty()) return {};
  // Columns: coefficients of ba then bb; rows: coordinates.
  std::size_t k = ba.size() + bb.size();
  std::vector<Vector> rows(n, Vector(k));
  for (std::size_t j = 0; j < ba.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) rows[i][j] = ba[j][i];
  for (std::size_t j = 0; j < bb.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) rows[i][ba.size() + j] = -bb[j][i];
  auto ker = kernel_of(rows, k);
  std::vector<Vector> out;
  for (const auto& x : ker) {
    Vector v(n);
    for (std::size_t j = 0; j < ba.size(); ++j)
      for (std::size_t i = 0; i < n; ++i) v[i] += x[j] * ba[j][i];
    out.push_back(std::move(v));
  }
  return span_basis(out, n);
}

}  // namespace liesplit

namespace liesplit {

/// Inverse of the square matrix whose columns are `columns`; returns rows of
/// the inverse. Throws std::domain_error when singular.
inline std::vector<Vector> inverse_of_columns(const std::vector<Vector>& columns) {
  const std::size_t n = columns.size();
  std::vector<Vector> a(n, Vector(2 * n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) a[i][j] = columns[j][i];
  for (std::size_t i = 0; i < n; ++i) a[i][n + i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(a[p][c])) ++p;
    if (p == n) throw std::domain_error("singular basis");
    std::swap(a[p], a[c]);
    Scalar inv = 1 / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || is_zero(a[r][c])) continue;
      Scalar f = a[r][c];
      for (std::size_t k = c; k < 2 * n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  std::vector<Vector> out(n, Vector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = a[i][n + j];
  return out;
}

}  // namespace liesplit
