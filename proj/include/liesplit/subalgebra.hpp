#pragma once

// Subspaces and subsuperalgebras of a structure-constant superalgebra.

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "liesplit/linalg.hpp"
#include "liesplit/superalgebra.hpp"

namespace liesplit {

/// A subspace of g with bracket flags verified by exact sweeps.
struct SubspaceReport {
  std::vector<Vector> basis;  // reduced echelon, coordinates in g
  std::size_t dimension = 0;
  bool is_ideal = false;
  bool is_subalgebra = false;
};

namespace detail {

// Projection onto coordinates of a greedy complement of span(vectors):
// returns (complement indices, projection rows).
inline std::pair<std::vector<std::size_t>, std::vector<Vector>> greedy_quotient(
    const std::vector<Vector>& vectors, std::size_t n) {
  Echelon e(n);
  for (const auto& v : vectors) e.insert(v);
  std::vector<std::size_t> complement;
  for (std::size_t i = 0; i < n; ++i) {
    Vector u(n);
    u[i] = 1;
    if (e.insert(u)) complement.push_back(i);
  }
  std::vector<Vector> columns = vectors;
  for (auto i : complement) {
    Vector u(n);
    u[i] = 1;
    columns.push_back(std::move(u));
  }
  std::vector<Vector> proj;
  if (columns.empty()) return {complement, proj};
  auto inv = inverse_of_columns(columns);
  for (std::size_t a = 0; a < complement.size(); ++a) proj.push_back(inv[vectors.size() + a]);
  return {complement, proj};
}

inline Vector apply(const std::vector<Vector>& rows, const Vector& v) {
  Vector out(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!is_zero(rows[i][j]) && !is_zero(v[j])) out[i] += rows[i][j] * v[j];
  return out;
}

inline bool is_null(const Vector& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

}  // namespace detail

inline bool closed_under(const LieSuperalgebra& g, const std::vector<Vector>& span,
                         const std::vector<Vector>& acting) {
  for (const auto& x : acting)
    for (const auto& y : span)
      if (!span_contains(span, g.bracket(x, y))) return false;
  return true;
}

inline SubspaceReport make_report(const LieSuperalgebra& g, const std::vector<Vector>& vectors) {
  SubspaceReport r;
  r.basis = span_basis(vectors, g.dim());
  r.dimension = r.basis.size();
  std::vector<Vector> all;
  for (std::size_t i = 0; i < g.dim(); ++i) all.push_back(g.unit(i));
  r.is_subalgebra = closed_under(g, r.basis, r.basis);
  r.is_ideal = closed_under(g, r.basis, all);
  return r;
}

/// Embedding of h into g given by spanning coordinate vectors. Construction
/// rejects rank-deficient spanning sets; closure and homogeneity are checked
/// by validate_subalgebra. Derived data: greedy complement (standard basis
/// vectors in declared order) and the projection g -> g/h in that basis.
class SubalgebraEmbedding {
 public:
  SubalgebraEmbedding(const LieSuperalgebra& g, std::vector<Vector> vectors)
      : parent_(std::make_shared<LieSuperalgebra>(g)), vectors_(std::move(vectors)) {
    for (const auto& v : vectors_)
      if (v.size() != g.dim()) throw InputError("subalgebra vector has wrong length");
    if (rank_of(vectors_, g.dim()) != vectors_.size())
      throw InputError("subalgebra spanning set is rank-deficient (duplicate generators?)");
    auto [comp, proj] = detail::greedy_quotient(vectors_, g.dim());
    complement_ = std::move(comp);
    projection_ = std::move(proj);
    for (const auto& v : vectors_) {
      int p = g.parity_of(v);
      if (p == 0) even_.push_back(v);
      if (p == 1) odd_.push_back(v);
    }
  }

  /// h spanned by basis elements with the given labels.
  static SubalgebraEmbedding from_labels(const LieSuperalgebra& g,
                                         const std::vector<std::string>& labels) {
    std::vector<Vector> vs;
    for (const auto& l : labels) vs.push_back(g.unit(g.index_of(l)));
    return SubalgebraEmbedding(g, std::move(vs));
  }

  [[nodiscard]] const LieSuperalgebra& parent() const { return *parent_; }
  [[nodiscard]] const std::vector<Vector>& vectors() const { return vectors_; }
  [[nodiscard]] std::size_t dim() const { return vectors_.size(); }
  [[nodiscard]] const std::vector<Vector>& even_part() const { return even_; }
  [[nodiscard]] const std::vector<Vector>& odd_part() const { return odd_; }
  /// Indices of the standard basis vectors spanning the chosen complement.
  [[nodiscard]] const std::vector<std::size_t>& complement() const { return complement_; }
  /// Rows: coordinates of g -> g/h in the complement basis.
  [[nodiscard]] const std::vector<Vector>& projection() const { return projection_; }
  [[nodiscard]] std::size_t quotient_dim() const { return complement_.size(); }

  [[nodiscard]] Vector project(const Vector& v) const { return detail::apply(projection_, v); }

 private:
  std::shared_ptr<const LieSuperalgebra> parent_;
  std::vector<Vector> vectors_;
  std::vector<Vector> even_, odd_;
  std::vector<std::size_t> complement_;
  std::vector<Vector> projection_;
};

/// Complement basis and projection matrix realizing g/h.
struct QuotientBasis {
  std::vector<std::size_t> complement;
  std::vector<Vector> projection;
};

inline QuotientBasis quotient_basis(const SubalgebraEmbedding& h) {
  return {h.complement(), h.projection()};
}

/// Closure and homogeneity violations. Witnesses index h's spanning vectors.
inline std::vector<Violation> validate_subalgebra(const SubalgebraEmbedding& h) {
  const auto& g = h.parent();
  std::vector<Violation> out;
  const auto& vs = h.vectors();
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (g.parity_of(vs[i]) < 0) out.push_back({Violation::Kind::Homogeneity, {i}, vs[i]});
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i; j < vs.size(); ++j) {
      Vector r = h.project(g.bracket(vs[i], vs[j]));
      if (!detail::is_null(r)) out.push_back({Violation::Kind::Closure, {i, j}, r});
    }
  return out;
}

/// {Z in g0 : [Z, X] = 0 for all X in g1}, as the kernel of the stacked
/// adjoint matrices.
inline SubspaceReport adjoint_kernel_on_odd(const LieSuperalgebra& g) {
  const std::size_t ne = g.dim_even();
  std::vector<Vector> rows;
  for (std::size_t k = 0; k < g.dim_odd(); ++k) {
    std::size_t x = g.odd_generator(k);
    std::vector<Vector> block(g.dim(), Vector(ne));
    for (std::size_t j = 0; j < ne; ++j)
      for (const auto& [c, v] : g.bracket(j, x)) block[c][j] += v;
    for (auto& r : block)
      if (!detail::is_null(r)) rows.push_back(std::move(r));
  }
  std::vector<Vector> kernel = ne ? kernel_of(rows, ne) : std::vector<Vector>{};
  std::vector<Vector> lifted;
  for (const auto& z : kernel) {
    Vector v(g.dim());
    for (std::size_t j = 0; j < ne; ++j) v[j] = z[j];
    lifted.push_back(std::move(v));
  }
  return make_report(g, lifted);
}

/// Largest ideal of g contained in h: a_0 = h, a_{k+1} = {X in a_k :
/// [g, X] in a_k}, iterated to a fixed point. Each parity is handled
/// separately so the result stays homogeneous.
inline SubspaceReport largest_ideal_in(const SubalgebraEmbedding& h) {
  const auto& g = h.parent();
  const std::size_t n = g.dim();
  std::vector<Vector> even = span_basis(h.even_part(), n);
  std::vector<Vector> odd = span_basis(h.odd_part(), n);
  while (true) {
    std::vector<Vector> current = even;
    current.insert(current.end(), odd.begin(), odd.end());
    if (current.empty()) break;
    auto [comp, proj] = detail::greedy_quotient(current, n);
    auto shrink = [&](const std::vector<Vector>& part) {
      if (part.empty() || comp.empty()) return part;
      std::vector<Vector> rows;
      for (std::size_t t = 0; t < n; ++t) {
        std::vector<Vector> block(comp.size(), Vector(part.size()));
        for (std::size_t i = 0; i < part.size(); ++i) {
          Vector r = detail::apply(proj, g.bracket(g.unit(t), part[i]));
          for (std::size_t a = 0; a < comp.size(); ++a) block[a][i] = r[a];
        }
        for (auto& r : block)
          if (!detail::is_null(r)) rows.push_back(std::move(r));
      }
      std::vector<Vector> out;
      for (const auto& c : kernel_of(rows, part.size())) {
        Vector v(n);
        for (std::size_t i = 0; i < part.size(); ++i)
          for (std::size_t k = 0; k < n; ++k) v[k] += c[i] * part[i][k];
        out.push_back(std::move(v));
      }
      return span_basis(out, n);
    };
    auto next_even = shrink(even);
    auto next_odd = shrink(odd);
    bool stable = next_even.size() == even.size() && next_odd.size() == odd.size();
    even = std::move(next_even);
    odd = std::move(next_odd);
    if (stable) break;
  }
  even.insert(even.end(), odd.begin(), odd.end());
  return make_report(g, even);
}

}  // namespace liesplit
