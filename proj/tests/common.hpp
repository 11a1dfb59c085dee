#pragma once

#include <random>
#include <string>
#include <vector>

#include "liesplit/liesplit.hpp"

namespace testing_support {

using namespace liesplit;

/// gl(1|1) with a = E11, b = E22, x = E12, y = E21.
inline LieSuperalgebra gl11_abxy() {
  return AlgebraBuilder("gl(1|1)")
      .even("a").even("b").odd("x").odd("y")
      .bracket("a", "x", {{"x", 1}})
      .bracket("b", "x", {{"x", -1}})
      .bracket("a", "y", {{"y", -1}})
      .bracket("b", "y", {{"y", 1}})
      .bracket("x", "y", {{"a", 1}, {"b", 1}})
      .build();
}

inline std::vector<LieSuperalgebra> catalog_algebras() {
  std::vector<LieSuperalgebra> out;
  for (std::size_t k = 1; k <= 4; ++k) out.push_back(catalog_abelian(0, k));
  out.push_back(catalog_gl(1, 1));
  out.push_back(catalog_gl(2, 1));
  out.push_back(catalog_gl(2, 2));
  out.push_back(catalog_osp12());
  return out;
}

using Rng = std::mt19937_64;

inline Scalar random_scalar(Rng& rng) {
  static const int nums[] = {-3, -2, -1, 1, 1, 2, 3};
  static const int dens[] = {1, 1, 1, 2, 3};
  std::uniform_int_distribution<int> n(0, 6), d(0, 4);
  Scalar q(nums[n(rng)], dens[d(rng)]);
  q.canonicalize();
  return q;
}

inline std::size_t random_index(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

inline std::vector<std::size_t> random_word(Rng& rng, const LieSuperalgebra& g, std::size_t max_len) {
  std::size_t len = random_index(rng, max_len + 1);
  std::vector<std::size_t> w;
  for (std::size_t i = 0; i < len; ++i) w.push_back(random_index(rng, g.dim()));
  return w;
}

inline PBWElement random_element(Rng& rng, const Envelope& env, std::size_t terms = 3,
                                 std::size_t max_len = 3) {
  PBWElement u = env.zero();
  for (std::size_t t = 0; t < terms; ++t)
    u += random_scalar(rng) * env.normal_form(random_word(rng, env.algebra(), max_len));
  return u;
}

/// Random homogeneous element of g of the given parity (falls back to zero
/// when that parity is empty).
inline Vector random_homogeneous(Rng& rng, const LieSuperalgebra& g, int parity) {
  Vector v(g.dim());
  std::size_t lo = parity ? g.dim_even() : 0, hi = parity ? g.dim() : g.dim_even();
  if (lo == hi) return v;
  std::size_t k = 1 + random_index(rng, 2);
  for (std::size_t i = 0; i < k; ++i) v[lo + random_index(rng, hi - lo)] += random_scalar(rng);
  return v;
}

inline ExteriorPoly random_poly(Rng& rng, const LieSuperalgebra& g, std::size_t terms = 3) {
  ExteriorPoly f;
  Mask full = g.dim_odd() ? ((Mask(1) << g.dim_odd()) - 1) : 0;
  for (std::size_t t = 0; t < terms; ++t) {
    Mask m = full ? (rng() & full) : 0;
    f.add(m, random_scalar(rng));
  }
  return f;
}

inline ExteriorPoly random_homogeneous_poly(Rng& rng, const LieSuperalgebra& g, int parity,
                                            std::size_t terms = 3) {
  ExteriorPoly f;
  Mask full = g.dim_odd() ? ((Mask(1) << g.dim_odd()) - 1) : 0;
  for (std::size_t t = 0; t < 4 * terms && f.terms().size() < terms; ++t) {
    Mask m = full ? (rng() & full) : 0;
    if ((popcount(m) & 1) == parity) f.add(m, random_scalar(rng));
  }
  return f;
}

inline ExteriorField random_field(Rng& rng, const FieldModule& fm, std::size_t terms = 4) {
  ExteriorField w = fm.zero();
  const auto& g = fm.algebra();
  Mask full = g.dim_odd() ? ((Mask(1) << g.dim_odd()) - 1) : 0;
  if (fm.target_dim() == 0) return w;
  for (std::size_t t = 0; t < terms; ++t)
    w.add(full ? (rng() & full) : 0, random_index(rng, fm.target_dim()), random_scalar(rng));
  return w;
}

/// Subalgebra generated by homogeneous vectors.
inline std::vector<Vector> closure(const LieSuperalgebra& g, std::vector<Vector> gens) {
  auto basis = span_basis(gens, g.dim());
  while (true) {
    std::vector<Vector> all = basis;
    for (const auto& a : basis)
      for (const auto& b : basis) all.push_back(g.bracket(a, b));
    auto next = span_basis(all, g.dim());
    if (next.size() == basis.size()) return basis;
    basis = std::move(next);
  }
}

/// Random subalgebra generated by one or two homogeneous elements; even
/// generators only when `even_only`.
inline SubalgebraEmbedding random_subalgebra(Rng& rng, const LieSuperalgebra& g, bool even_only) {
  std::vector<Vector> gens;
  std::size_t k = 1 + random_index(rng, 2);
  for (std::size_t i = 0; i < k; ++i) {
    int parity = even_only || g.dim_odd() == 0 ? 0 : static_cast<int>(random_index(rng, 2));
    if (g.dim_even() == 0) parity = 1;
    Vector v(g.dim());
    std::size_t lo = parity ? g.dim_even() : 0, hi = parity ? g.dim() : g.dim_even();
    if (lo == hi) continue;
    v[lo + random_index(rng, hi - lo)] = 1;
    if (random_index(rng, 3) == 0) v[lo + random_index(rng, hi - lo)] += random_scalar(rng);
    gens.push_back(std::move(v));
  }
  return SubalgebraEmbedding(g, closure(g, gens));
}

inline bool same_span(const std::vector<Vector>& a, const std::vector<Vector>& b, std::size_t n) {
  return span_basis(a, n) == span_basis(b, n);
}

}  // namespace testing_support
