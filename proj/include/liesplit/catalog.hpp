#pragma once

// Built-in superalgebras: gl(m|n), osp(1|2), abelian ones, and parabolic
// subalgebras of gl(m|n).

#include <string>
#include <vector>

#include "liesplit/subalgebra.hpp"
#include "liesplit/superalgebra.hpp"

namespace liesplit {

namespace detail {

inline std::string gl_label(std::size_t i, std::size_t j, std::size_t size) {
  if (size <= 9) return "E" + std::to_string(i + 1) + std::to_string(j + 1);
  return "E" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

// Matrix units of gl(m|n) in basis order: even blocks row-major, then the
// upper right and lower left odd blocks.
inline std::vector<std::pair<std::size_t, std::size_t>> gl_units(std::size_t m, std::size_t n) {
  const std::size_t N = m + n;
  std::vector<std::pair<std::size_t, std::size_t>> units;
  auto block = [&](std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) {
    for (std::size_t i = r0; i < r1; ++i)
      for (std::size_t j = c0; j < c1; ++j) units.emplace_back(i, j);
  };
  block(0, m, 0, m);
  block(m, N, m, N);
  block(0, m, m, N);
  block(m, N, 0, m);
  return units;
}

}  // namespace detail

inline LieSuperalgebra catalog_gl(std::size_t m, std::size_t n) {
  if (m * n > LieSuperalgebra::kMaxOdd / 2) throw InputError("gl(m|n) has too many odd generators");
  const std::size_t N = m + n;
  auto units = detail::gl_units(m, n);
  std::vector<BasisElement> basis;
  std::vector<std::vector<std::size_t>> index(N, std::vector<std::size_t>(N));
  auto par = [&](std::size_t i) { return i >= m ? 1 : 0; };
  for (std::size_t k = 0; k < units.size(); ++k) {
    auto [i, j] = units[k];
    basis.push_back({detail::gl_label(i, j, N), (par(i) + par(j)) & 1});
    index[i][j] = k;
  }
  std::map<std::pair<std::size_t, std::size_t>, Combination> table;
  for (std::size_t a = 0; a < units.size(); ++a)
    for (std::size_t b = 0; b < units.size(); ++b) {
      auto [i, j] = units[a];
      auto [k, l] = units[b];
      std::map<std::size_t, Scalar> acc;
      if (j == k) acc[index[i][l]] += 1;
      if (l == i) acc[index[k][j]] -= ((par(i) + par(j)) * (par(k) + par(l))) & 1 ? -1 : 1;
      Combination c;
      for (auto& [idx, v] : acc)
        if (!is_zero(v)) c.emplace_back(idx, v);
      if (!c.empty()) table[{a, b}] = std::move(c);
    }
  return LieSuperalgebra("gl(" + std::to_string(m) + "|" + std::to_string(n) + ")", basis, table);
}

/// osp(1|2) with even h, e, f and odd x, y.
inline LieSuperalgebra catalog_osp12() {
  return AlgebraBuilder("osp(1|2)")
      .even("h").even("e").even("f").odd("x").odd("y")
      .bracket("h", "e", {{"e", 2}})
      .bracket("h", "f", {{"f", -2}})
      .bracket("e", "f", {{"h", 1}})
      .bracket("h", "x", {{"x", 1}})
      .bracket("h", "y", {{"y", -1}})
      .bracket("e", "y", {{"x", -1}})
      .bracket("f", "x", {{"y", -1}})
      .bracket("x", "x", {{"e", 2}})
      .bracket("y", "y", {{"f", -2}})
      .bracket("x", "y", {{"h", 1}})
      .build();
}

/// Abelian superalgebra with even z1.. and odd t1...
inline LieSuperalgebra catalog_abelian(std::size_t even, std::size_t odd) {
  AlgebraBuilder b("abelian(" + std::to_string(even) + "|" + std::to_string(odd) + ")");
  for (std::size_t i = 0; i < even; ++i) b.even("z" + std::to_string(i + 1));
  for (std::size_t i = 0; i < odd; ++i) b.odd("t" + std::to_string(i + 1));
  return b.build();
}

/// Stabilizer of the span of the first r even and first s odd standard basis
/// vectors: keeps E_ij unless i lies in that block and j does not.
inline SubalgebraEmbedding catalog_parabolic(const LieSuperalgebra& gl, std::size_t m, std::size_t n,
                                             std::size_t r, std::size_t s) {
  if (r > m || s > n) throw InputError("parabolic flag (r, s) out of range for gl(m|n)");
  auto units = detail::gl_units(m, n);
  if (gl.dim() != units.size()) throw InputError("algebra is not gl(m|n) for the given m, n");
  for (std::size_t k = 0; k < units.size(); ++k)
    if (gl.label(k) != detail::gl_label(units[k].first, units[k].second, m + n))
      throw InputError("algebra labels do not follow the gl(m|n) catalog");
  auto in_block = [&](std::size_t i) { return i < r || (i >= m && i < m + s); };
  std::vector<Vector> vs;
  for (std::size_t k = 0; k < units.size(); ++k) {
    auto [i, j] = units[k];
    if (in_block(i) && !in_block(j)) continue;
    vs.push_back(gl.unit(k));
  }
  return SubalgebraEmbedding(gl, std::move(vs));
}

}  // namespace liesplit
