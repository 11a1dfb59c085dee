#pragma once

// Structure-constant Lie superalgebras over the rationals.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "liesplit/linalg.hpp"
#include "liesplit/scalar.hpp"

namespace liesplit {

/// Sparse combination of basis elements, sorted by index, no zeros.
using Combination = std::vector<std::pair<std::size_t, Scalar>>;

inline Combination to_combination(const Vector& v) {
  Combination c;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!is_zero(v[i])) c.emplace_back(i, v[i]);
  return c;
}

struct BasisElement {
  std::string label;
  int parity = 0;  // 0 even, 1 odd

  friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

/// A finite-dimensional Lie superalgebra given by structure constants
/// [T_a, T_b] = sum_c c_ab^c T_c. Even basis elements come first. Immutable
/// after construction; copies share the same identity token.
class LieSuperalgebra {
 public:
  static constexpr std::size_t kMaxOdd = 64;

  /// `brackets` maps ordered pairs (a, b) to [T_a, T_b]; missing pairs are
  /// zero. No symmetry completion happens here (see AlgebraBuilder).
  LieSuperalgebra(std::string name, std::vector<BasisElement> basis,
                  const std::map<std::pair<std::size_t, std::size_t>, Combination>& brackets)
      : name_(std::move(name)), basis_(std::move(basis)), id_(next_id()) {
    const std::size_t n = basis_.size();
    std::unordered_map<std::string, std::size_t> seen;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& b = basis_[i];
      if (b.parity != 0 && b.parity != 1)
        throw InputError("parity of '" + b.label + "' must be 0 or 1");
      if (!seen.emplace(b.label, i).second) throw InputError("duplicate basis label '" + b.label + "'");
      if (b.parity == 0) {
        if (n_odd_ > 0)
          throw InputError("even basis element '" + b.label + "' listed after an odd one");
        ++n_even_;
      } else {
        ++n_odd_;
      }
    }
    if (n_odd_ > kMaxOdd) throw InputError("at most 64 odd generators are supported");
    index_ = std::move(seen);
    table_.assign(n * n, Combination{});
    for (const auto& [key, value] : brackets) {
      auto [a, b] = key;
      if (a >= n || b >= n) throw InputError("bracket index out of range");
      Combination clean;
      for (const auto& [c, v] : value) {
        if (c >= n) throw InputError("bracket result index out of range");
        if (!is_zero(v)) clean.emplace_back(c, v);
      }
      std::sort(clean.begin(), clean.end(),
                [](const auto& x, const auto& y) { return x.first < y.first; });
      Combination merged;
      for (auto& [c, v] : clean) {
        if (!merged.empty() && merged.back().first == c) {
          merged.back().second += v;
          if (is_zero(merged.back().second)) merged.pop_back();
        } else {
          merged.emplace_back(c, v);
        }
      }
      table_[a * n + b] = std::move(merged);
    }
  }

  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] std::size_t dim() const { return basis_.size(); }
  [[nodiscard]] std::size_t dim_even() const { return n_even_; }
  [[nodiscard]] std::size_t dim_odd() const { return n_odd_; }
  [[nodiscard]] const std::vector<BasisElement>& basis() const { return basis_; }
  [[nodiscard]] const std::string& label(std::size_t i) const { return basis_.at(i).label; }
  [[nodiscard]] int parity(std::size_t i) const { return basis_[i].parity; }
  [[nodiscard]] std::uint64_t id() const { return id_; }

  /// Basis index of the k-th odd generator.
  [[nodiscard]] std::size_t odd_generator(std::size_t k) const { return n_even_ + k; }

  [[nodiscard]] std::optional<std::size_t> find(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  [[nodiscard]] std::size_t index_of(const std::string& label) const {
    auto i = find(label);
    if (!i) throw InputError("unknown basis label '" + label + "'");
    return *i;
  }

  [[nodiscard]] const Combination& bracket(std::size_t a, std::size_t b) const {
    return table_[a * dim() + b];
  }

  /// Bilinear extension to coordinate vectors.
  [[nodiscard]] Vector bracket(const Vector& x, const Vector& y) const {
    Vector out(dim());
    for (std::size_t a = 0; a < dim(); ++a) {
      if (is_zero(x[a])) continue;
      for (std::size_t b = 0; b < dim(); ++b) {
        if (is_zero(y[b])) continue;
        Scalar f = x[a] * y[b];
        for (const auto& [c, v] : bracket(a, b)) out[c] += f * v;
      }
    }
    return out;
  }

  [[nodiscard]] Vector unit(std::size_t i) const {
    Vector v(dim());
    v[i] = 1;
    return v;
  }

  /// Parity of a coordinate vector: 0/1 when homogeneous, -1 otherwise (or
  /// for the zero vector, which is reported as 0).
  [[nodiscard]] int parity_of(const Vector& v) const {
    bool even = false, odd = false;
    for (std::size_t i = 0; i < dim(); ++i) {
      if (is_zero(v[i])) continue;
      (parity(i) ? odd : even) = true;
    }
    if (even && odd) return -1;
    return odd ? 1 : 0;
  }

  [[nodiscard]] std::string format(const Vector& v) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (is_zero(v[i])) continue;
      if (!first) os << " + ";
      first = false;
      if (v[i] != 1) os << "(" << to_string(v[i]) << ")*";
      os << label(i);
    }
    if (first) os << "0";
    return os.str();
  }

  /// Structural equality (ignores the identity token).
  friend bool operator==(const LieSuperalgebra& x, const LieSuperalgebra& y) {
    return x.basis_ == y.basis_ && x.table_ == y.table_;
  }

 private:
  static std::uint64_t next_id() {
    static std::atomic<std::uint64_t> counter{1};
    return counter.fetch_add(1);
  }

  std::string name_;
  std::vector<BasisElement> basis_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<Combination> table_;
  std::size_t n_even_ = 0;
  std::size_t n_odd_ = 0;
  std::uint64_t id_;
};

/// Collects brackets by label. A bracket given for (a, b) but not for (b, a)
/// is completed by super-antisymmetry; explicit entries are kept verbatim so
/// inconsistent input stays visible to validate_superalgebra.
class AlgebraBuilder {
 public:
  explicit AlgebraBuilder(std::string name) : name_(std::move(name)) {}

  AlgebraBuilder& even(const std::string& label) { return add(label, 0); }
  AlgebraBuilder& odd(const std::string& label) { return add(label, 1); }

  AlgebraBuilder& add(const std::string& label, int parity) {
    basis_.push_back({label, parity});
    return *this;
  }

  AlgebraBuilder& bracket(const std::string& a, const std::string& b,
                          std::vector<std::pair<std::string, Scalar>> result) {
    entries_.push_back({a, b, std::move(result)});
    return *this;
  }

  [[nodiscard]] LieSuperalgebra build() const {
    std::unordered_map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < basis_.size(); ++i) idx.emplace(basis_[i].label, i);
    auto lookup = [&](const std::string& l) {
      auto it = idx.find(l);
      if (it == idx.end()) throw InputError("unknown basis label '" + l + "' in bracket");
      return it->second;
    };
    std::map<std::pair<std::size_t, std::size_t>, Combination> explicit_;
    for (const auto& e : entries_) {
      auto a = lookup(e.a), b = lookup(e.b);
      auto& slot = explicit_[{a, b}];
      for (const auto& [l, v] : e.result) slot.emplace_back(lookup(l), v);
    }
    auto table = explicit_;
    for (const auto& [key, value] : explicit_) {
      auto [a, b] = key;
      if (explicit_.count({b, a})) continue;
      int pa = basis_[a].parity, pb = basis_[b].parity;
      Scalar s = (pa * pb) ? Scalar(1) : Scalar(-1);  // [b,a] = -(-1)^{pa pb}[a,b]
      Combination rev;
      for (const auto& [c, v] : value) rev.emplace_back(c, s * v);
      table[{b, a}] = std::move(rev);
    }
    return LieSuperalgebra(name_, basis_, table);
  }

 private:
  struct Entry {
    std::string a, b;
    std::vector<std::pair<std::string, Scalar>> result;
  };
  std::string name_;
  std::vector<BasisElement> basis_;
  std::vector<Entry> entries_;
};

/// One failed identity with its witness basis indices and nonzero residual.
struct Violation {
  enum class Kind { Antisymmetry, Parity, Jacobi, Closure, Homogeneity };
  Kind kind;
  std::vector<std::size_t> witness;
  Vector residual;

  [[nodiscard]] static const char* kind_name(Kind k) {
    switch (k) {
      case Kind::Antisymmetry: return "super-antisymmetry";
      case Kind::Parity: return "parity";
      case Kind::Jacobi: return "super-jacobi";
      case Kind::Closure: return "closure";
      case Kind::Homogeneity: return "homogeneity";
    }
    return "?";
  }
};

/// Exhaustive check of super-antisymmetry, parity compatibility and the super
/// Jacobi identity on basis pairs and triples.
inline std::vector<Violation> validate_superalgebra(const LieSuperalgebra& g) {
  std::vector<Violation> out;
  const std::size_t n = g.dim();
  auto dense = [&](const Combination& c, const Scalar& f, Vector& acc) {
    for (const auto& [i, v] : c) acc[i] += f * v;
  };
  auto nonzero = [](const Vector& v) {
    for (const auto& x : v)
      if (!is_zero(x)) return true;
    return false;
  };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      Vector r(n);
      dense(g.bracket(a, b), 1, r);
      Scalar s = (g.parity(a) * g.parity(b)) ? Scalar(-1) : Scalar(1);
      dense(g.bracket(b, a), s, r);  // [a,b] + (-1)^{pa pb}[b,a]
      if (nonzero(r)) out.push_back({Violation::Kind::Antisymmetry, {a, b}, r});
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      int want = (g.parity(a) + g.parity(b)) % 2;
      Vector r(n);
      for (const auto& [c, v] : g.bracket(a, b))
        if (g.parity(c) != want) r[c] = v;
      if (nonzero(r)) out.push_back({Violation::Kind::Parity, {a, b}, r});
    }
  }
  // (-1)^{p(x)p(z)}[x,[y,z]] + (-1)^{p(y)p(x)}[y,[z,x]] + (-1)^{p(z)p(y)}[z,[x,y]]
  auto nested = [&](std::size_t x, std::size_t y, std::size_t z, const Scalar& f, Vector& acc) {
    for (const auto& [c, v] : g.bracket(y, z)) dense(g.bracket(x, c), f * v, acc);
  };
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        Vector r(n);
        int px = g.parity(x), py = g.parity(y), pz = g.parity(z);
        nested(x, y, z, sign_power(px * pz), r);
        nested(y, z, x, sign_power(py * px), r);
        nested(z, x, y, sign_power(pz * py), r);
        if (nonzero(r)) out.push_back({Violation::Kind::Jacobi, {x, y, z}, r});
      }
    }
  }
  return out;
}

/// The associated graded superalgebra: odd-odd brackets set to zero.
inline LieSuperalgebra gr_superalgebra(const LieSuperalgebra& g) {
  std::map<std::pair<std::size_t, std::size_t>, Combination> table;
  for (std::size_t a = 0; a < g.dim(); ++a)
    for (std::size_t b = 0; b < g.dim(); ++b) {
      if (g.parity(a) == 1 && g.parity(b) == 1) continue;
      if (!g.bracket(a, b).empty()) table[{a, b}] = g.bracket(a, b);
    }
  std::string name = g.name().rfind("gr ", 0) == 0 ? g.name() : "gr " + g.name();
  return LieSuperalgebra(name, g.basis(), table);
}

}  // namespace liesplit
