#pragma once

// Universal enveloping superalgebra U(g) in PBW normal form
//   (even PBW monomial) * X_{i1} X_{i2} ... X_{ik},   i1 < i2 < ... < ik,
// with products computed by rewriting.

#include <compare>
#include <cstdint>
#include <map>
#include <mutex>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "liesplit/bits.hpp"
#include "liesplit/superalgebra.hpp"

namespace liesplit {

using Exponents = std::vector<std::uint32_t>;

struct PBWMonomial {
  Exponents even;  // one exponent per even generator
  Mask odd = 0;    // odd generators present, multiplied in increasing order

  /// Filtration degree (number of odd factors) first, then mask, then even
  /// exponents.
  friend std::strong_ordering operator<=>(const PBWMonomial& a, const PBWMonomial& b) {
    int pa = popcount(a.odd), pb = popcount(b.odd);
    if (pa != pb) return pa <=> pb;
    if (a.odd != b.odd) return a.odd <=> b.odd;
    return a.even <=> b.even;
  }
  friend bool operator==(const PBWMonomial&, const PBWMonomial&) = default;

  [[nodiscard]] bool is_unit() const {
    if (odd) return false;
    for (auto e : even)
      if (e) return false;
    return true;
  }
  [[nodiscard]] int parity() const { return popcount(odd) & 1; }
};

using PBWTerms = std::map<PBWMonomial, Scalar>;

inline void add_into(PBWTerms& t, const PBWMonomial& m, const Scalar& c) {
  if (is_zero(c)) return;
  auto [it, inserted] = t.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (is_zero(it->second)) t.erase(it);
  }
}

inline void add_into(PBWTerms& t, const PBWTerms& other, const Scalar& c) {
  if (is_zero(c)) return;
  for (const auto& [m, v] : other) add_into(t, m, c * v);
}

/// Element of U(g): sparse map over PBW monomials, zeros dropped eagerly so
/// equality is structural.
class PBWElement {
 public:
  PBWElement() = default;
  PBWElement(std::uint64_t algebra, PBWTerms terms) : algebra_(algebra), terms_(std::move(terms)) {}

  [[nodiscard]] std::uint64_t algebra() const { return algebra_; }
  [[nodiscard]] const PBWTerms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }

  [[nodiscard]] Scalar coefficient(const PBWMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  PBWElement& operator+=(const PBWElement& o) {
    check(o);
    add_into(terms_, o.terms_, 1);
    return *this;
  }
  PBWElement& operator-=(const PBWElement& o) {
    check(o);
    add_into(terms_, o.terms_, -1);
    return *this;
  }
  PBWElement& operator*=(const Scalar& s) {
    if (liesplit::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, v] : terms_) v *= s;
    return *this;
  }
  friend PBWElement operator+(PBWElement a, const PBWElement& b) { return a += b; }
  friend PBWElement operator-(PBWElement a, const PBWElement& b) { return a -= b; }
  friend PBWElement operator*(const Scalar& s, PBWElement a) { return a *= s; }
  friend bool operator==(const PBWElement& a, const PBWElement& b) {
    return a.algebra_ == b.algebra_ && a.terms_ == b.terms_;
  }

 private:
  void check(const PBWElement& o) const {
    if (o.algebra_ != algebra_)
      throw std::invalid_argument("PBW elements belong to different algebras");
  }
  std::uint64_t algebra_ = 0;
  PBWTerms terms_;
};

/// Element of Λ(g1) over ordered odd masks.
using OddMultivector = std::map<Mask, Scalar, MaskOrder>;

/// One summand of u = Σ coefficient · even_factor · γ(mask).
struct LeftEvenTerm {
  PBWElement even_factor;  // in U(g0)
  Mask mask = 0;
  Scalar coefficient;
};

/// PBW engine for one algebra. Rewriting results are memoized; the caches are
/// guarded by a mutex and only ever hold values that are pure functions of
/// their keys, so concurrent use is safe and deterministic.
class Envelope {
 public:
  explicit Envelope(const LieSuperalgebra& g) : g_(g), ne_(g.dim_even()), no_(g.dim_odd()) {}

  [[nodiscard]] const LieSuperalgebra& algebra() const { return g_; }

  [[nodiscard]] PBWElement zero() const { return {g_.id(), {}}; }
  [[nodiscard]] PBWElement scalar(const Scalar& c) const {
    PBWTerms t;
    add_into(t, unit_monomial(), c);
    return {g_.id(), std::move(t)};
  }
  [[nodiscard]] PBWElement one() const { return scalar(1); }

  /// The image of the basis element T_i in U(g).
  [[nodiscard]] PBWElement generator(std::size_t i) const {
    return normal_form(std::vector<std::size_t>{i});
  }

  /// Element of g (coordinate vector) inside U(g).
  [[nodiscard]] PBWElement element(const Vector& x) const {
    PBWElement out = zero();
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!is_zero(x[i])) out += x[i] * generator(i);
    return out;
  }

  [[nodiscard]] PBWElement monomial(const PBWMonomial& m, const Scalar& c = 1) const {
    PBWTerms t;
    add_into(t, m, c);
    return {g_.id(), std::move(t)};
  }

  /// Product of the generators in `word`, in PBW normal form.
  [[nodiscard]] PBWElement normal_form(std::span<const std::size_t> word) const {
    PBWTerms t;
    add_into(t, unit_monomial(), 1);
    for (auto letter : word) {
      if (letter >= g_.dim()) throw std::out_of_range("generator index out of range");
      t = rmul_terms(t, letter);
    }
    return {g_.id(), std::move(t)};
  }

  [[nodiscard]] PBWElement multiply(const PBWElement& u, const PBWElement& v) const {
    own(u);
    own(v);
    PBWTerms out;
    for (const auto& [mv, cv] : v.terms()) {
      PBWTerms t = u.terms();
      for (auto letter : word_of(mv)) t = rmul_terms(t, letter);
      add_into(out, t, cv);
    }
    return {g_.id(), std::move(out)};
  }

  /// γ(X_{i1} ∧ ... ∧ X_{ir}) = 1/r! Σ_σ sgn(σ) X_{iσ(1)} ... X_{iσ(r)},
  /// extended linearly.
  [[nodiscard]] PBWElement gamma(const OddMultivector& mv) const {
    PBWTerms out;
    for (const auto& [m, c] : mv) add_into(out, gamma_terms(m), c);
    return {g_.id(), std::move(out)};
  }

  [[nodiscard]] PBWElement gamma(Mask m) const { return {g_.id(), gamma_terms(m)}; }

  /// Antipode: S(T) = -T on g, S(uv) = (-1)^{p(u)p(v)} S(v) S(u).
  [[nodiscard]] PBWElement antipode(const PBWElement& u) const {
    own(u);
    PBWTerms out;
    for (const auto& [m, c] : u.terms()) {
      auto word = word_of(m);
      int n_odd = popcount(m.odd);
      Scalar s = sign_power(static_cast<int>(word.size()) + n_odd * (n_odd - 1) / 2);
      std::vector<std::size_t> rev(word.rbegin(), word.rend());
      add_into(out, normal_form(rev).terms(), s * c);
    }
    return {g_.id(), std::move(out)};
  }

  /// Largest number of odd factors among the monomials; -1 for zero.
  [[nodiscard]] static int filtration_degree(const PBWElement& u) {
    int d = -1;
    for (const auto& [m, c] : u.terms()) d = std::max(d, popcount(m.odd));
    return d;
  }

  /// Counit: the coefficient of the unit monomial.
  [[nodiscard]] Scalar augmentation(const PBWElement& u) const {
    own(u);
    return u.coefficient(unit_monomial());
  }

  /// Writes u = Σ c · z · γ(ω) with z in U(g0), by back-substitution from the
  /// top filtration degree. A purely scalar z is folded into the
  /// coefficient; otherwise the coefficient is 1. Sorted by mask order.
  [[nodiscard]] std::vector<LeftEvenTerm> decompose_left_even(const PBWElement& u) const {
    own(u);
    std::map<Mask, PBWTerms, MaskOrder> parts;
    PBWTerms rest = u.terms();
    while (!rest.empty()) {
      int top = popcount(rest.rbegin()->first.odd);
      std::map<Mask, PBWTerms, MaskOrder> layer;
      for (auto it = rest.rbegin(); it != rest.rend() && popcount(it->first.odd) == top; ++it)
        add_into(layer[it->first.odd], PBWMonomial{it->first.even, 0}, it->second);
      for (const auto& [mask, z] : layer) {
        add_into(parts[mask], z, 1);
        add_into(rest, lmul_even(z, gamma_terms(mask)), -1);
      }
    }
    std::vector<LeftEvenTerm> out;
    for (auto& [mask, z] : parts) {
      if (z.empty()) continue;
      if (z.size() == 1 && z.begin()->first.is_unit()) {
        out.push_back({one(), mask, z.begin()->second});
      } else {
        out.push_back({PBWElement(g_.id(), std::move(z)), mask, Scalar(1)});
      }
    }
    return out;
  }

  /// z · u for z in U(g0).
  [[nodiscard]] PBWElement left_multiply_even(const PBWElement& z, const PBWElement& u) const {
    own(z);
    own(u);
    for (const auto& [m, c] : z.terms())
      if (m.odd) throw std::invalid_argument("left_multiply_even: factor is not in U(g0)");
    return {g_.id(), lmul_even(z.terms(), u.terms())};
  }

  [[nodiscard]] PBWMonomial unit_monomial() const { return {Exponents(ne_, 0), 0}; }

  /// Generator indices of a monomial, even part first.
  [[nodiscard]] std::vector<std::size_t> word_of(const PBWMonomial& m) const {
    std::vector<std::size_t> w;
    for (std::size_t j = 0; j < ne_; ++j)
      for (std::uint32_t k = 0; k < m.even[j]; ++k) w.push_back(j);
    for (int b : bits_of(m.odd)) w.push_back(ne_ + static_cast<std::size_t>(b));
    return w;
  }

  [[nodiscard]] std::string format(const PBWElement& u) const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : u.terms()) {
      if (!first) os << " + ";
      first = false;
      os << "(" << to_string(c) << ")";
      for (auto i : word_of(m)) os << "*" << g_.label(i);
    }
    if (first) os << "0";
    return os.str();
  }

 private:
  using EvenTerms = std::map<Exponents, Scalar>;

  void own(const PBWElement& u) const {
    if (u.algebra() != g_.id())
      throw std::invalid_argument("PBW element belongs to a different algebra");
  }

  static void add_even(EvenTerms& t, const Exponents& e, const Scalar& c) {
    if (is_zero(c)) return;
    auto [it, inserted] = t.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (is_zero(it->second)) t.erase(it);
    }
  }

  // z · E_j in U(g0).
  EvenTerms even_rmul(const Exponents& z, std::size_t j) const {
    {
      std::lock_guard lock(mu_);
      auto it = even_cache_.find({z, j});
      if (it != even_cache_.end()) return it->second;
    }
    EvenTerms out;
    std::size_t last = ne_;
    for (std::size_t i = ne_; i-- > 0;)
      if (z[i]) {
        last = i;
        break;
      }
    if (last == ne_ || j >= last) {
      Exponents y = z;
      ++y[j];
      add_even(out, y, 1);
    } else {
      // z' E_last E_j = (z' E_j) E_last + z' [E_last, E_j]
      Exponents zp = z;
      --zp[last];
      for (const auto& [y, c] : even_rmul(zp, j))
        for (const auto& [y2, c2] : even_rmul(y, last)) add_even(out, y2, c * c2);
      for (const auto& [k, v] : g_.bracket(last, j))
        for (const auto& [y, c] : even_rmul(zp, k)) add_even(out, y, v * c);
    }
    std::lock_guard lock(mu_);
    even_cache_.emplace(std::make_pair(z, j), out);
    return out;
  }

  EvenTerms even_mul(const Exponents& z, const Exponents& y) const {
    EvenTerms t;
    add_even(t, z, 1);
    for (std::size_t j = 0; j < ne_; ++j)
      for (std::uint32_t k = 0; k < y[j]; ++k) {
        EvenTerms next;
        for (const auto& [e, c] : t)
          for (const auto& [e2, c2] : even_rmul(e, j)) add_even(next, e2, c * c2);
        t = std::move(next);
      }
    return t;
  }

  // z · u where z is a combination of purely even monomials.
  PBWTerms lmul_even(const PBWTerms& z, const PBWTerms& u) const {
    PBWTerms out;
    for (const auto& [zm, zc] : z)
      for (const auto& [m, c] : u)
        for (const auto& [e, d] : even_mul(zm.even, m.even))
          add_into(out, PBWMonomial{e, m.odd}, zc * c * d);
    return out;
  }

  PBWTerms lmul_even(const Exponents& z, const PBWTerms& u) const {
    bool unit = true;
    for (auto e : z)
      if (e) unit = false;
    if (unit) return u;
    PBWTerms zt;
    add_into(zt, PBWMonomial{z, 0}, 1);
    return lmul_even(zt, u);
  }

  PBWTerms odd_monomial(Mask m) const {
    PBWTerms t;
    add_into(t, PBWMonomial{Exponents(ne_, 0), m}, 1);
    return t;
  }

  // X_m · X_k (no even prefix).
  PBWTerms odd_rmul(Mask m, int k) const {
    {
      std::lock_guard lock(mu_);
      auto it = odd_cache_.find({m, k});
      if (it != odd_cache_.end()) return it->second;
    }
    PBWTerms out;
    if (m == 0 || k > highest_bit(m)) {
      out = odd_monomial(m | (Mask(1) << k));
    } else {
      int l = highest_bit(m);
      Mask mp = m & ~(Mask(1) << l);
      const std::size_t xl = ne_ + static_cast<std::size_t>(l);
      const std::size_t xk = ne_ + static_cast<std::size_t>(k);
      if (k == l) {
        // X_l X_l = 1/2 [X_l, X_l]
        for (const auto& [c, v] : g_.bracket(xl, xl))
          add_into(out, rmul(PBWMonomial{Exponents(ne_, 0), mp}, c), v / 2);
      } else {
        // X_l X_k = -X_k X_l + [X_l, X_k]
        add_into(out, rmul_terms(odd_rmul(mp, k), xl), -1);
        for (const auto& [c, v] : g_.bracket(xl, xk))
          add_into(out, rmul(PBWMonomial{Exponents(ne_, 0), mp}, c), v);
      }
    }
    std::lock_guard lock(mu_);
    odd_cache_.emplace(std::make_pair(m, k), out);
    return out;
  }

  // monomial · T
  PBWTerms rmul(const PBWMonomial& mono, std::size_t t) const {
    PBWTerms out;
    if (t < ne_) {
      // z X_m E = (z E) X_m + z [X_m, E]
      for (const auto& [e, c] : even_rmul(mono.even, t)) add_into(out, PBWMonomial{e, mono.odd}, c);
      auto positions = bits_of(mono.odd);
      PBWTerms comm;
      for (std::size_t p = 0; p < positions.size(); ++p) {
        Mask prefix = 0;
        for (std::size_t q = 0; q < p; ++q) prefix |= Mask(1) << positions[q];
        PBWTerms el;
        for (const auto& [c, v] : g_.bracket(ne_ + static_cast<std::size_t>(positions[p]), t))
          add_into(el, odd_rmul(prefix, static_cast<int>(c - ne_)), v);
        for (std::size_t q = p + 1; q < positions.size(); ++q)
          el = rmul_terms(el, ne_ + static_cast<std::size_t>(positions[q]));
        add_into(comm, el, 1);
      }
      add_into(out, lmul_even(mono.even, comm), 1);
    } else {
      out = lmul_even(mono.even, odd_rmul(mono.odd, static_cast<int>(t - ne_)));
    }
    return out;
  }

  PBWTerms rmul_terms(const PBWTerms& u, std::size_t t) const {
    PBWTerms out;
    for (const auto& [m, c] : u) add_into(out, rmul(m, t), c);
    return out;
  }

  PBWTerms gamma_terms(Mask m) const {
    {
      std::lock_guard lock(mu_);
      auto it = gamma_cache_.find(m);
      if (it != gamma_cache_.end()) return it->second;
    }
    PBWTerms out;
    if (m == 0) {
      add_into(out, unit_monomial(), 1);
    } else {
      // Group permutations by their last factor.
      auto pos = bits_of(m);
      const int r = static_cast<int>(pos.size());
      for (int j = 0; j < r; ++j) {
        Scalar c = sign_power(r - 1 - j) / r;
        add_into(out,
                   rmul_terms(gamma_terms(m & ~(Mask(1) << pos[j])),
                              ne_ + static_cast<std::size_t>(pos[j])),
                   c);
      }
    }
    std::lock_guard lock(mu_);
    gamma_cache_.emplace(m, out);
    return out;
  }

  LieSuperalgebra g_;
  std::size_t ne_, no_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<Exponents, std::size_t>, EvenTerms> even_cache_;
  mutable std::map<std::pair<Mask, int>, PBWTerms> odd_cache_;
  mutable std::map<Mask, PBWTerms> gamma_cache_;
};

/// Convenience wrappers matching the operation names.
inline PBWElement pbw_normal_form(const Envelope& env, std::span<const std::size_t> word) {
  return env.normal_form(word);
}
inline PBWElement gamma_symmetrize(const Envelope& env, const OddMultivector& mv) {
  return env.gamma(mv);
}

}  // namespace liesplit
