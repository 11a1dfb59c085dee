#pragma once

// Λ(g1*) and the modules Λ(g1*) ⊗ g, Λ(g1*) ⊗ g/h.
//
// An exterior polynomial f is stored by its values on the symmetrized
// elements: coefficient(ω) = f(γ(X_ω)), i.e. the determinant pairing
// <ε^{i1}…ε^{ip}, X_{j1}∧…∧X_{jp}> = det(δ) on ordered masks. A left
// invariant function only sees U(g) modulo g0·U(g), so the action
//   Y(f)(u) = (-1)^{p(Y)} f(u·Y)
// is computed in the right module Q = U(g)/g0·U(g), whose basis is the ordered
// odd monomials.

#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <thread>
#include <vector>

#include "liesplit/bits.hpp"
#include "liesplit/linalg.hpp"
#include "liesplit/pbw.hpp"
#include "liesplit/subalgebra.hpp"

namespace liesplit {

using MaskTerms = std::map<Mask, Scalar, MaskOrder>;

inline void add_into(MaskTerms& t, Mask m, const Scalar& c) {
  if (is_zero(c)) return;
  auto [it, inserted] = t.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (is_zero(it->second)) t.erase(it);
  }
}

inline void add_into(MaskTerms& t, const MaskTerms& o, const Scalar& c) {
  if (is_zero(c)) return;
  for (const auto& [m, v] : o) add_into(t, m, c * v);
}

/// Element of Λ(L) ≅ Λ(g1*).
class ExteriorPoly {
 public:
  ExteriorPoly() = default;
  explicit ExteriorPoly(MaskTerms t) : terms_(std::move(t)) {
    std::erase_if(terms_, [](const auto& kv) { return liesplit::is_zero(kv.second); });
  }

  /// ε^{i1} ∧ … ∧ ε^{ip} for the ordered mask.
  static ExteriorPoly basis(Mask m, const Scalar& c = 1) {
    ExteriorPoly f;
    add_into(f.terms_, m, c);
    return f;
  }

  [[nodiscard]] const MaskTerms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] Scalar coefficient(Mask m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
  }
  void add(Mask m, const Scalar& c) { add_into(terms_, m, c); }

  /// Component of exterior degree p.
  [[nodiscard]] ExteriorPoly degree_part(int p) const {
    ExteriorPoly out;
    for (const auto& [m, c] : terms_)
      if (popcount(m) == p) out.terms_.emplace(m, c);
    return out;
  }

  /// Parity when homogeneous; -1 when mixed; 0 for zero.
  [[nodiscard]] int parity() const {
    int p = -2;
    for (const auto& [m, c] : terms_) {
      int q = popcount(m) & 1;
      if (p == -2) p = q;
      else if (p != q) return -1;
    }
    return p == -2 ? 0 : p;
  }

  ExteriorPoly& operator+=(const ExteriorPoly& o) {
    add_into(terms_, o.terms_, 1);
    return *this;
  }
  ExteriorPoly& operator-=(const ExteriorPoly& o) {
    add_into(terms_, o.terms_, -1);
    return *this;
  }
  friend ExteriorPoly operator+(ExteriorPoly a, const ExteriorPoly& b) { return a += b; }
  friend ExteriorPoly operator-(ExteriorPoly a, const ExteriorPoly& b) { return a -= b; }
  friend ExteriorPoly operator*(const Scalar& s, const ExteriorPoly& a) {
    ExteriorPoly out;
    add_into(out.terms_, a.terms_, s);
    return out;
  }
  friend bool operator==(const ExteriorPoly&, const ExteriorPoly&) = default;

  /// Coefficient-level wedge: ε^S ∧ ε^T = ±ε^{S∪T}.
  [[nodiscard]] friend ExteriorPoly wedge(const ExteriorPoly& a, const ExteriorPoly& b) {
    ExteriorPoly out;
    for (const auto& [s, x] : a.terms_)
      for (const auto& [t, y] : b.terms_) {
        int sg = wedge_sign(s, t);
        if (sg) add_into(out.terms_, s | t, sg * x * y);
      }
    return out;
  }

  /// Product of the functions f and g (dual to the coproduct of U(g)). In
  /// the determinant-pairing coordinates it is the opposite wedge:
  /// f·g = g ∧ f.
  [[nodiscard]] friend ExteriorPoly product(const ExteriorPoly& a, const ExteriorPoly& b) {
    return wedge(b, a);
  }

 private:
  MaskTerms terms_;
};

/// Right action of g on Q = U(g)/g0·U(g), tabulated once per algebra, and
/// the induced action on Λ(g1*).
class ExteriorAction {
 public:
  static constexpr std::size_t kMaxOdd = 16;

  explicit ExteriorAction(const LieSuperalgebra& g)
      : g_(g), ne_(g.dim_even()), no_(g.dim_odd()) {
    if (no_ > kMaxOdd) throw InputError("exterior module limited to 16 odd generators");
    masks_ = ordered_masks(static_cast<int>(no_));
    const std::size_t nm = std::size_t(1) << no_;
    table_.assign(nm * g_.dim(), std::nullopt);
    gamma_.resize(nm);
    for (Mask m : masks_) {
      if (m == 0) {
        gamma_[0] = MaskTerms{{0, Scalar(1)}};
        continue;
      }
      auto pos = bits_of(m);
      const int r = static_cast<int>(pos.size());
      MaskTerms acc;
      for (int j = 0; j < r; ++j) {
        Scalar c = sign_power(r - 1 - j) / r;
        add_into(acc, rmul(gamma_[m & ~(Mask(1) << pos[j])], ne_ + pos[j]), c);
      }
      gamma_[m] = std::move(acc);
    }
    // transposed[y][ω'] = {(ω, coefficient of γ(ω') in γ(ω)·T_y)}
    transposed_.assign(g_.dim(), std::vector<MaskTerms>(nm));
    for (std::size_t y = 0; y < g_.dim(); ++y)
      for (Mask w : masks_)
        for (const auto& [wp, c] : gamma_coordinates(rmul(gamma_[w], y)))
          transposed_[y][wp].emplace(w, c);
  }

  [[nodiscard]] const LieSuperalgebra& algebra() const { return g_; }
  [[nodiscard]] const std::vector<Mask>& masks() const { return masks_; }

  /// γ(X_ω) modulo g0·U(g), in the ordered odd monomial basis.
  [[nodiscard]] const MaskTerms& gamma(Mask m) const { return gamma_[m]; }

  /// q·T_t in Q.
  [[nodiscard]] MaskTerms rmul(const MaskTerms& q, std::size_t t) const {
    MaskTerms out;
    for (const auto& [m, c] : q) add_into(out, rmul(m, t), c);
    return out;
  }

  /// Coordinates of q ∈ Q in the basis {γ(X_ω)}.
  [[nodiscard]] MaskTerms gamma_coordinates(MaskTerms q) const {
    MaskTerms out;
    while (!q.empty()) {
      auto [top, c] = *q.rbegin();
      Scalar coeff = c;
      out.emplace(top, coeff);
      add_into(q, gamma_[top], -coeff);
    }
    return out;
  }

  /// Y(f) for the basis generator T_y: <Y(f), ω> = (-1)^{p(Y)} f(γ(ω)·Y).
  [[nodiscard]] ExteriorPoly act(std::size_t y, const ExteriorPoly& f) const {
    MaskTerms out;
    Scalar s = g_.parity(y) ? Scalar(-1) : Scalar(1);
    for (const auto& [wp, fc] : f.terms())
      add_into(out, transposed_[y][wp], s * fc);
    return ExteriorPoly(std::move(out));
  }

  /// Linear extension to Y ∈ g given by coordinates.
  [[nodiscard]] ExteriorPoly act(const Vector& y, const ExteriorPoly& f) const {
    ExteriorPoly out;
    for (std::size_t i = 0; i < y.size(); ++i)
      if (!is_zero(y[i])) out += y[i] * act(i, f);
    return out;
  }

 private:
  const MaskTerms& rmul(Mask m, std::size_t t) const {
    auto& slot = table_[m * g_.dim() + t];
    if (slot) return *slot;
    MaskTerms out;
    if (t < ne_) {
      // X_m E ≡ [X_m, E] = Σ prefix·[X_p, E]·suffix, since E·(anything) ≡ 0.
      auto pos = bits_of(m);
      for (std::size_t p = 0; p < pos.size(); ++p) {
        Mask prefix = 0;
        for (std::size_t q = 0; q < p; ++q) prefix |= Mask(1) << pos[q];
        MaskTerms el;
        for (const auto& [c, v] : g_.bracket(ne_ + pos[p], t)) add_into(el, rmul(prefix, c), v);
        for (std::size_t q = p + 1; q < pos.size(); ++q) el = rmul(el, ne_ + pos[q]);
        add_into(out, el, 1);
      }
    } else {
      const int k = static_cast<int>(t - ne_);
      if (m == 0 || k > highest_bit(m)) {
        add_into(out, m | (Mask(1) << k), 1);
      } else {
        const int l = highest_bit(m);
        const Mask mp = m & ~(Mask(1) << l);
        const std::size_t xl = ne_ + l;
        if (k == l) {
          for (const auto& [c, v] : g_.bracket(xl, xl)) add_into(out, rmul(mp, c), v / 2);
        } else {
          add_into(out, rmul(rmul(mp, t), xl), -1);
          for (const auto& [c, v] : g_.bracket(xl, t)) add_into(out, rmul(mp, c), v);
        }
      }
    }
    slot = std::move(out);
    return *slot;
  }

  LieSuperalgebra g_;
  std::size_t ne_, no_;
  std::vector<Mask> masks_;
  // Filled during construction only; read-only afterwards.
  mutable std::vector<std::optional<MaskTerms>> table_;
  std::vector<MaskTerms> gamma_;
  std::vector<std::vector<MaskTerms>> transposed_;
};

/// f evaluated on u: decompose u = Σ c·z·γ(ω) and sum c·ε(z)·<f, ω>.
inline Scalar pair_at_identity(const Envelope& env, const ExteriorPoly& f, const PBWElement& u) {
  Scalar total = 0;
  for (const auto& t : env.decompose_left_even(u)) {
    Scalar fc = f.coefficient(t.mask);
    if (is_zero(fc)) continue;
    total += t.coefficient * env.augmentation(t.even_factor) * fc;
  }
  return total;
}

inline ExteriorPoly field_action(const ExteriorAction& act, std::size_t y, const ExteriorPoly& f) {
  return act.act(y, f);
}

inline ExteriorPoly field_action(const ExteriorAction& act, const Vector& y, const ExteriorPoly& f) {
  return act.act(y, f);
}

// ---------------------------------------------------------------------------
// Fields: Λ(g1*) ⊗ V

enum class TargetSpace { Full, Quotient };

inline const char* to_string(TargetSpace t) { return t == TargetSpace::Full ? "full" : "quotient"; }

struct FieldKey {
  Mask mask = 0;
  std::size_t target = 0;

  friend bool operator<(const FieldKey& a, const FieldKey& b) {
    if (a.mask != b.mask) return MaskOrder{}(a.mask, b.mask);
    return a.target < b.target;
  }
  friend bool operator==(const FieldKey&, const FieldKey&) = default;
};

using FieldTerms = std::map<FieldKey, Scalar>;

inline void add_into(FieldTerms& t, const FieldKey& k, const Scalar& c) {
  if (is_zero(c)) return;
  auto [it, inserted] = t.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (is_zero(it->second)) t.erase(it);
  }
}

/// Σ f^a ⊗ T_a with T_a running over g (Full) or the complement basis of
/// g/h (Quotient).
class ExteriorField {
 public:
  ExteriorField(TargetSpace tag, std::size_t target_dim) : tag_(tag), target_dim_(target_dim) {}

  [[nodiscard]] TargetSpace tag() const { return tag_; }
  [[nodiscard]] std::size_t target_dim() const { return target_dim_; }
  [[nodiscard]] const FieldTerms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }

  void add(Mask m, std::size_t target, const Scalar& c) {
    if (target >= target_dim_) throw std::out_of_range("field target index out of range");
    add_into(terms_, FieldKey{m, target}, c);
  }
  [[nodiscard]] Scalar coefficient(Mask m, std::size_t target) const {
    auto it = terms_.find({m, target});
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  /// Coefficient polynomial f^a of target a.
  [[nodiscard]] ExteriorPoly component(std::size_t target) const {
    ExteriorPoly f;
    for (const auto& [k, c] : terms_)
      if (k.target == target) f.add(k.mask, c);
    return f;
  }

  ExteriorField& operator+=(const ExteriorField& o) {
    check(o);
    for (const auto& [k, c] : o.terms_) add_into(terms_, k, c);
    return *this;
  }
  ExteriorField& operator-=(const ExteriorField& o) {
    check(o);
    for (const auto& [k, c] : o.terms_) add_into(terms_, k, -c);
    return *this;
  }
  friend ExteriorField operator+(ExteriorField a, const ExteriorField& b) { return a += b; }
  friend ExteriorField operator-(ExteriorField a, const ExteriorField& b) { return a -= b; }
  friend ExteriorField operator*(const Scalar& s, const ExteriorField& a) {
    ExteriorField out(a.tag_, a.target_dim_);
    for (const auto& [k, c] : a.terms_) add_into(out.terms_, k, s * c);
    return out;
  }
  friend bool operator==(const ExteriorField&, const ExteriorField&) = default;

 private:
  void check(const ExteriorField& o) const {
    if (o.tag_ != tag_ || o.target_dim_ != target_dim_)
      throw std::invalid_argument("exterior fields live in different spaces");
  }
  TargetSpace tag_;
  std::size_t target_dim_;
  FieldTerms terms_;
};

/// The g-module (Full) or h-module (Quotient) Λ(g1*) ⊗ V with
///   Y·(f ⊗ T) = Y(f) ⊗ T + (-1)^{p(Y)p(f)} f ⊗ π[Y, T].
/// In the Quotient space π[Y, T] only depends on T mod h when Y ∈ h.
class FieldModule {
 public:
  static FieldModule full(std::shared_ptr<const ExteriorAction> act) {
    const auto& g = act->algebra();
    FieldModule fm(std::move(act), TargetSpace::Full);
    for (std::size_t i = 0; i < g.dim(); ++i) {
      fm.targets_.push_back(i);
      fm.target_parity_.push_back(g.parity(i));
    }
    fm.tabulate([&](const Vector& v) { return v; });
    return fm;
  }

  static FieldModule quotient(std::shared_ptr<const ExteriorAction> act,
                              const SubalgebraEmbedding& h) {
    const auto& g = act->algebra();
    if (!(h.parent() == g)) throw std::invalid_argument("subalgebra of a different algebra");
    FieldModule fm(std::move(act), TargetSpace::Quotient);
    for (auto i : h.complement()) {
      fm.targets_.push_back(i);
      fm.target_parity_.push_back(g.parity(i));
    }
    fm.projection_ = h.projection();
    fm.tabulate([&](const Vector& v) { return h.project(v); });
    return fm;
  }

  [[nodiscard]] TargetSpace tag() const { return tag_; }
  [[nodiscard]] std::size_t target_dim() const { return targets_.size(); }
  [[nodiscard]] const ExteriorAction& action() const { return *act_; }
  [[nodiscard]] const LieSuperalgebra& algebra() const { return act_->algebra(); }
  /// Basis index in g of target a (the complement element for Quotient).
  [[nodiscard]] std::size_t target_generator(std::size_t a) const { return targets_[a]; }
  [[nodiscard]] int target_parity(std::size_t a) const { return target_parity_[a]; }
  [[nodiscard]] ExteriorField zero() const { return ExteriorField(tag_, targets_.size()); }

  [[nodiscard]] int term_parity(const FieldKey& k) const {
    return (popcount(k.mask) + target_parity_[k.target]) & 1;
  }

  /// Image of an element of g in V.
  [[nodiscard]] Vector to_target(const Vector& v) const {
    return tag_ == TargetSpace::Full ? v : detail::apply(projection_, v);
  }

  /// Projects a Full field to this (Quotient) space; identity for Full.
  [[nodiscard]] ExteriorField project(const ExteriorField& w) const {
    if (w.tag() != TargetSpace::Full || w.target_dim() != algebra().dim())
      throw std::invalid_argument("project expects a field over g");
    if (tag_ == TargetSpace::Full) return w;
    ExteriorField out = zero();
    for (const auto& [k, c] : w.terms()) {
      for (std::size_t a = 0; a < targets_.size(); ++a) {
        const Scalar& p = projection_[a][k.target];
        if (!is_zero(p)) out.add(k.mask, a, c * p);
      }
    }
    return out;
  }

  /// Lift through the complement basis (T̄_a ↦ T_a).
  [[nodiscard]] ExteriorField lift(const ExteriorField& w) const {
    check(w);
    ExteriorField out(TargetSpace::Full, algebra().dim());
    for (const auto& [k, c] : w.terms()) out.add(k.mask, targets_[k.target], c);
    return out;
  }

  /// Action of the basis generator T_y.
  [[nodiscard]] ExteriorField act(std::size_t y, const ExteriorField& w) const {
    check(w);
    const auto& g = algebra();
    ExteriorField out = zero();
    const int py = g.parity(y);
    std::map<std::size_t, ExteriorPoly> by_target;
    for (const auto& [k, c] : w.terms()) by_target[k.target].add(k.mask, c);
    for (const auto& [a, f] : by_target) {
      ExteriorPoly r = act_->act(y, f);
      for (const auto& [m, c] : r.terms()) out.add(m, a, c);
    }
    for (const auto& [k, c] : w.terms()) {
      Scalar s = (py && (popcount(k.mask) & 1)) ? Scalar(-c) : Scalar(c);
      for (const auto& [b, v] : ad_[y][k.target]) out.add(k.mask, b, s * v);
    }
    return out;
  }

  /// Linear extension to Y ∈ g.
  [[nodiscard]] ExteriorField act(const Vector& y, const ExteriorField& w) const {
    ExteriorField out = zero();
    for (std::size_t i = 0; i < y.size(); ++i)
      if (!is_zero(y[i])) out += y[i] * act(i, w);
    return out;
  }

  void check(const ExteriorField& w) const {
    if (w.tag() != tag_ || w.target_dim() != targets_.size())
      throw std::invalid_argument(std::string("field does not live in the ") + to_string(tag_) +
                                  " space");
  }

 private:
  FieldModule(std::shared_ptr<const ExteriorAction> act, TargetSpace tag)
      : act_(std::move(act)), tag_(tag) {}

  void tabulate(const std::function<Vector(const Vector&)>& to_v) {
    const auto& g = algebra();
    ad_.assign(g.dim(), std::vector<Combination>(targets_.size()));
    for (std::size_t y = 0; y < g.dim(); ++y)
      for (std::size_t a = 0; a < targets_.size(); ++a)
        ad_[y][a] = to_combination(to_v(g.bracket(g.unit(y), g.unit(targets_[a]))));
  }

  std::shared_ptr<const ExteriorAction> act_;
  TargetSpace tag_;
  std::vector<std::size_t> targets_;
  std::vector<int> target_parity_;
  std::vector<Vector> projection_;
  std::vector<std::vector<Combination>> ad_;  // ad_[y][a] = π[T_y, T_a]
};

inline ExteriorField module_action(const FieldModule& fm, const Vector& y, const ExteriorField& w) {
  return fm.act(y, w);
}

/// Vector field w = Σ f^a T_a (Full) applied to an exterior polynomial:
/// w(f) = Σ f^a · T_a(f).
inline ExteriorPoly apply_field(const ExteriorAction& act, const ExteriorField& w,
                                const ExteriorPoly& f) {
  if (w.tag() != TargetSpace::Full) throw std::invalid_argument("apply_field needs a field over g");
  ExteriorPoly out;
  std::map<std::size_t, ExteriorPoly> by_target;
  for (const auto& [k, c] : w.terms()) by_target[k.target].add(k.mask, c);
  for (const auto& [a, coeff] : by_target) out += product(coeff, act.act(a, f));
  return out;
}

// ---------------------------------------------------------------------------
// Linear systems over fields

enum class ParityFilter { Even, Odd, Any };

/// Basis fields ε^ω ⊗ T_a passing the filters, in (mask order, target) order.
inline std::vector<FieldKey> field_columns(const FieldModule& fm, const std::set<int>& degrees,
                                           ParityFilter parity) {
  std::vector<FieldKey> cols;
  for (Mask m : fm.action().masks()) {
    if (!degrees.empty() && !degrees.count(popcount(m))) continue;
    for (std::size_t a = 0; a < fm.target_dim(); ++a) {
      FieldKey k{m, a};
      int p = fm.term_parity(k);
      if (parity == ParityFilter::Even && p != 0) continue;
      if (parity == ParityFilter::Odd && p != 1) continue;
      cols.push_back(k);
    }
  }
  return cols;
}

/// Rows of the stacked system {Y·(Σ x_c col_c) = -Y·offset : Y ∈ acting}. The
/// right-hand side goes in column cols.size() when `offset` is given.
/// Assembly is split across `threads` workers by acting element; rows are
/// emitted in (acting element, field key) order regardless.
inline std::vector<SparseRow> assemble_rows(const FieldModule& fm, const std::vector<Vector>& acting,
                                            const std::vector<FieldKey>& cols,
                                            const std::optional<ExteriorField>& offset,
                                            unsigned threads = 1) {
  std::vector<std::vector<SparseRow>> blocks(acting.size());
  auto work = [&](std::size_t yi) {
    std::map<FieldKey, std::vector<SparseRow::Entry>> rows;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      ExteriorField basis = fm.zero();
      basis.add(cols[c].mask, cols[c].target, 1);
      ExteriorField image = fm.act(acting[yi], basis);
      for (const auto& [k, v] : image.terms()) rows[k].emplace_back(c, v);
    }
    if (offset) {
      ExteriorField image = fm.act(acting[yi], *offset);
      for (const auto& [k, v] : image.terms()) rows[k].emplace_back(cols.size(), -v);
    }
    for (auto& [k, entries] : rows) {
      auto r = SparseRow::from_entries(std::move(entries));
      if (!r.empty()) blocks[yi].push_back(std::move(r));
    }
  };
  threads = std::max(1u, threads);
  if (threads == 1 || acting.size() < 2) {
    for (std::size_t i = 0; i < acting.size(); ++i) work(i);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < acting.size(); i += threads) work(i);
      });
  }
  std::vector<SparseRow> out;
  for (auto& b : blocks)
    for (auto& r : b) out.push_back(std::move(r));
  return out;
}

inline ExteriorField field_from_columns(const FieldModule& fm, const std::vector<FieldKey>& cols,
                                        const Vector& x) {
  ExteriorField w = fm.zero();
  for (std::size_t c = 0; c < cols.size(); ++c)
    if (!is_zero(x[c])) w.add(cols[c].mask, cols[c].target, x[c]);
  return w;
}

/// Which part of h the invariants are taken under.
enum class InvarianceAlgebra { Whole, EvenPart };

/// Joint kernel of the action of the chosen invariance algebra on the
/// filtered subspace of Λ(g1*) ⊗ V. Basis in reduced echelon form over the
/// column order of field_columns.
inline std::vector<ExteriorField> invariant_subspace(const FieldModule& fm,
                                                     const SubalgebraEmbedding& h,
                                                     const std::set<int>& degrees,
                                                     ParityFilter parity,
                                                     InvarianceAlgebra which = InvarianceAlgebra::Whole,
                                                     unsigned threads = 1) {
  const auto& acting = which == InvarianceAlgebra::Whole ? h.vectors() : h.even_part();
  auto cols = field_columns(fm, degrees, parity);
  Echelon e(cols.size());
  for (auto& r : assemble_rows(fm, acting, cols, std::nullopt, threads)) e.insert(std::move(r));
  std::vector<ExteriorField> out;
  for (const auto& x : e.kernel()) out.push_back(field_from_columns(fm, cols, x));
  return out;
}

using RankVector = std::vector<std::size_t>;

inline std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Entry p: dim Λ^p(g1) − dim(Λ^{p−1}(g1) ∧ h1).
inline RankVector split_model_ranks(const SubalgebraEmbedding& h) {
  const auto& g = h.parent();
  const int m = static_cast<int>(g.dim_odd());
  std::vector<std::vector<std::pair<int, Scalar>>> odd_vectors;
  for (const auto& v : h.odd_part()) {
    std::vector<std::pair<int, Scalar>> c;
    for (int k = 0; k < m; ++k)
      if (!is_zero(v[g.odd_generator(k)])) c.emplace_back(k, v[g.odd_generator(k)]);
    odd_vectors.push_back(std::move(c));
  }
  RankVector ranks(static_cast<std::size_t>(m) + 1, 0);
  ranks[0] = 1;
  auto masks = ordered_masks(m);
  for (int p = 1; p <= m; ++p) {
    std::map<Mask, std::size_t> col;
    for (Mask w : masks)
      if (popcount(w) == p) col.emplace(w, col.size());
    Echelon e(col.size());
    for (Mask s : masks) {
      if (popcount(s) != p - 1) continue;
      for (const auto& y : odd_vectors) {
        std::vector<SparseRow::Entry> entries;
        for (const auto& [k, c] : y) {
          int sg = wedge_sign(s, Mask(1) << k);
          if (sg) entries.emplace_back(col.at(s | (Mask(1) << k)), sg * c);
        }
        e.insert(SparseRow::from_entries(std::move(entries)));
      }
    }
    ranks[p] = binomial(m, p) - e.rank();
  }
  return ranks;
}

}  // namespace liesplit
