#pragma once

// Left invariant grading operators w = v + χ and their compatibility with h.
//
// v = Σ ε^k ⊗ X_k is the canonical operator. A left invariant grading form is
// an even field whose correction χ = w − v only has terms of exterior degree
// at least two. w is compatible with h when its image w̄ in Λ(g1*) ⊗ g/h is
// h-invariant.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "liesplit/exterior.hpp"
#include "liesplit/subalgebra.hpp"

namespace liesplit {

inline ExteriorField canonical_operator(const LieSuperalgebra& g) {
  ExteriorField v(TargetSpace::Full, g.dim());
  for (std::size_t k = 0; k < g.dim_odd(); ++k) v.add(Mask(1) << k, g.odd_generator(k), 1);
  return v;
}

struct GradingFormCheck {
  bool ok = true;
  std::vector<FieldKey> offending;  // terms of w − v that are not allowed
};

/// w − v must be even with every term of exterior degree ≥ 2.
inline GradingFormCheck is_left_invariant_grading_form(const LieSuperalgebra& g,
                                                       const ExteriorField& w) {
  if (w.tag() != TargetSpace::Full || w.target_dim() != g.dim())
    throw std::invalid_argument("grading form must be a field over g");
  GradingFormCheck r;
  ExteriorField chi = w - canonical_operator(g);
  for (const auto& [k, c] : chi.terms()) {
    int deg = popcount(k.mask);
    int p = (deg + g.parity(k.target)) & 1;
    if (p != 0 || deg < 2) r.offending.push_back(k);
  }
  r.ok = r.offending.empty();
  return r;
}

struct CompatibilityReport {
  bool compatible = true;
  // (index of the spanning vector of h, residual Y·w̄ in the quotient space)
  std::vector<std::pair<std::size_t, ExteriorField>> violations;
};

inline CompatibilityReport check_compatibility(const FieldModule& quotient,
                                               const SubalgebraEmbedding& h,
                                               const ExteriorField& w) {
  if (quotient.tag() != TargetSpace::Quotient)
    throw std::invalid_argument("compatibility is checked in the quotient space");
  ExteriorField wbar = w.tag() == TargetSpace::Full ? quotient.project(w) : w;
  CompatibilityReport r;
  for (std::size_t i = 0; i < h.dim(); ++i) {
    ExteriorField res = quotient.act(h.vectors()[i], wbar);
    if (!res.is_zero()) r.violations.emplace_back(i, std::move(res));
  }
  r.compatible = r.violations.empty();
  return r;
}

struct SolveOptions {
  unsigned threads = 1;
};

/// Affine space of solutions of {Y·(base + χ) = 0 : Y ∈ acting} with χ
/// ranging over even fields of exterior degree ≥ 2.
struct GradingSolutionSpace {
  TargetSpace space = TargetSpace::Quotient;
  bool feasible = false;
  std::optional<ExteriorField> particular;  // base + χ
  std::vector<ExteriorField> homogeneous;   // solutions of the homogeneous system
  std::size_t dimension = 0;
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  std::size_t rank = 0;
  std::size_t augmented_rank = 0;
  std::optional<ExteriorField> lift;  // v + lifted correction, a full grading form
};

inline std::vector<FieldKey> correction_columns(const FieldModule& fm) {
  std::vector<FieldKey> cols;
  for (auto& k : field_columns(fm, {}, ParityFilter::Even))
    if (popcount(k.mask) >= 2) cols.push_back(k);
  return cols;
}

inline GradingSolutionSpace solve_grading_system(const FieldModule& fm,
                                                 const std::vector<Vector>& acting,
                                                 const ExteriorField& base,
                                                 const SolveOptions& opt = {}) {
  fm.check(base);
  auto cols = correction_columns(fm);
  auto rows = assemble_rows(fm, acting, cols, base, opt.threads);
  GradingSolutionSpace s;
  s.space = fm.tag();
  s.unknowns = cols.size();
  s.equations = rows.size();
  Echelon e(cols.size() + 1);
  for (auto& r : rows) e.insert(std::move(r));
  s.augmented_rank = e.rank();
  auto sol = solve_augmented(e, cols.size());
  s.rank = e.rank() - (sol.feasible ? 0 : 1);
  s.feasible = sol.feasible;
  s.dimension = sol.homogeneous.size();
  for (const auto& x : sol.homogeneous) s.homogeneous.push_back(field_from_columns(fm, cols, x));
  if (sol.feasible) {
    ExteriorField chi = field_from_columns(fm, cols, sol.particular);
    s.particular = base + chi;
    s.lift = fm.tag() == TargetSpace::Full ? *s.particular
                                           : canonical_operator(fm.algebra()) + fm.lift(chi);
  }
  return s;
}

/// Condition for compatibility: w̄ = v̄ + χ̄ annihilated by h.
inline GradingSolutionSpace solve_compatible_gradings(const FieldModule& quotient,
                                                      const SubalgebraEmbedding& h,
                                                      const SolveOptions& opt = {}) {
  if (quotient.tag() != TargetSpace::Quotient)
    throw std::invalid_argument("compatible gradings are solved in the quotient space");
  return solve_grading_system(quotient, h.vectors(),
                              quotient.project(canonical_operator(h.parent())), opt);
}

/// The stronger requirement Y·w = 0 in Λ(g1*) ⊗ g for every Y ∈ h.
inline GradingSolutionSpace strict_invariance_solve(const FieldModule& full,
                                                    const SubalgebraEmbedding& h,
                                                    const SolveOptions& opt = {}) {
  if (full.tag() != TargetSpace::Full)
    throw std::invalid_argument("strict invariance is solved in the full space");
  return solve_grading_system(full, h.vectors(), canonical_operator(h.parent()), opt);
}

struct SufficientSplitReport {
  bool holds = false;
  SubspaceReport odd_brackets;     // [g1, h1]
  SubspaceReport even_part;        // h0
  SubspaceReport adjoint_kernel;   // Ker ad restricted to g1, inside g0
  SubspaceReport target;           // h0 ∩ Ker
  SubspaceReport effectiveness_ideal;
  bool effective = true;
};

/// [g1, h1] ⊂ h0 ∩ Ker(ad|g1).
inline SufficientSplitReport check_sufficient_split(const SubalgebraEmbedding& h) {
  const auto& g = h.parent();
  const std::size_t n = g.dim();
  SufficientSplitReport r;
  std::vector<Vector> brackets;
  for (std::size_t k = 0; k < g.dim_odd(); ++k)
    for (const auto& y : h.odd_part()) brackets.push_back(g.bracket(g.unit(g.odd_generator(k)), y));
  r.odd_brackets = make_report(g, brackets);
  r.even_part = make_report(g, h.even_part());
  r.adjoint_kernel = adjoint_kernel_on_odd(g);
  r.target = make_report(g, intersect(r.even_part.basis, r.adjoint_kernel.basis, n));
  r.holds = true;
  for (const auto& b : r.odd_brackets.basis)
    if (!span_contains(r.target.basis, b)) {
      r.holds = false;
      break;
    }
  r.effectiveness_ideal = largest_ideal_in(h);
  r.effective = r.effectiveness_ideal.dimension == 0;
  return r;
}

enum class Verdict {
  SplitBySufficientCondition,
  SplitByGrading,
  NoCompatibleLeftInvariantGrading,
};

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::SplitBySufficientCondition: return "SPLIT_BY_SUFFICIENT_CONDITION";
    case Verdict::SplitByGrading: return "SPLIT_BY_GRADING";
    case Verdict::NoCompatibleLeftInvariantGrading: return "NO_COMPATIBLE_LEFT_INVARIANT_GRADING";
  }
  return "?";
}

struct Assumptions {
  bool connected_groups = true;
};

struct SplitVerdict {
  Verdict verdict = Verdict::NoCompatibleLeftInvariantGrading;
  bool conclusive = false;  // the negative verdict says nothing about non-invariant gradings
  SufficientSplitReport sufficient;
  std::optional<GradingSolutionSpace> solutions;
  std::optional<ExteriorField> witness;  // a compatible full grading form, when one is known
  Assumptions assumptions;
};

struct VerdictContext {
  std::shared_ptr<const ExteriorAction> action;
  SolveOptions options;
  Assumptions assumptions;
};

inline SplitVerdict full_verdict(const SubalgebraEmbedding& h, const VerdictContext& ctx = {}) {
  const auto& g = h.parent();
  SplitVerdict out;
  out.assumptions = ctx.assumptions;
  out.sufficient = check_sufficient_split(h);
  if (out.sufficient.holds) {
    out.verdict = Verdict::SplitBySufficientCondition;
    out.conclusive = true;
    out.witness = canonical_operator(g);
    return out;
  }
  auto act = ctx.action ? ctx.action : std::make_shared<const ExteriorAction>(g);
  auto fm = FieldModule::quotient(act, h);
  out.solutions = solve_compatible_gradings(fm, h, ctx.options);
  if (out.solutions->feasible) {
    out.verdict = Verdict::SplitByGrading;
    out.conclusive = true;
    out.witness = out.solutions->lift;
  } else {
    out.verdict = Verdict::NoCompatibleLeftInvariantGrading;
    out.conclusive = false;
  }
  return out;
}

}  // namespace liesplit
