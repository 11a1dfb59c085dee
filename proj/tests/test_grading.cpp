#include <gtest/gtest.h>

#include <fstream>

#include "common.hpp"

using namespace liesplit;
using namespace testing_support;

namespace {

struct Modules {
  std::shared_ptr<const ExteriorAction> act;
  FieldModule full, quotient;
  Modules(const SubalgebraEmbedding& h)
      : act(std::make_shared<const ExteriorAction>(h.parent())),
        full(FieldModule::full(act)),
        quotient(FieldModule::quotient(act, h)) {}
};

Json oracle_fixture() {
  std::ifstream in(LIESPLIT_SOURCE_DIR "/tests/oracle/gl22_p11.json");
  return Json::parse(in);
}

}  // namespace

TEST(Canonical, Examples) {
  EXPECT_TRUE(canonical_operator(catalog_abelian(2, 0)).is_zero());
  auto ab = catalog_abelian(0, 2);
  ExteriorField want(TargetSpace::Full, 2);
  want.add(0b01, 0, 1);
  want.add(0b10, 1, 1);
  EXPECT_EQ(canonical_operator(ab), want);
  auto g = gl11_abxy();
  auto v = canonical_operator(g);
  EXPECT_EQ(v.terms().size(), 2u);
  EXPECT_EQ(v.coefficient(0b01, 2), 1);
  EXPECT_EQ(v.coefficient(0b10, 3), 1);
}

TEST(GradingForm, Examples) {
  auto g = gl11_abxy();
  auto v = canonical_operator(g);
  EXPECT_TRUE(is_left_invariant_grading_form(g, v).ok);
  auto w = v;
  w.add(0b11, 0, 1);  // ε^x ε^y ⊗ a
  EXPECT_TRUE(is_left_invariant_grading_form(g, w).ok);
  auto bad = v;
  bad.add(0b01, 0, 1);  // ε^x ⊗ a, odd and degree one
  auto r = is_left_invariant_grading_form(g, bad);
  EXPECT_FALSE(r.ok);
  ASSERT_EQ(r.offending.size(), 1u);
  EXPECT_EQ(r.offending[0], (FieldKey{0b01, 0}));
  auto low = v;
  low.add(0, 0, 1);  // constant even term
  EXPECT_FALSE(is_left_invariant_grading_form(g, low).ok);
}

TEST(Compatibility, Examples) {
  auto g = gl11_abxy();
  auto zero = SubalgebraEmbedding(g, {});
  Modules s0(zero);
  auto w = canonical_operator(g);
  w.add(0b11, 0, 5);
  EXPECT_TRUE(check_compatibility(s0.quotient, zero, w).compatible);

  auto h0 = SubalgebraEmbedding::from_labels(g, {"a", "b"});
  Modules s1(h0);
  EXPECT_TRUE(check_compatibility(s1.quotient, h0, canonical_operator(g)).compatible);

  auto g22 = catalog_gl(2, 2);
  auto p = catalog_parabolic(g22, 2, 2, 1, 1);
  Modules s2(p);
  auto r = check_compatibility(s2.quotient, p, canonical_operator(g22));
  EXPECT_FALSE(r.compatible);
  ASSERT_FALSE(r.violations.empty());
  EXPECT_FALSE(r.violations.front().second.is_zero());
}

TEST(Solve, ZeroSubalgebra) {
  auto g = catalog_gl(2, 1);
  auto zero = SubalgebraEmbedding(g, {});
  Modules s(zero);
  auto sol = solve_compatible_gradings(s.quotient, zero);
  ASSERT_TRUE(sol.feasible);
  EXPECT_EQ(*sol.particular, s.quotient.project(canonical_operator(g)));
  EXPECT_EQ(sol.dimension, correction_columns(s.quotient).size());
  EXPECT_EQ(sol.dimension, sol.homogeneous.size());
}

TEST(Solve, OrdinaryLieGroupIsSplit) {
  auto g = gl11_abxy();
  auto h0 = SubalgebraEmbedding::from_labels(g, {"a", "b"});
  Modules s(h0);
  auto sol = solve_compatible_gradings(s.quotient, h0);
  ASSERT_TRUE(sol.feasible);
  auto vbar = s.quotient.project(canonical_operator(g));
  for (const auto& y : h0.vectors()) EXPECT_TRUE(s.quotient.act(y, vbar).is_zero());
  for (const auto& y : h0.vectors()) EXPECT_TRUE(s.quotient.act(y, *sol.particular).is_zero());
}

TEST(Solve, SuperGrassmannianMatchesOracle) {
  auto g = catalog_gl(2, 2);
  auto p = catalog_parabolic(g, 2, 2, 1, 1);
  Modules s(p);
  auto sol = solve_compatible_gradings(s.quotient, p);
  auto fx = oracle_fixture();
  EXPECT_FALSE(sol.feasible);
  EXPECT_EQ(sol.unknowns, fx["unknowns"].get<std::size_t>());
  EXPECT_EQ(sol.rank, fx["rank_homogeneous"].get<std::size_t>());
  EXPECT_EQ(sol.augmented_rank, fx["rank_augmented"].get<std::size_t>());
  EXPECT_EQ(sol.dimension, fx["solution_dimension"].get<std::size_t>());
}

TEST(Solve, SolutionsSatisfyTheSystem) {
  auto g = catalog_gl(2, 1);
  for (auto [r, sflag] : {std::pair{1, 0}, std::pair{1, 1}}) {
    auto h = catalog_parabolic(g, 2, 1, r, sflag);
    Modules s(h);
    auto sol = solve_compatible_gradings(s.quotient, h);
    ASSERT_TRUE(sol.feasible);
    for (const auto& y : h.vectors()) {
      EXPECT_TRUE(s.quotient.act(y, *sol.particular).is_zero());
      for (const auto& k : sol.homogeneous) EXPECT_TRUE(s.quotient.act(y, k).is_zero());
    }
    EXPECT_TRUE(check_compatibility(s.quotient, h, *sol.lift).compatible);
    EXPECT_TRUE(is_left_invariant_grading_form(g, *sol.lift).ok);
  }
}

TEST(Solve, ThreadCountDoesNotChangeResult) {
  auto g = catalog_gl(2, 2);
  auto p = catalog_parabolic(g, 2, 2, 1, 0);
  Modules s(p);
  auto a = solve_compatible_gradings(s.quotient, p, {1});
  auto b = solve_compatible_gradings(s.quotient, p, {3});
  EXPECT_EQ(a.feasible, b.feasible);
  EXPECT_EQ(a.particular, b.particular);
  EXPECT_EQ(a.homogeneous, b.homogeneous);
  EXPECT_EQ(a.rank, b.rank);
}

TEST(Strict, Examples) {
  auto g = gl11_abxy();
  auto zero = SubalgebraEmbedding(g, {});
  Modules s0(zero);
  EXPECT_TRUE(strict_invariance_solve(s0.full, zero).feasible);

  auto central = SubalgebraEmbedding(g, {Vector{1, 1, 0, 0}});
  Modules s1(central);
  auto sol = strict_invariance_solve(s1.full, central);
  ASSERT_TRUE(sol.feasible);
  EXPECT_TRUE(s1.full.act(Vector{1, 1, 0, 0}, canonical_operator(g)).is_zero());
  EXPECT_EQ(*sol.particular, canonical_operator(g));

  auto odd = SubalgebraEmbedding::from_labels(g, {"x", "a", "b"});
  ASSERT_TRUE(validate_subalgebra(odd).empty());
  Modules s2(odd);
  EXPECT_FALSE(strict_invariance_solve(s2.full, odd).feasible);
}

TEST(Sufficient, Examples) {
  auto g = gl11_abxy();
  EXPECT_TRUE(check_sufficient_split(SubalgebraEmbedding::from_labels(g, {"a", "b"})).holds);
  auto whole = check_sufficient_split(SubalgebraEmbedding::from_labels(g, {"a", "b", "x", "y"}));
  EXPECT_TRUE(whole.holds);
  EXPECT_EQ(whole.odd_brackets.dimension, 1u);
  EXPECT_EQ(whole.odd_brackets.basis[0], (Vector{1, 1, 0, 0}));
  EXPECT_EQ(whole.target.basis, whole.odd_brackets.basis);

  auto o = catalog_osp12();
  auto r = check_sufficient_split(SubalgebraEmbedding::from_labels(o, {"h", "e", "f", "x", "y"}));
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.odd_brackets.dimension, 3u);
  EXPECT_EQ(r.adjoint_kernel.dimension, 0u);
}

TEST(Verdict, Examples) {
  for (const auto& g : catalog_algebras()) {
    auto v = full_verdict(SubalgebraEmbedding(g, {}));
    EXPECT_EQ(v.verdict, Verdict::SplitBySufficientCondition) << g.name();
  }
  auto g = gl11_abxy();
  EXPECT_EQ(full_verdict(SubalgebraEmbedding::from_labels(g, {"a", "b"})).verdict,
            Verdict::SplitBySufficientCondition);
  auto g22 = catalog_gl(2, 2);
  auto v = full_verdict(catalog_parabolic(g22, 2, 2, 1, 1));
  EXPECT_EQ(v.verdict, Verdict::NoCompatibleLeftInvariantGrading);
  EXPECT_FALSE(v.conclusive);
  ASSERT_TRUE(v.solutions.has_value());
  EXPECT_FALSE(v.solutions->feasible);
  EXPECT_TRUE(v.assumptions.connected_groups);
}

TEST(Verdict, GradingWitnessesAreSound) {
  std::size_t seen = 0;
  for (auto [m, n] : {std::pair{2, 1}, std::pair{1, 2}, std::pair{2, 2}}) {
    auto g = catalog_gl(m, n);
    for (std::size_t r = 0; r <= std::size_t(m); ++r)
      for (std::size_t s = 0; s <= std::size_t(n); ++s) {
        auto h = catalog_parabolic(g, m, n, r, s);
        auto v = full_verdict(h);
        if (v.verdict == Verdict::SplitByGrading) {
          ++seen;
          ASSERT_TRUE(v.solutions && v.solutions->feasible);
          Modules st(h);
          EXPECT_TRUE(check_compatibility(st.quotient, h, *v.witness).compatible);
          EXPECT_TRUE(is_left_invariant_grading_form(g, *v.witness).ok);
        }
        if (v.verdict == Verdict::NoCompatibleLeftInvariantGrading)
          EXPECT_FALSE(v.solutions->feasible);
      }
  }
  EXPECT_GT(seen, 0u);
}

// The lowest order part of a grading operator multiplies degree p by a
// constant. With Y(f)(u) = (-1)^{p(Y)} f(uY) one gets X_k(ε^k) = -1, so the
// constant is -p.
TEST(Koszul, LowestOrderTermIsMultiplication) {
  for (auto [m, n, r, s] : {std::array{2, 1, 1, 0}, std::array{2, 1, 1, 1}, std::array{1, 2, 1, 1},
                            std::array{1, 1, 0, 0}}) {
    auto g = catalog_gl(m, n);
    auto h = catalog_parabolic(g, m, n, r, s);
    Modules st(h);
    auto sol = solve_compatible_gradings(st.quotient, h);
    ASSERT_TRUE(sol.feasible);
    std::vector<ExteriorField> ws{*sol.lift};
    for (const auto& k : sol.homogeneous) ws.push_back(*sol.lift + st.quotient.lift(k));
    for (const auto& w : ws)
      for (Mask f : st.act->masks()) {
        int p = popcount(f);
        auto image = apply_field(*st.act, w, ExteriorPoly::basis(f)).degree_part(p);
        EXPECT_EQ(image, ExteriorPoly::basis(f, -p));
      }
  }
}

TEST(Properties, SufficientImpliesFeasible) {
  Rng rng(61);
  int checked = 0, sufficient = 0;
  auto algebras = catalog_algebras();
  for (int trial = 0; checked < 60 && trial < 2000; ++trial) {
    const auto& g = algebras[random_index(rng, algebras.size())];
    auto h = random_subalgebra(rng, g, false);
    if (largest_ideal_in(h).dimension != 0) continue;
    ++checked;
    if (!check_sufficient_split(h).holds) continue;
    ++sufficient;
    Modules st(h);
    EXPECT_TRUE(solve_compatible_gradings(st.quotient, h).feasible);
    EXPECT_TRUE(check_compatibility(st.quotient, h, canonical_operator(g)).compatible);
  }
  EXPECT_GE(checked, 50);
  EXPECT_GT(sufficient, 0);
}

TEST(Properties, StrictInvarianceForcesEvenSubalgebra) {
  Rng rng(71);
  int odd_cases = 0;
  auto algebras = catalog_algebras();
  for (int trial = 0; odd_cases < 20 && trial < 2000; ++trial) {
    const auto& g = algebras[random_index(rng, algebras.size())];
    if (g.dim_even() > 4) continue;  // keeps the full system small
    auto h = random_subalgebra(rng, g, false);
    if (h.odd_part().empty()) continue;
    ++odd_cases;
    Modules st(h);
    EXPECT_FALSE(strict_invariance_solve(st.full, h).feasible) << g.name();
  }
  EXPECT_EQ(odd_cases, 20);
}

TEST(Properties, MonotoneInH) {
  Rng rng(81);
  auto algebras = catalog_algebras();
  for (int trial = 0; trial < 25; ++trial) {
    const auto& g = algebras[4 + random_index(rng, 4)];
    auto small = random_subalgebra(rng, g, false);
    auto gens = small.vectors();
    gens.push_back(random_homogeneous(rng, g, static_cast<int>(random_index(rng, 2))));
    auto big = SubalgebraEmbedding(g, closure(g, gens));
    Modules s1(small), s2(big);
    auto a = solve_compatible_gradings(s1.quotient, small);
    auto b = solve_compatible_gradings(s2.quotient, big);
    if (a.feasible && b.feasible) EXPECT_LE(b.dimension, a.dimension) << g.name();
  }
}
