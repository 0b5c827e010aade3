#include <gtest/gtest.h>

#include <memory>

#include "eqrr/equivariant.hpp"
#include "eqrr/error.hpp"
#include "eqrr/families.hpp"
#include "oracles.hpp"

using eqrr::Convention;
using eqrr::EquivariantAnalysis;
using eqrr::MultiplicityVector;
using eqrr::Site;
using V = std::vector<std::int64_t>;

namespace {

const EquivariantAnalysis& klein() {
  static const EquivariantAnalysis a(eqrr::family_klein());
  return a;
}

EquivariantAnalysis fermat(int p) { return EquivariantAnalysis(eqrr::family_fermat(p)); }

// Z_n acting without fixed points on a surface of genus 1 + n (gamma - 1).
EquivariantAnalysis unramified(std::size_t n, int gamma) {
  eqrr::ActionDescription d;
  d.group = std::make_shared<const eqrr::FiniteGroup>(eqrr::cyclic_group(n));
  d.gamma = gamma;
  d.a.assign(gamma, 0);
  d.b.assign(gamma, 0);
  d.a[0] = 1;
  return EquivariantAnalysis(eqrr::validate_action(std::move(d)));
}

// (0; 4, 4, 5) in Z_5 x| Z_4, which has a rational degree-4 irreducible.
EquivariantAnalysis order20() {
  auto table = eqrr::build_metacyclic_table(5, 4, 2);
  const auto triple = eqrr::first_generating_triple(table.group(), {4, 4, 5});
  eqrr::ActionDescription d;
  d.group = table.group_ptr();
  d.table = std::move(table);
  d.c = {{(*triple)[0], 4}, {(*triple)[1], 4}, {(*triple)[2], 5}};
  return EquivariantAnalysis(eqrr::validate_action(std::move(d)));
}

}  // namespace

TEST(ChevalleyWeil, Klein) {
  EXPECT_EQ(klein().chevalley_weil().values, (V{0, 0, 0, 1, 0}));
  EXPECT_EQ(klein().chevalley_weil().kind, eqrr::MultiplicityKind::a);
}

TEST(ChevalleyWeil, Fermat) {
  for (int p : {5, 7, 11}) {
    const auto a = fermat(p).chevalley_weil();
    ASSERT_EQ(a.size(), static_cast<std::size_t>(p));
    EXPECT_EQ(a[0], 0);
    for (int j = 1; j <= p - 2; ++j) EXPECT_EQ(a[j], p - 1 - j) << "p=" << p << " j=" << j;
    EXPECT_EQ(a[p - 1], 0);
  }
}

TEST(ChevalleyWeil, Unramified) {
  const auto a = unramified(3, 2);
  EXPECT_EQ(a.action().genus(), 4);
  EXPECT_EQ(a.chevalley_weil().values, (V{2, 1, 1}));
  EXPECT_EQ(unramified(4, 1).chevalley_weil().values, (V{1, 0, 0, 0}));
}

TEST(Broughton, Examples) {
  EXPECT_EQ(klein().broughton()[3], 1);
  EXPECT_EQ(klein().broughton().values, (V{0, 0, 0, 1, 1}));
  EXPECT_EQ(unramified(3, 2).broughton().values, (V{4, 2, 2}));
  for (int p : {5, 7}) {
    const auto r = fermat(p).broughton();
    for (int j = 1; j < p; ++j) EXPECT_EQ(r[j], p - 2);
  }
}

TEST(AnalyticDual, Examples) {
  EXPECT_EQ(klein().analytic_dual().values, (V{0, 0, 0, 0, 1}));
  for (int p : {5, 7, 11}) {
    const auto d = fermat(p).analytic_dual();
    EXPECT_EQ(d[0], 0);
    for (int j = 1; j < p; ++j) EXPECT_EQ(d[j], j - 1);
  }
  // All characters of Z_2 are rational, so a* = a.
  eqrr::ActionDescription desc;
  desc.group = std::make_shared<const eqrr::FiniteGroup>(eqrr::cyclic_group(2));
  desc.c.assign(6, {1, 2});
  const EquivariantAnalysis hyperelliptic(eqrr::validate_action(desc));
  EXPECT_EQ(hyperelliptic.action().genus(), 2);
  EXPECT_EQ(hyperelliptic.analytic_dual(), MultiplicityVector({eqrr::MultiplicityKind::a_dual, V{0, 2}}));
  EXPECT_EQ(hyperelliptic.chevalley_weil().values, (V{0, 2}));
}

TEST(AnalyticDual, DualIndex) {
  EXPECT_EQ(klein().dual(3), 4u);
  EXPECT_EQ(klein().dual(1), 2u);
  EXPECT_EQ(klein().dual(0), 0u);
}

TEST(Convention, ConjugateSwapsAnalyticAndDual) {
  const EquivariantAnalysis conj(eqrr::family_klein(Convention::conjugate));
  EXPECT_EQ(conj.chevalley_weil().values, (V{0, 0, 0, 0, 1}));
  EXPECT_EQ(conj.analytic_dual().values, (V{0, 0, 0, 1, 0}));
  EXPECT_EQ(conj.broughton(), klein().broughton());
}

TEST(AbsolutelyIrreducible, Order20DegreeFour) {
  const auto a = order20();
  EXPECT_EQ(a.action().genus(), 4);  // 1 - 20 + 10 (3/4 + 3/4 + 4/5)
  const auto value = a.absolutely_irreducible_check(4);
  ASSERT_TRUE(value.has_value());
  EXPECT_EQ(*value, a.chevalley_weil()[4]);
  EXPECT_EQ(*value, a.analytic_dual()[4]);
  EXPECT_EQ(*value, 1);
  EXPECT_FALSE(a.absolutely_irreducible_check(0).has_value());
  EXPECT_FALSE(klein().absolutely_irreducible_check(3).has_value());
}

TEST(AbsolutelyIrreducible, Unramified) {
  const auto a = unramified(2, 3);
  EXPECT_EQ(a.absolutely_irreducible_check(1), 2);
}

TEST(RamificationModule, Klein) {
  const auto m = klein().ramification_module();
  EXPECT_EQ(m.reduced.values, (V{0, 1, 1, 3, 4}));
  EXPECT_EQ(m.raw.coeffs, (V{0, 21, 21, 63, 84}));

  // Oracle: sum over ramified points, i.e. |G|/m_j copies of the induced
  // module at each branch, computed with the coset formula.
  const auto& action = klein().action();
  V raw(5, 0);
  for (std::size_t j = 0; j < action.branch_count(); ++j) {
    const auto s = eqrr::stabilizer_info(action, j);
    V theta(s.order);
    for (int alpha = 0; alpha < s.order; ++alpha) theta[alpha] = alpha;
    const auto ind = oracle::brute_induced_coefficients(klein().table(), s.distinguished, theta);
    for (std::size_t v = 0; v < 5; ++v) raw[v] += static_cast<std::int64_t>(21 / s.order) * ind[v];
  }
  EXPECT_EQ(m.raw.coeffs, raw);
}

TEST(RamificationModule, FermatAndUnramified) {
  const auto m = fermat(5).ramification_module();
  EXPECT_EQ(m.reduced[0], 0);
  EXPECT_EQ(m.reduced.values, (V{0, 1, 2, 3, 4}));
  EXPECT_EQ(unramified(3, 2).ramification_module().reduced.values, (V{0, 0, 0}));
}

TEST(EquivariantDegree, FullCycleIsRegular) {
  const auto& a = klein();
  for (std::size_t j = 0; j < 3; ++j) {
    const int m = a.action().branch_points()[j].order;
    const auto d = eqrr::build_divisor(a.action(), {{Site::branch(j), m}});
    EXPECT_EQ(a.equivariant_degree(d).coeffs, a.table().degrees());
  }
}

TEST(EquivariantDegree, KleinBasic) {
  const auto& a = klein();
  const auto d = eqrr::build_divisor(a.action(), {{Site::branch(0), 1}});
  EXPECT_EQ(a.equivariant_degree(d).coeffs, (V{0, 0, 1, 1, 1}));
  EXPECT_EQ(a.degree_closed_form(d).values, (V{0, 0, 1, 1, 1}));
  // Oracle: Ind of omega^-1 from <sigma>.
  EXPECT_EQ(oracle::brute_induced_coefficients(a.table(), 7, oracle::negative_power_sum(3, 1)), (V{0, 0, 1, 1, 1}));
}

TEST(EquivariantDegree, NegativeFree) {
  const auto& a = klein();
  const auto d = eqrr::build_divisor(a.action(), {{Site::free_orbit(0), -1}});
  EXPECT_EQ(a.equivariant_degree(d).coeffs, (V{-1, -1, -1, -3, -3}));
  EXPECT_THROW(a.degree_closed_form(d), eqrr::ValidationError);
}

TEST(EquivariantDegree, NegativeBranchMatchesDefinition) {
  // r = -2 at an order-3 point: minus Ind(omega^0 + omega^1).
  const auto& a = klein();
  const auto d = eqrr::build_divisor(a.action(), {{Site::branch(0), -2}});
  const auto ind = oracle::brute_induced_coefficients(a.table(), 7, {1, 1, 0});
  V expected;
  for (auto x : ind) expected.push_back(-x);
  EXPECT_EQ(a.equivariant_degree(d).coeffs, expected);
}

TEST(Decompose, KleinBasic) {
  const auto& a = klein();
  const auto d = eqrr::build_divisor(a.action(), {{Site::branch(0), 1}});
  const auto m = a.decompose(d);
  EXPECT_EQ(m.multiplicities.values, (V{1, 0, 1, 1, 0}));
  EXPECT_EQ(m.nonspecial, eqrr::NonSpecialty::certified);
  EXPECT_EQ(m.dimension_sum, 5);
  EXPECT_EQ(m.expected_dimension, 5);
  EXPECT_FALSE(m.hypothesis_violated());
  EXPECT_EQ(a.crosscheck_lemma(d).values, (V{1, 0, 1, 1, 0}));
}

TEST(Decompose, Fermat) {
  for (int p : {5, 7, 11}) {
    const auto a = fermat(p);
    const auto d = eqrr::build_divisor(a.action(), {{Site::branch(0), p * (p - 3) + 1}});
    const auto m = a.decompose(d);
    V expected(p, 0);
    expected[0] = p - 2;
    for (int j = 1; j <= p - 3; ++j) expected[j] = p - 2 - j;
    EXPECT_EQ(m.multiplicities.values, expected) << "p=" << p;
    EXPECT_EQ(a.crosscheck_lemma(d).values, expected);
    EXPECT_EQ(m.dimension_sum, m.expected_dimension);
  }
}

TEST(Decompose, FreeOrbitOnGenusZeroQuotient) {
  const auto& a = klein();
  const auto d = eqrr::build_divisor(a.action(), {{Site::free_orbit(0), 1}});
  const auto m = a.decompose(d);
  EXPECT_EQ(m.multiplicities.values, (V{2, 1, 1, 3, 2}));
  EXPECT_EQ(m.multiplicities, a.crosscheck_lemma(d));
}

TEST(Decompose, RequiresEffectiveAndNonSpecial) {
  const auto& a = klein();
  EXPECT_THROW(a.decompose(eqrr::build_divisor(a.action(), {{Site::branch(0), -1}})), eqrr::ValidationError);
  // degree 3 <= 4: not certified
  const auto small = eqrr::build_divisor(a.action(), {{Site::branch(2), 1}});
  EXPECT_THROW(a.decompose(small), eqrr::ValidationError);
  const auto asserted = a.decompose(small, true);
  EXPECT_EQ(asserted.nonspecial, eqrr::NonSpecialty::asserted);
}

TEST(Decompose, ZeroDivisorOnRationalCurveQuotient) {
  // Zero divisor with g = 0: L(0) is the constants.
  eqrr::ActionDescription d;
  d.group = std::make_shared<const eqrr::FiniteGroup>(eqrr::cyclic_group(3));
  d.c.assign(2, {1, 3});
  d.c[1].element = 2;
  const EquivariantAnalysis a(eqrr::validate_action(d));
  ASSERT_EQ(a.action().genus(), 0);
  const auto zero = eqrr::build_divisor(a.action(), {});
  EXPECT_EQ(a.decompose(zero).multiplicities.values, (V{1, 0, 0}));
  EXPECT_EQ(a.crosscheck_lemma(zero).values, (V{1, 0, 0}));
}

TEST(Decompose, AssertedSpecialDivisorIsReported) {
  const auto a = fermat(5);
  const auto zero = eqrr::build_divisor(a.action(), {});
  const auto m = a.decompose(zero, true);
  EXPECT_TRUE(m.hypothesis_violated());
  EXPECT_EQ(m.negative, (std::vector<std::size_t>{2, 3, 4}));
  EXPECT_EQ(m.multiplicities.values, (V{1, 0, -1, -2, -3}));
}

TEST(DecomposePullback, Klein) {
  const auto& a = klein();
  const std::vector<eqrr::TermInput> base{{Site::free_orbit(0), 2}};
  const auto m = a.decompose_pullback(base);
  EXPECT_EQ(m.multiplicities.values, (V{3, 2, 2, 6, 5}));
  EXPECT_EQ(m.multiplicities, a.decompose(eqrr::pullback_divisor(a.action(), base)).multiplicities);
}

TEST(DecomposePullback, ZeroBaseOnPositiveGenusQuotient) {
  const auto a = unramified(3, 2);
  const auto m = a.decompose_pullback({}, true);
  EXPECT_EQ(m.multiplicities.values, (V{-1, -1, -1}));
  EXPECT_TRUE(m.hypothesis_violated());
}

TEST(DecomposePullback, AbsolutelyIrreducibleFormula) {
  const auto a = order20();
  for (std::int64_t alpha : {1, 2, 3}) {
    const auto m = a.decompose_pullback({{Site::free_orbit(0), alpha}}, true);
    // dim V (Deg D0 + 1 - gamma) - (1/2) sum_j (dim V - dim V^{G_j})
    std::int64_t half = 0;
    for (std::size_t j = 0; j < 3; ++j) {
      const auto s = eqrr::stabilizer_info(a.action(), j);
      half += 4 - eqrr::fixed_subspace_dim(a.table(), 4, s.subgroup);
    }
    EXPECT_EQ(m.multiplicities[4], 4 * (alpha + 1) - half / 2);
  }
}

TEST(Crosscheck, SpecialDivisorGivesEulerCharacteristic) {
  // D = 0 is special: the character path yields L(0) - H^1(O) = V_0 - a*.
  const auto& a = klein();
  const auto zero = eqrr::build_divisor(a.action(), {});
  EXPECT_EQ(a.crosscheck_lemma(zero).values, (V{1, 0, 0, 0, -1}));
}

TEST(AnalyticIdentity, HoldsOnFamilies) {
  const auto k = klein().verify_analytic_identity();
  EXPECT_TRUE(k.holds());
  EXPECT_EQ(k.lhs, klein().table().irreducible(3));
  EXPECT_TRUE(fermat(5).verify_analytic_identity().holds());
  EXPECT_TRUE(unramified(3, 2).verify_analytic_identity().holds());
  EXPECT_TRUE(order20().verify_analytic_identity().holds());
}

TEST(SiteMultiplicities, RejectsForeignDivisor) {
  const auto& a = klein();
  const auto foreign = eqrr::build_divisor(eqrr::family_klein(Convention::conjugate), {{Site::branch(0), 1}});
  EXPECT_THROW(a.decompose(foreign), eqrr::ValidationError);
}

TEST(Labels, Names) {
  EXPECT_EQ(eqrr::label(eqrr::MultiplicityKind::a_dual), "a*");
  EXPECT_EQ(eqrr::label(eqrr::MultiplicityKind::gamma_tilde), "gamma_tilde");
}
